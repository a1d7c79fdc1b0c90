#ifndef POLECALC_KLIN_HPP
#define POLECALC_KLIN_HPP

#include <map>

#include "polecalc/morphisms.hpp"

namespace polecalc {

// A finitely supported integer combination of join-morphisms with a common
// source and target. No zero coefficients are stored.
struct LinMorph {
  LatticePtr source, target;
  std::map<std::vector<int>, long long> terms;

  static LinMorph zero(LatticePtr src, LatticePtr tgt) { return LinMorph{std::move(src), std::move(tgt), {}}; }
  static LinMorph of(const JoinMorphism& f, long long c = 1);

  bool is_zero() const { return terms.empty(); }
  void add_term(const std::vector<int>& map, long long c);
  long long coeff(const std::vector<int>& map) const;
};

LinMorph lin_add(const LinMorph& u, const LinMorph& v);
LinMorph lin_sub(const LinMorph& u, const LinMorph& v);
LinMorph lin_scale(const LinMorph& u, long long c);
LinMorph lin_compose(const LinMorph& u, const LinMorph& v);  // u after v
bool lin_eq(const LinMorph& u, const LinMorph& v);

// Coefficient-wise reduction mod m, representatives in [0, m).
LinMorph reduce_mod(const LinMorph& u, long long m);

// Data attached to a surjection pi: T -> P onto a pole lattice:
// b_p = sup(pi^{-1}(p)), and per-irreducible interval ends b_e^-, b_e^+.
struct BFamily {
  JoinMorphism pi;
  std::vector<int> irr;          // Irr(P), ascending
  std::vector<char> twin_part;   // 1 where the irreducible is a twin
  std::vector<int> b_all;        // b_p for every p
  std::vector<int> b_minus, b_plus;  // parallel to irr
  int sign() const;              // (-1)^{#non-twin irreducibles}
};

BFamily b_family(const JoinMorphism& pi);

// The extension of e -> a_e, where a is parallel to bf.irr and each a_e lies
// in [b_e^-, b_e^+] of the target.
JoinMorphism j_A(const BFamily& bf, const std::vector<int>& a);

// Moebius-weighted alternating sum of the j_A over all interval families.
LinMorph j_pi(const JoinMorphism& pi);

// rho_Y keeps the irreducibles in Y and moves e to r(e) (chain part) or s(e)
// (twin part) outside Y; y_mask indexes positions in irreducibles(P).irr.
JoinMorphism rho_Y(LatticePtr p, unsigned y_mask);

// f_{chi,tau,theta} = j^chi tau theta, and the idempotent f_{pi,id,pi}.
LinMorph f_general(const JoinMorphism& chi, const Permutation& tau, const JoinMorphism& theta);
LinMorph f_idem(const JoinMorphism& pi);

// Identity of the pole part of End(T): sum of f_{pi,id,pi} over all orbit
// representatives of surjections onto pole lattices.
LinMorph e_T(LatticePtr t);

// Central idempotents of the endomorphism algebra of a pole lattice Q.
LinMorph epsilon_Q(LatticePtr q);
LinMorph beta(LatticePtr q, const PoleSignature& p);

}  // namespace polecalc

#endif
