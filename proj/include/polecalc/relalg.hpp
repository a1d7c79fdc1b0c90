#ifndef POLECALC_RELALG_HPP
#define POLECALC_RELALG_HPP

#include <map>
#include <optional>

#include "polecalc/posets.hpp"

namespace polecalc {

// An integer combination of relations on a common square ground set. The
// empty relation is an ordinary basis element, distinct from the zero
// combination.
struct RelLinComb {
  int ground = 0;
  std::map<Relation, long long> terms;

  static RelLinComb zero(int n) { return RelLinComb{n, {}}; }
  static RelLinComb of(const Relation& r, long long c = 1);
  bool is_zero() const { return terms.empty(); }
  void add_term(const Relation& r, long long c);
  long long coeff(const Relation& r) const;
  bool operator==(const RelLinComb& o) const { return ground == o.ground && terms == o.terms; }
};

RelLinComb rel_add(const RelLinComb& u, const RelLinComb& v);
RelLinComb rel_scale(const RelLinComb& u, long long c);
RelLinComb rel_product(const RelLinComb& u, const RelLinComb& v);
RelLinComb reduce_mod(const RelLinComb& u, long long m);

// delta = sum over subsets A of (-1)^{|A|} (complement(R)^op united Delta_A).
// Guarded at |E| <= 12.
RelLinComb delta(const Poset& p);

// For S with S = SR: the sigma with S = Delta_sigma R when one exists
// (then S delta = Delta_sigma delta is nonzero), empty otherwise (then
// S delta = 0).
std::optional<Permutation> s_delta_classify(const Relation& s, const Relation& r);

struct DeltaSquareReport {
  bool square_law = false;   // delta^2 equals the signed twin-swap multiple of delta
  bool idempotent = false;   // that multiple squares to itself
  Permutation tau;           // the twin-swap automorphism
  int sign = 1;              // (-1)^{#elements comparable to everything}
};

// Exact check of the delta-square identity on a pole poset.
DeltaSquareReport delta_square_identity(const Poset& p);

// Whether some relation S with S = SR has delta S delta != 0; agrees with
// pole recognition. Guarded at |E| <= 4.
bool nonzero_condition(const Poset& p);

// Element of the permutation-indexed module attached to (E, R).
struct FundModuleElement {
  int ground = 0;
  std::map<Permutation, long long> terms;

  static FundModuleElement zero(int n) { return FundModuleElement{n, {}}; }
  static FundModuleElement of(const Permutation& s, long long c = 1);
  bool is_zero() const { return terms.empty(); }
  void add_term(const Permutation& s, long long c);
  bool operator==(const FundModuleElement& o) const { return ground == o.ground && terms == o.terms; }
};

// Action of a relation Q: on a basis permutation sigma the result is tau*sigma
// when a unique tau satisfies Delta_E inside Delta_{tau^-1} Q inside
// Delta_sigma R Delta_sigma^-1, and zero when no tau does.
FundModuleElement fund_module_act(const Relation& q, const FundModuleElement& x, const Relation& r);

// Totally ordered, or pole with characteristic different from 2.
bool is_simple_projective(const Poset& p, long long characteristic);

}  // namespace polecalc

#endif
