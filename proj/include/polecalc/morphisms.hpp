#ifndef POLECALC_MORPHISMS_HPP
#define POLECALC_MORPHISMS_HPP

#include <utility>
#include <vector>

#include "polecalc/lattices.hpp"

namespace polecalc {

// A total map between lattices commuting with joins.
struct JoinMorphism {
  LatticePtr source, target;
  std::vector<int> map;

  int operator()(int x) const { return map[x]; }
  bool operator==(const JoinMorphism& o) const { return map == o.map; }
  bool operator<(const JoinMorphism& o) const { return map < o.map; }
};

// map(bottom) = bottom and map(x v y) = map(x) v map(y) for all pairs.
bool is_join_morphism(const Lattice& src, const Lattice& tgt, const std::vector<int>& map);

// Validating constructor.
JoinMorphism make_join_morphism(LatticePtr src, LatticePtr tgt, std::vector<int> map);
JoinMorphism identity_morphism(LatticePtr t);

JoinMorphism compose(const JoinMorphism& f, const JoinMorphism& g);  // f after g
bool is_injective(const JoinMorphism& f);
bool is_surjective(const JoinMorphism& f);
std::vector<int> image_elements(const JoinMorphism& f);  // sorted distinct values

// Unique join-morphism extension of an order-preserving map on the
// irreducibles of a distributive source: p -> join of phi(e) over e <= p.
// phi_on_irr is indexed parallel to irreducibles(P).irr.
JoinMorphism extend_from_irreducibles(LatticePtr p, const std::vector<int>& phi_on_irr, LatticePtr t);

// f^op(p) = join of { t | f(t) <= p }, a join-morphism between the opposites.
JoinMorphism op_morphism(const JoinMorphism& f);

// Complete duplicate-free enumerations in lexicographic-by-map order.
std::vector<JoinMorphism> enumerate_hom(LatticePtr p, LatticePtr t);
std::vector<JoinMorphism> enumerate_inj(LatticePtr p, LatticePtr t);
std::vector<JoinMorphism> enumerate_sur(LatticePtr t, LatticePtr p);

// Interval-by-interval companion of an injective join-morphism from a pole
// lattice: copies lambda on twins, copies or shifts each totally ordered
// interval, and caps interval tops at the meet of the twin images above
// (top interval capped at the top of the target). The result is an injective
// meet-morphism, returned as a join-morphism between the opposites.
JoinMorphism omega(const JoinMorphism& lambda);

// The pairing lambda -> op_morphism(omega(lambda)), verified bijective.
std::vector<std::pair<JoinMorphism, JoinMorphism>> inj_sur_bijection(LatticePtr p, LatticePtr t);

}  // namespace polecalc

#endif
