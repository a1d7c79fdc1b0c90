#ifndef POLECALC_FUNCTOR_EVAL_HPP
#define POLECALC_FUNCTOR_EVAL_HPP

#include "polecalc/klin.hpp"
#include "polecalc/relalg.hpp"

namespace polecalc {

// A total map from a finite set {0..domain_size-1} into a lattice.
struct LatticeMap {
  LatticePtr codomain;
  int domain_size = 0;
  std::vector<int> values;

  bool operator==(const LatticeMap& o) const {
    return domain_size == o.domain_size && values == o.values;
  }
};

// An integer combination of such maps: an element of the free module on T^X.
struct FreeElt {
  LatticePtr codomain;
  int domain_size = 0;
  std::map<std::vector<int>, long long> terms;

  static FreeElt zero(LatticePtr t, int domain_size) { return FreeElt{std::move(t), domain_size, {}}; }
  static FreeElt of(const LatticeMap& phi, long long c = 1);
  bool is_zero() const { return terms.empty(); }
  void add_term(const std::vector<int>& values, long long c);
};

bool free_eq(const FreeElt& a, const FreeElt& b);

// (S phi)(y) = join over (y,x) in S of phi(x); the empty join is bottom.
LatticeMap act_correspondence(const Relation& s, const LatticeMap& phi);
FreeElt act_correspondence(const Relation& s, const FreeElt& x);

// The complement isomorphism for T the down-set lattice of (E, R): a map
// phi: X -> T^op goes to {(x,e) | e not in phi(x)}, landing in the relations
// with S = SR; inverse recovers phi from its omitted pairs.
Relation rho_iso(const DownsetLattice& dl, const LatticeMap& phi);
LatticeMap rho_iso_inverse(const DownsetLattice& dl, const Relation& s);

// The alternating sum over subsets A of E of the map sending e to the
// down-set of e, with e itself removed when e lies in A; an element of the
// evaluation of the opposite-lattice functor at E. Guarded at |E| <= 12.
FreeElt gamma(const Poset& p);

// Termwise complement isomorphism; the domain must be E itself.
RelLinComb rho_of(const DownsetLattice& dl, const FreeElt& x);

// All maps X -> Q whose image contains every irreducible of Q.
std::vector<LatticeMap> z_basis(LatticePtr q, int set_size);

// Alternating binomial count of such maps; exact integer.
long long rank_SQ(const Lattice& q, int set_size);

// Post-composition action of a morphism combination on an element.
FreeElt apply_linmorph(const LinMorph& u, const FreeElt& x);

struct SpanCheckReport {
  int dim_e_span = 0;     // rank of { e_T . phi : phi in T^X }
  int dim_pole_span = 0;  // rank of { phi : phi(X) a pole subposet of T }
  int dim_joint = 0;      // rank of both stacked
  bool equal = false;     // identical row spaces over the rationals
};

SpanCheckReport pole_span_check(LatticePtr t, int set_size);

}  // namespace polecalc

#endif
