#ifndef POLECALC_POSETS_HPP
#define POLECALC_POSETS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "polecalc/relations.hpp"

namespace polecalc {

// A finite poset: carrier with its order relation. Construction validates the
// order axioms.
struct Poset {
  GroundSet ground;
  Relation leq;

  Poset() : ground(0), leq(0, 0) {}
  Poset(GroundSet g, Relation r);
  int size() const { return ground.size; }
  bool le(int x, int y) const { return leq.at(x, y); }
  bool lt(int x, int y) const { return x != y && leq.at(x, y); }
  bool comparable(int x, int y) const { return leq.at(x, y) || leq.at(y, x); }
};

// One block of a pole decomposition: a singleton or a twin pair.
struct PoleBlock {
  int a = -1;
  int b = -1;  // -1 for a singleton block
  bool is_twin() const { return b >= 0; }
};

// Ordered blocks, bottom to top, whose stacking reproduces the poset.
struct PoleDecomposition {
  std::vector<PoleBlock> blocks;
  std::vector<int> level_sizes() const;
};

struct AutGroup {
  std::vector<Permutation> elements;  // lexicographically sorted, contains identity
  long long order() const { return (long long)elements.size(); }
};

// All order automorphisms of the poset.
AutGroup automorphisms(const Poset& p);

// Permutation criterion: some tau with complement(leq)^op. Delta_{tau^-1} inside leq.
// Returns the canonical automorphism witness (twin swap, identity elsewhere)
// when the poset is pole, empty otherwise.
std::optional<Permutation> is_pole_by_permutation(const Poset& p);

// Structural recognition by peeling maximal levels top-down.
std::optional<PoleDecomposition> pole_decomposition(const Poset& p);

// All posets on n elements up to isomorphism, deduplicated by the minimal
// flattened order matrix over all relabelings. Guarded for n <= 6.
std::vector<Poset> enumerate_posets(int n);

// height(x) = length of a longest chain below x.
std::vector<int> poset_heights(const Poset& p);

// Minimal flattened order matrix over all relabelings, packed into a word.
// Usable as an isomorphism-class key for n <= 8.
uint64_t canonical_poset_key(const Poset& p);

// Subposet induced on the given (distinct) elements, in the given order.
Poset induced_subposet(const Poset& p, const std::vector<int>& elems);

}  // namespace polecalc

#endif
