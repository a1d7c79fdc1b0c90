#ifndef POLECALC_LATTICES_HPP
#define POLECALC_LATTICES_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "polecalc/posets.hpp"

namespace polecalc {

struct MobiusCache;

// A finite lattice: poset with join/meet tables, bottom and top.
struct Lattice {
  Poset poset;
  std::vector<int> join_tab, meet_tab;  // n*n, row-major
  int bottom = 0, top = 0;

  int n() const { return poset.size(); }
  bool le(int x, int y) const { return poset.le(x, y); }
  bool lt(int x, int y) const { return poset.lt(x, y); }
  int join_of(int x, int y) const { return join_tab[size_t(x) * n() + y]; }
  int meet_of(int x, int y) const { return meet_tab[size_t(x) * n() + y]; }

  mutable std::shared_ptr<MobiusCache> mobius_cache;  // lazily filled, content-deterministic
};

using LatticePtr = std::shared_ptr<const Lattice>;
LatticePtr make_lattice_ptr(Lattice t);

// Same carrier size and identical order relation.
bool lattice_equal(const Lattice& a, const Lattice& b);

// Join-irreducibles with r(e) = sup{x | x < e}, and the dual data.
struct IrreducibleData {
  std::vector<int> irr;       // join-irreducibles, ascending index
  std::vector<int> meet_irr;  // meet-irreducibles, ascending index
  std::vector<int> r_of;      // r_of[e] for join-irreducible e, else -1
  std::vector<int> s_of;      // s_of[a] for meet-irreducible a, else -1
};

// Level sizes of a pole lattice, bottom to top; the isomorphism-class key.
struct PoleSignature {
  std::vector<int> level_sizes;

  PoleSignature() = default;
  explicit PoleSignature(std::vector<int> levels);  // validates
  static bool valid(const std::vector<int>& levels);
  int total() const;
  std::string to_string() const;  // "1,2,1"
  bool operator==(const PoleSignature& o) const { return level_sizes == o.level_sizes; }
  bool operator<(const PoleSignature& o) const { return level_sizes < o.level_sizes; }
};

// Twin structure of a pole lattice: partner of each twin element, -1 elsewhere.
struct PoleInfo {
  std::vector<int> twin;
  bool is_twin(int x) const { return twin[x] >= 0; }
};

std::optional<Lattice> lattice_from_poset(const Poset& p);
IrreducibleData irreducibles(const Lattice& t);
long long mobius(const Lattice& t, int x, int y);
bool is_distributive(const Lattice& t);

// Lattice of down-closed subsets, with the subset encoding of its elements.
struct DownsetLattice {
  Lattice lattice;
  GroundSet base;                   // the underlying poset's carrier E
  std::vector<uint32_t> elem_mask;  // element index -> subset of E
  std::map<uint32_t, int> index;    // inverse lookup

  int index_of(uint32_t mask) const;
};

DownsetLattice downset_lattice(const Poset& p);

Lattice opposite_lattice(const Lattice& t);
std::optional<PoleSignature> pole_signature(const Lattice& t);
PoleInfo pole_info(const Lattice& t);  // requires a pole lattice

Lattice pole_lattice_from_signature(const PoleSignature& sig);
std::vector<PoleSignature> pole_signatures_up_to(int max_size);

// Small constructions used throughout the suites.
Lattice chain_lattice(int n);
Lattice m3_lattice();
Lattice boolean_lattice(int k);  // downsets of a k-antichain, size 2^k

// All lattices on at most max_size elements up to isomorphism (max_size <= 6).
std::vector<Lattice> lattices_up_to(int max_size);

}  // namespace polecalc

#endif
