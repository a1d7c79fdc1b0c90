#ifndef POLECALC_DECOMPOSE_HPP
#define POLECALC_DECOMPOSE_HPP

#include <string>

#include "polecalc/morphisms.hpp"

namespace polecalc {

// One block of the pole part of End(T): a pole lattice class together with
// the orbit representatives of the surjections onto it.
struct DecompEntry {
  PoleSignature sig;
  LatticePtr pole;                // the representative lattice built from sig
  long long aut_order = 1;
  std::vector<JoinMorphism> reps; // lexicographically smallest orbit members
  int n() const { return int(reps.size()); }
};

struct DecompositionReport {
  std::string name;
  int size = 0;
  std::vector<DecompEntry> entries;       // ordered by signature
  long long dim_pole_part = 0;            // sum of n^2 |Aut|
  long long dim_check_direct = 0;         // join-endomorphisms with pole image
  bool consistent = false;

  std::string block_summary() const;  // "M_1(k) + ..." with dims
};

// Iso-classes of pole lattices admitting a surjection from T, by signature.
std::vector<PoleSignature> pol_T(const Lattice& t);

// Orbit representatives for the Aut(P) action on surjections T -> P; the
// action is free, so every orbit has exactly |Aut(P)| members.
std::vector<JoinMorphism> orbit_reps(LatticePtr t, LatticePtr p);

// pol_T with representatives, shared by e_T and the reports.
std::vector<DecompEntry> pole_inventory(LatticePtr t);

DecompositionReport decomposition_report(LatticePtr t, const std::string& name);

struct CheckResult {
  std::string name;
  std::string anchor;  // the identity being checked, as a formula
  bool pass = false;
  std::string detail;
};

bool all_pass(const std::vector<CheckResult>& checks);

// Identity families against a single lattice. Selectors: idempotents,
// orthogonality, independence, centrality, span, all.
std::vector<CheckResult> verify_suite(LatticePtr t, const std::string& suite);

// Poset-corpus suites: enumeration counts, the two pole recognitions, the
// nonzero-condition search, and the delta identities. jobs > 1 splits the
// corpus across threads; output order is deterministic.
std::vector<CheckResult> corpus_suite(int max_size, int jobs = 1);

}  // namespace polecalc

#endif
