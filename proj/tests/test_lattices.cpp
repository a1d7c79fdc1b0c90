#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "polecalc/lattices.hpp"

using namespace polecalc;

namespace {

Lattice square() { return pole_lattice_from_signature(PoleSignature({1, 2, 1})); }

}  // namespace

TEST_CASE("lattice recognition") {
  CHECK_FALSE(lattice_from_poset(oracle::antichain(2)).has_value());
  auto sq = lattice_from_poset(square().poset);
  REQUIRE(sq.has_value());
  CHECK(sq->join_of(1, 2) == 3);
  CHECK(sq->meet_of(1, 2) == 0);
  CHECK(sq->bottom == 0);
  CHECK(sq->top == 3);
  auto c4 = lattice_from_poset(oracle::chain(4));
  REQUIRE(c4.has_value());
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) {
      CHECK(c4->join_of(x, y) == std::max(x, y));
      CHECK(c4->meet_of(x, y) == std::min(x, y));
    }
  CHECK_FALSE(lattice_from_poset(oracle::n_poset()).has_value());
}

TEST_CASE("irreducibles") {
  Lattice sq = square();
  IrreducibleData ir = irreducibles(sq);
  CHECK(ir.irr == std::vector<int>{1, 2});
  CHECK(ir.r_of[1] == 0);
  CHECK(ir.r_of[2] == 0);
  CHECK(ir.meet_irr == std::vector<int>{1, 2});
  CHECK(ir.s_of[1] == 3);

  Lattice c4 = chain_lattice(4);
  CHECK(irreducibles(c4).irr == std::vector<int>{1, 2, 3});

  // the one-point lattice has no irreducibles
  CHECK(irreducibles(chain_lattice(1)).irr.empty());
}

TEST_CASE("moebius values") {
  Lattice sq = square();
  CHECK(mobius(sq, 0, 0) == 1);
  CHECK(mobius(sq, 0, 1) == -1);
  CHECK(mobius(sq, 0, 2) == -1);
  CHECK(mobius(sq, 0, 3) == 1);
  Lattice c3 = chain_lattice(3);
  CHECK(mobius(c3, 0, 1) == -1);
  CHECK(mobius(c3, 0, 2) == 0);
  CHECK_THROWS_AS(mobius(c3, 2, 0), std::domain_error);
}

TEST_CASE("moebius defining identity on every lattice of size <= 6") {
  for (const Lattice& t : lattices_up_to(6))
    for (int x = 0; x < t.n(); ++x)
      for (int y = 0; y < t.n(); ++y) {
        if (!t.lt(x, y)) continue;
        long long s = 0;
        for (int z = 0; z < t.n(); ++z)
          if (t.le(x, z) && t.le(z, y)) s += mobius(t, x, z);
        REQUIRE(s == 0);
      }
}

TEST_CASE("distributivity") {
  CHECK_FALSE(is_distributive(m3_lattice()));
  // exhibit a failing triple in the diamond
  Lattice m3 = m3_lattice();
  CHECK(m3.meet_of(1, m3.join_of(2, 3)) != m3.join_of(m3.meet_of(1, 2), m3.meet_of(1, 3)));
  for (int n = 1; n <= 5; ++n) CHECK(is_distributive(chain_lattice(n)));
  for (const PoleSignature& sig : pole_signatures_up_to(7))
    CHECK(is_distributive(pole_lattice_from_signature(sig)));
}

TEST_CASE("down-set lattices") {
  DownsetLattice b2 = downset_lattice(oracle::antichain(2));
  CHECK(b2.lattice.n() == 4);
  CHECK(canonical_poset_key(b2.lattice.poset) == canonical_poset_key(square().poset));

  DownsetLattice c = downset_lattice(oracle::chain(3));
  CHECK(c.lattice.n() == 4);
  CHECK(canonical_poset_key(c.lattice.poset) == canonical_poset_key(chain_lattice(4).poset));

  DownsetLattice e = downset_lattice(Poset(GroundSet(0), Relation(0, 0)));
  CHECK(e.lattice.n() == 1);

  for (int n = 0; n <= 4; ++n)
    for (const Poset& p : enumerate_posets(n)) {
      DownsetLattice dl = downset_lattice(p);
      CHECK(is_distributive(dl.lattice));
      // joins are unions and meets are intersections
      for (int x = 0; x < dl.lattice.n(); ++x)
        for (int y = 0; y < dl.lattice.n(); ++y) {
          CHECK(dl.elem_mask[dl.lattice.join_of(x, y)] == (dl.elem_mask[x] | dl.elem_mask[y]));
          CHECK(dl.elem_mask[dl.lattice.meet_of(x, y)] == (dl.elem_mask[x] & dl.elem_mask[y]));
        }
      // the irreducibles, as a subposet, recover the base poset
      IrreducibleData ir = irreducibles(dl.lattice);
      REQUIRE(int(ir.irr.size()) == n);
      Poset sub = induced_subposet(dl.lattice.poset, ir.irr);
      CHECK(canonical_poset_key(sub) == canonical_poset_key(p));
    }
}

TEST_CASE("opposite lattices") {
  Lattice sq = square();
  CHECK(canonical_poset_key(opposite_lattice(sq).poset) == canonical_poset_key(sq.poset));
  Lattice c3 = chain_lattice(3);
  Lattice c3op = opposite_lattice(c3);
  CHECK(c3op.bottom == 2);
  CHECK(c3op.top == 0);
  for (const Lattice& t : lattices_up_to(5)) {
    Lattice back = opposite_lattice(opposite_lattice(t));
    CHECK(lattice_equal(back, t));
    CHECK(back.join_tab == t.join_tab);
    CHECK(back.bottom == t.bottom);
  }
}

TEST_CASE("pole signatures") {
  CHECK(pole_signature(square()) == PoleSignature({1, 2, 1}));
  CHECK(pole_signature(chain_lattice(4)) == PoleSignature({1, 1, 1, 1}));
  CHECK_FALSE(pole_signature(m3_lattice()).has_value());

  CHECK_FALSE(PoleSignature::valid({2, 1}));
  CHECK_FALSE(PoleSignature::valid({1, 2}));
  CHECK_FALSE(PoleSignature::valid({1, 2, 2, 1}));
  CHECK_FALSE(PoleSignature::valid({}));
  CHECK(PoleSignature::valid({1}));
  CHECK_THROWS_AS(PoleSignature({1, 2, 2, 1}), std::invalid_argument);

  for (const PoleSignature& sig : pole_signatures_up_to(7)) {
    Lattice p = pole_lattice_from_signature(sig);
    CHECK(pole_signature(p) == sig);
    CHECK(p.n() == sig.total());
  }

  // distinct signatures are non-isomorphic; equal signatures are isomorphic
  auto sigs = pole_signatures_up_to(6);
  std::set<uint64_t> keys;
  for (const PoleSignature& s : sigs) keys.insert(canonical_poset_key(pole_lattice_from_signature(s).poset));
  CHECK(keys.size() == sigs.size());
}

TEST_CASE("signature grammar is exactly the pole lattices") {
  for (const Lattice& t : lattices_up_to(5)) {
    auto sig = pole_signature(t);
    CHECK(sig.has_value() == pole_decomposition(t.poset).has_value());
    if (sig) CHECK(is_distributive(t));
  }
}

TEST_CASE("boolean cube") {
  Lattice b3 = boolean_lattice(3);
  CHECK(b3.n() == 8);
  CHECK(irreducibles(b3).irr.size() == 3);
  CHECK(is_distributive(b3));
  CHECK_FALSE(pole_signature(b3).has_value());
}

TEST_CASE("lattice class counts match the known table") {
  static const size_t expected[] = {0, 1, 1, 1, 2, 5, 15};
  size_t total = 0;
  for (int n = 1; n <= 6; ++n) total += expected[n];
  std::vector<Lattice> all = lattices_up_to(6);
  CHECK(all.size() == total);
  size_t by_size[7] = {0};
  for (const Lattice& t : all) ++by_size[t.n()];
  for (int n = 1; n <= 6; ++n) CHECK(by_size[n] == expected[n]);
  CHECK(enumerate_posets(6).size() == 318);
}

TEST_CASE("down-set guard") {
  CHECK_THROWS_AS(downset_lattice(oracle::antichain(13)), resource_limit_error);
}
