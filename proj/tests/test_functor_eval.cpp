#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "polecalc/decompose.hpp"
#include "polecalc/functor_eval.hpp"

using namespace polecalc;

namespace {

LatticePtr square() { return make_lattice_ptr(pole_lattice_from_signature(PoleSignature({1, 2, 1}))); }
LatticePtr chain(int n) { return make_lattice_ptr(chain_lattice(n)); }

std::vector<std::vector<int>> all_tuples(int len, int base) {
  std::vector<std::vector<int>> out;
  std::vector<int> v(len, 0);
  while (true) {
    out.push_back(v);
    int k = len - 1;
    while (k >= 0 && ++v[k] == base) v[k--] = 0;
    if (k < 0) break;
  }
  return out;
}

}  // namespace

TEST_CASE("correspondence action") {
  LatticePtr sq = square();
  LatticeMap phi{sq, 2, {1, 2}};
  CHECK(act_correspondence(Relation::identity(2), phi) == phi);

  LatticeMap empty_img = act_correspondence(Relation(3, 2), phi);
  CHECK(empty_img.values == std::vector<int>{0, 0, 0});

  Relation full(1, 1);
  full.set(0, 0);
  LatticeMap point{sq, 1, {1}};
  CHECK(act_correspondence(full, point).values == std::vector<int>{1});

  // joining over a full row gives the join of all values
  CHECK(act_correspondence(Relation::full(1, 2), phi).values == std::vector<int>{3});
}

TEST_CASE("the action is functorial on small shapes") {
  std::vector<LatticePtr> lats;
  for (Lattice& t : lattices_up_to(4)) lats.push_back(make_lattice_ptr(std::move(t)));
  for (LatticePtr t : lats)
    for (int nx = 0; nx <= 2; ++nx)
      for (int ny = 0; ny <= 2; ++ny)
        for (int nz = 0; nz <= 2; ++nz)
          for (const auto& phi_vals : all_tuples(nx, t->n())) {
            LatticeMap phi{t, nx, phi_vals};
            for (uint64_t cs = 0; cs < (uint64_t(1) << (ny * nx)); ++cs) {
              Relation s(ny, nx);
              for (int i = 0; i < ny; ++i)
                for (int j = 0; j < nx; ++j)
                  if ((cs >> (i * nx + j)) & 1) s.set(i, j);
              for (uint64_t cr = 0; cr < (uint64_t(1) << (nz * ny)); ++cr) {
                Relation r(nz, ny);
                for (int i = 0; i < nz; ++i)
                  for (int j = 0; j < ny; ++j)
                    if ((cr >> (i * ny + j)) & 1) r.set(i, j);
                CHECK(act_correspondence(r, act_correspondence(s, phi)) ==
                      act_correspondence(compose_rel(r, s), phi));
              }
            }
          }
}

TEST_CASE("complement isomorphism") {
  Poset base = oracle::chain(2);
  DownsetLattice dl = downset_lattice(base);
  LatticePtr top = make_lattice_ptr(opposite_lattice(dl.lattice));

  int full = dl.index_of(0b11), none = dl.index_of(0b00);
  LatticeMap phi_full{top, 2, {full, full}};
  CHECK(rho_iso(dl, phi_full).none());
  LatticeMap phi_none{top, 2, {none, none}};
  CHECK(rho_iso(dl, phi_none) == Relation::full(2, 2));

  // round trip and intertwining, exhaustively on small shapes
  for (int n = 0; n <= 2; ++n)
    for (const Poset& p : enumerate_posets(n)) {
      DownsetLattice d = downset_lattice(p);
      LatticePtr t = make_lattice_ptr(opposite_lattice(d.lattice));
      for (int nx = 0; nx <= 2; ++nx)
        for (const auto& vals : all_tuples(nx, t->n())) {
          LatticeMap phi{t, nx, vals};
          Relation s = rho_iso(d, phi);
          CHECK(compose_rel(s, p.leq) == s);  // right invariant
          CHECK(rho_iso_inverse(d, s) == phi);
          for (uint64_t cs = 0; cs < (uint64_t(1) << (2 * nx)); ++cs) {
            Relation u(2, nx);
            for (int i = 0; i < 2; ++i)
              for (int j = 0; j < nx; ++j)
                if ((cs >> (i * nx + j)) & 1) u.set(i, j);
            CHECK(rho_iso(d, act_correspondence(u, phi)) == compose_rel(u, s));
          }
        }
    }
}

TEST_CASE("gamma") {
  FreeElt g0 = gamma(Poset(GroundSet(0), Relation(0, 0)));
  CHECK(g0.terms.size() == 1);
  CHECK(g0.terms.begin()->second == 1);

  Poset pt = oracle::chain(1);
  FreeElt g1 = gamma(pt);
  CHECK(g1.terms.size() == 2);

  for (int n = 0; n <= 3; ++n)
    for (const Poset& p : enumerate_posets(n)) {
      DownsetLattice dl = downset_lattice(p);
      CHECK(rho_of(dl, gamma(p)) == delta(p));
    }
}

TEST_CASE("maps covering the irreducibles") {
  LatticePtr sq = square();
  CHECK(z_basis(sq, 2).size() == 2);
  CHECK(z_basis(sq, 1).empty());
  LatticePtr c1 = chain(1);
  CHECK(z_basis(c1, 3).size() == 1);
  CHECK(z_basis(c1, 0).size() == 1);
}

TEST_CASE("rank formula") {
  LatticePtr sq = square();
  CHECK(rank_SQ(*sq, 2) == 2);
  CHECK(rank_SQ(*sq, 1) == 0);
  CHECK(rank_SQ(*sq, 0) == 0);
  CHECK(rank_SQ(*chain(2), 1) == 1);
  CHECK_THROWS_AS(rank_SQ(m3_lattice(), 1), std::invalid_argument);

  for (const PoleSignature& sig : pole_signatures_up_to(5)) {
    Lattice q = pole_lattice_from_signature(sig);
    LatticePtr qp = make_lattice_ptr(q);
    for (int m = 0; m <= 3; ++m) CHECK(rank_SQ(*qp, m) == (long long)z_basis(qp, m).size());
  }
}

TEST_CASE("post-composition action") {
  LatticePtr sq = square();
  FreeElt x = FreeElt::of(LatticeMap{sq, 2, {1, 2}}, 3);
  CHECK(free_eq(apply_linmorph(LinMorph::of(identity_morphism(sq)), x), x));

  // maps missing an irreducible are annihilated by j
  for (const DecompEntry& e : pole_inventory(sq))
    for (const JoinMorphism& pi : e.reps) {
      LinMorph j = j_pi(pi);
      IrreducibleData ir = irreducibles(*e.pole);
      for (const auto& vals : all_tuples(2, e.pole->n())) {
        std::set<int> img(vals.begin(), vals.end());
        bool covers = true;
        for (int irr_elem : ir.irr)
          if (!img.count(irr_elem)) covers = false;
        if (covers) continue;
        CHECK(apply_linmorph(j, FreeElt::of(LatticeMap{e.pole, 2, vals})).is_zero());
      }
    }
}

TEST_CASE("the central idempotent sends the twisted injection to the alternating sum") {
  for (const PoleSignature& sig : pole_signatures_up_to(6)) {
    LatticePtr q = make_lattice_ptr(pole_lattice_from_signature(sig));
    IrreducibleData ir = irreducibles(*q);
    PoleInfo info = pole_info(*q);
    int ones = 0;
    for (int e : ir.irr)
      if (!info.is_twin(e)) ++ones;

    const std::vector<int>& e0 = ir.meet_irr;
    int m = int(e0.size());
    LatticeMap w{q, m, std::vector<int>(m)};
    for (int i = 0; i < m; ++i) w.values[i] = info.is_twin(e0[i]) ? e0[i] : ir.s_of[e0[i]];

    FreeElt expected = FreeElt::zero(q, m);
    for (uint32_t a = 0; a < (uint32_t(1) << m); ++a) {
      std::vector<int> values(m);
      for (int i = 0; i < m; ++i) values[i] = ((a >> i) & 1) ? ir.s_of[e0[i]] : e0[i];
      int sgn = (__builtin_popcount(a) + ones) % 2 ? -1 : 1;
      expected.add_term(values, sgn);
    }
    CHECK(free_eq(apply_linmorph(epsilon_Q(q), FreeElt::of(w)), expected));
  }
}

TEST_CASE("span check") {
  for (const PoleSignature& sig : pole_signatures_up_to(4)) {
    LatticePtr q = make_lattice_ptr(pole_lattice_from_signature(sig));
    for (int m = 0; m <= 2; ++m) {
      SpanCheckReport rep = pole_span_check(q, m);
      CHECK(rep.equal);
      long long full = 1;
      for (int i = 0; i < m; ++i) full *= q->n();
      CHECK(rep.dim_e_span == full);  // the whole evaluation for a pole lattice
    }
  }
  SpanCheckReport m3rep = pole_span_check(make_lattice_ptr(m3_lattice()), 1);
  CHECK(m3rep.equal);
  SpanCheckReport empty_x = pole_span_check(square(), 0);
  CHECK(empty_x.equal);
  CHECK(empty_x.dim_e_span == 1);
}
