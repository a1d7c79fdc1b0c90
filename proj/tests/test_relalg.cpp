#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "polecalc/relalg.hpp"

using namespace polecalc;

TEST_CASE("delta on one point") {
  Poset pt = oracle::chain(1);
  RelLinComb d = delta(pt);
  CHECK(d.terms.size() == 2);
  CHECK(d.coeff(Relation(1, 1)) == 1);
  CHECK(d.coeff(Relation::identity(1)) == -1);
}

TEST_CASE("delta terms are distinct signed unions") {
  Poset two = oracle::antichain(2);
  RelLinComb d = delta(two);
  CHECK(d.terms.size() == 4);
  Relation rbar_op = opposite_rel(complement_rel(two.leq));
  CHECK(d.coeff(rbar_op) == 1);
  CHECK(d.coeff(rbar_op.united(Relation::identity(2))) == 1);
  for (int e = 0; e < 2; ++e) {
    Relation one = rbar_op;
    one.set(e, e);
    CHECK(d.coeff(one) == -1);
  }
  // 2^n distinct basis terms with unit coefficients on every class
  for (int n = 0; n <= 4; ++n)
    for (const Poset& p : enumerate_posets(n)) {
      RelLinComb dd = delta(p);
      CHECK(dd.terms.size() == size_t(1) << n);
      CHECK_FALSE(dd.is_zero());
      for (const auto& [rel, c] : dd.terms) CHECK((c == 1 || c == -1));
    }
}

TEST_CASE("delta absorbs the order on both sides") {
  for (int n = 0; n <= 4; ++n)
    for (const Poset& p : enumerate_posets(n)) {
      RelLinComb d = delta(p);
      RelLinComb r = RelLinComb::of(p.leq);
      CHECK(rel_product(r, d) == d);
      CHECK(rel_product(d, r) == d);
    }
}

TEST_CASE("products of combinations") {
  Poset pt = oracle::chain(1);
  RelLinComb d = delta(pt);
  CHECK(rel_product(RelLinComb::of(Relation::identity(1)), d) == d);
  CHECK(rel_product(d, d) == rel_scale(d, -1));
  CHECK(rel_product(d, RelLinComb::zero(1)).is_zero());
}

TEST_CASE("classification of right-invariant relations") {
  Poset c2 = oracle::chain(2);
  auto id = s_delta_classify(c2.leq, c2.leq);
  REQUIRE(id.has_value());
  CHECK(id->is_identity());

  auto none = s_delta_classify(Relation(2, 2), c2.leq);
  CHECK_FALSE(none.has_value());
  CHECK(rel_product(RelLinComb::of(Relation(2, 2)), delta(c2)).is_zero());

  // a row repeated cannot come from a permuted order
  Relation rep(2, 2);
  rep.set(0, 1);
  rep.set(1, 1);
  CHECK_FALSE(s_delta_classify(rep, c2.leq).has_value());

  CHECK_THROWS_AS(s_delta_classify(opposite_rel(c2.leq), c2.leq), std::invalid_argument);
}

TEST_CASE("the twin-swap term is the permuted order") {
  for (int n = 1; n <= 4; ++n)
    for (const Poset& p : enumerate_posets(n)) {
      auto tau = is_pole_by_permutation(p);
      if (!tau) continue;
      Relation rbar_op = opposite_rel(complement_rel(p.leq));
      Relation delta_fixed(n, n);
      for (int x = 0; x < n; ++x)
        if (tau->image[x] == x) delta_fixed.set(x, x);
      CHECK(rbar_op.united(delta_fixed) ==
            compose_rel(delta_of_permutation(*tau), p.leq));
      auto cls = s_delta_classify(rbar_op.united(delta_fixed), p.leq);
      REQUIRE(cls.has_value());
      CHECK(*cls == *tau);
    }
}

TEST_CASE("products against delta follow the classification") {
  for (int n = 1; n <= 4; ++n)
    for (const Poset& p : enumerate_posets(n)) {
      RelLinComb d = delta(p);
      uint64_t total = uint64_t(1) << (n * n);
      for (uint64_t code = 0; code < total; ++code) {
        Relation s = oracle::relation_from_code(n, code);
        Relation sr = compose_rel(s, p.leq);
        RelLinComb sd = rel_product(RelLinComb::of(s), d);
        auto cls = s_delta_classify(sr, p.leq);
        if (cls)
          CHECK(sd == rel_product(RelLinComb::of(delta_of_permutation(*cls)), d));
        else
          CHECK(sd.is_zero());
      }
    }
}

TEST_CASE("delta square identity") {
  Poset pt = oracle::chain(1);
  DeltaSquareReport r1 = delta_square_identity(pt);
  CHECK(r1.square_law);
  CHECK(r1.idempotent);
  CHECK(r1.sign == -1);

  DeltaSquareReport r2 = delta_square_identity(oracle::antichain(2));
  CHECK(r2.square_law);
  CHECK(r2.idempotent);
  CHECK(r2.sign == 1);
  CHECK(r2.tau == Permutation({1, 0}));

  DeltaSquareReport r3 = delta_square_identity(oracle::chain(2));
  CHECK(r3.square_law);
  CHECK(r3.sign == 1);

  CHECK_THROWS_AS(delta_square_identity(oracle::antichain(3)), std::invalid_argument);
}

TEST_CASE("nonzero condition matches pole recognition") {
  CHECK_FALSE(nonzero_condition(oracle::antichain(3)));
  CHECK(nonzero_condition(oracle::chain(1)));
  for (int n = 0; n <= 4; ++n)
    for (const Poset& p : enumerate_posets(n))
      CHECK(nonzero_condition(p) == pole_decomposition(p).has_value());
  CHECK_THROWS_AS(nonzero_condition(oracle::chain(5)), resource_limit_error);
}

TEST_CASE("module action on basis permutations") {
  Poset c2 = oracle::chain(2);
  Permutation id2 = Permutation::identity(2);
  FundModuleElement f = FundModuleElement::of(id2);

  CHECK(fund_module_act(Relation::identity(2), f, c2.leq) == f);
  CHECK(fund_module_act(c2.leq, f, c2.leq) == f);

  Relation empty_row(2, 2);
  empty_row.set(0, 0);  // row 1 empty
  CHECK(fund_module_act(empty_row, f, c2.leq).is_zero());

  // linearity over a two-term element
  FundModuleElement x = FundModuleElement::of(id2, 2);
  x.add_term(Permutation({1, 0}), 5);
  FundModuleElement y = fund_module_act(Relation::identity(2), x, c2.leq);
  CHECK(y == x);
}

TEST_CASE("module action agrees with the delta calculus on every class of size <= 3") {
  for (int n = 1; n <= 3; ++n)
    for (const Poset& p : enumerate_posets(n)) {
      RelLinComb d = delta(p);
      uint64_t total = uint64_t(1) << (n * n);
      for (const Permutation& sigma : all_permutations(n)) {
        RelLinComb sigma_d = rel_product(RelLinComb::of(delta_of_permutation(sigma)), d);
        for (uint64_t code = 0; code < total; ++code) {
          Relation q = oracle::relation_from_code(n, code);
          FundModuleElement acted =
              fund_module_act(q, FundModuleElement::of(sigma), p.leq);
          RelLinComb shadow = rel_product(RelLinComb::of(q), sigma_d);
          if (acted.is_zero()) {
            CHECK(shadow.is_zero());
          } else {
            REQUIRE(acted.terms.size() == 1);
            const Permutation& lab = acted.terms.begin()->first;
            CHECK(acted.terms.begin()->second == 1);
            CHECK(shadow == rel_product(RelLinComb::of(delta_of_permutation(lab)), d));
            CHECK_FALSE(shadow.is_zero());
          }
        }
      }
    }
}

TEST_CASE("projective classifier") {
  CHECK(is_simple_projective(oracle::chain(3), 2));
  CHECK_FALSE(is_simple_projective(oracle::antichain(2), 2));
  CHECK(is_simple_projective(oracle::antichain(2), 0));
  CHECK(is_simple_projective(oracle::antichain(2), 3));
  CHECK_FALSE(is_simple_projective(oracle::n_poset(), 0));
  Poset bowtie = oracle::poset_from_pairs(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  CHECK(is_simple_projective(bowtie, 5));
  CHECK_FALSE(is_simple_projective(bowtie, 2));
}

TEST_CASE("modular reduction of combinations") {
  RelLinComb d = delta(oracle::chain(1));
  RelLinComb m2 = reduce_mod(d, 2);
  CHECK(m2.coeff(Relation(1, 1)) == 1);
  CHECK(m2.coeff(Relation::identity(1)) == 1);
  CHECK(reduce_mod(d, 1).is_zero());
}
