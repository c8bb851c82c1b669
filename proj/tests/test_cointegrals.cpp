#include <doctest.h>

#include "helpers.hpp"
#include "mha/catalog.hpp"

using namespace mha;
using mha::testing::proportional;

TEST_SUITE("cointegrals") {

TEST_CASE("cointegral spaces match the worked examples") {
  for (const auto& entry : catalog::all_entries()) {
    CAPTURE(entry.name);
    auto left = cointegral_space(entry.comult, Side::Left);
    auto right = cointegral_space(entry.comult, Side::Right);
    REQUIRE(left.size() == 1);
    REQUIRE(right.size() == 1);
    if (entry.expected.left_cointegral) CHECK(proportional(left[0], *entry.expected.left_cointegral));
    if (entry.expected.right_cointegral)
      CHECK(proportional(right[0], *entry.expected.right_cointegral));
  }
}

TEST_CASE("left and right cointegrals differ on the non-unimodular example") {
  catalog::CatalogEntry h4 = catalog::build_sweedler_h4();
  auto left = cointegral_space(h4.comult, Side::Left);
  auto right = cointegral_space(h4.comult, Side::Right);
  REQUIRE(left.size() == 1);
  REQUIRE(right.size() == 1);
  CHECK(proportional(left[0], Vec{0, 0, 1, 1}));
  CHECK(proportional(right[0], Vec{0, 0, 1, -1}));
  CHECK(!proportional(left[0], right[0]));
}

TEST_CASE("cointegral defining equation holds verbatim") {
  for (const auto& entry : catalog::all_entries()) {
    auto left = cointegral_space(entry.comult, Side::Left);
    const FinDimAlgebra& alg = entry.algebra;
    const std::size_t d = alg.dim();
    for (const Vec& h : left)
      for (std::size_t i = 0; i < d; ++i) {
        // Delta(b_i)(1 (x) h) == b_i (x) h
        Matrix di = entry.comult.delta_tensor(alg.basis_vector(i));
        Matrix lhs = tensor_multiply(alg, di, simple_tensor(*alg.unit(), h));
        CHECK(lhs == simple_tensor(alg.basis_vector(i), h));
      }
  }
}

TEST_CASE("counit from the cointegral matches the expected covector") {
  catalog::CatalogEntry h4 = catalog::build_sweedler_h4();
  Vec eps = counit_from_cointegral(h4.comult, Vec{0, 0, 1, 1});
  CHECK(eps == Vec{1, 1, 0, 0});
  // Scaling the cointegral changes nothing.
  Vec eps2 = counit_from_cointegral(h4.comult, Vec{0, 0, Scalar(7, 3), Scalar(7, 3)});
  CHECK(eps2 == eps);
}

TEST_CASE("counit from cointegral rejects a non-cointegral element") {
  catalog::CatalogEntry h4 = catalog::build_sweedler_h4();
  CHECK_THROWS_AS(counit_from_cointegral(h4.comult, Vec{0, 1, 0, 0}), NotProportionalError);
}

TEST_CASE("faithfulness of cointegrals via element legs") {
  catalog::CatalogEntry h4 = catalog::build_sweedler_h4();
  CointegralFaithfulness f = cointegral_faithful(h4.comult, Vec{0, 0, 1, 1});
  CHECK(f.faithful);
  CHECK(f.left_leg_rank == 4);
  CHECK(f.right_leg_rank == 4);
  catalog::CatalogEntry m = catalog::build_monoid_bialgebra();
  CointegralFaithfulness g = cointegral_faithful(m.comult, Vec{0, 1});
  CHECK(!g.faithful);
  CHECK(g.left_leg_rank == 1);
  CHECK(g.right_leg_rank == 1);
}

TEST_CASE("antipode from the cointegral matches the expected matrix") {
  catalog::CatalogEntry h4 = catalog::build_sweedler_h4();
  AntipodeMap s = antipode_from_cointegral(h4.comult, Vec{0, 0, 1, 1});
  CHECK(s.matrix == *h4.expected.antipode);
}

TEST_CASE("dual-route classification agrees with the worked examples") {
  for (const auto& entry : catalog::all_entries()) {
    CAPTURE(entry.name);
    DiscreteClassifyResult res = classify_discrete(entry.comult);
    CHECK(res.verdict.kind == entry.expected.verdict);
    if (entry.expected.verdict == Verdict::Kind::Hopf) {
      REQUIRE(res.verdict.kind == Verdict::Kind::Hopf);
      CHECK(res.verdict.counit == *entry.expected.counit);
      CHECK(*res.verdict.antipode == *entry.expected.antipode);
    }
  }
}

TEST_CASE("both routes are bit-identical on every verdict of Hopf") {
  for (const auto& entry : catalog::all_entries()) {
    if (entry.expected.verdict != Verdict::Kind::Hopf) continue;
    CAPTURE(entry.name);
    ClassifyResult a = classify(entry.comult);
    DiscreteClassifyResult b = classify_discrete(entry.comult);
    REQUIRE(a.verdict.kind == Verdict::Kind::Hopf);
    REQUIRE(b.verdict.kind == Verdict::Kind::Hopf);
    CHECK(a.verdict.counit == b.verdict.counit);
    CHECK(*a.verdict.antipode == *b.verdict.antipode);
  }
}

TEST_CASE("dual route fails on the idempotent-basis bialgebra with its own reason") {
  catalog::CatalogEntry m = catalog::build_monoid_bialgebra();
  DiscreteClassifyResult res = classify_discrete(m.comult);
  CHECK(res.verdict.kind == Verdict::Kind::NotHopf);
  CHECK(res.verdict.reason == "left cointegral exists but is not faithful");
  REQUIRE(res.faithfulness.has_value());
  CHECK(!res.faithfulness->faithful);
}

}  // TEST_SUITE
