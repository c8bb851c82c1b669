#include <doctest.h>

#include "helpers.hpp"
#include "mha/catalog.hpp"
#include "mha/integrals.hpp"

using namespace mha;
using mha::testing::proportional;

TEST_SUITE("integrals") {

TEST_CASE("group algebra invariant functionals are duals of the identity") {
  catalog::CatalogEntry qc2 = catalog::build_group_algebra("QC2", catalog::cyclic_table(2),
                                                           {"e", "s"});
  auto left = invariant_space(qc2.comult, Side::Left);
  auto right = invariant_space(qc2.comult, Side::Right);
  REQUIRE(left.size() == 1);
  REQUIRE(right.size() == 1);
  CHECK(proportional(left[0], Vec{1, 0}));
  CHECK(proportional(right[0], Vec{1, 0}));
}

TEST_CASE("function algebra invariant functional is the counting functional") {
  catalog::CatalogEntry fc2 = catalog::build_function_algebra(
      "FC2", catalog::cyclic_table(2), {"de", "ds"});
  auto left = invariant_space(fc2.comult, Side::Left);
  REQUIRE(left.size() == 1);
  CHECK(proportional(left[0], Vec{1, 1}));
}

TEST_CASE("one-sided invariant spaces on the smallest non-involutive example") {
  catalog::CatalogEntry h4 = catalog::build_sweedler_h4();
  auto left = invariant_space(h4.comult, Side::Left);
  auto right = invariant_space(h4.comult, Side::Right);
  REQUIRE(left.size() == 1);
  REQUIRE(right.size() == 1);
  CHECK(proportional(left[0], Vec{0, 0, 0, 1}));
  CHECK(proportional(right[0], Vec{0, 0, 1, 0}));
  // Left and right spaces differ: the example is not unimodular.
  CHECK(!proportional(left[0], right[0]));
}

TEST_CASE("frozen Gram matrix of the dim-4 left integral") {
  catalog::CatalogEntry h4 = catalog::build_sweedler_h4();
  Matrix g = gram_matrix(h4.algebra, Vec{0, 0, 0, 1});
  Matrix expect(4, 4);
  expect(0, 3) = 1;
  expect(1, 2) = 1;
  expect(2, 1) = -1;
  expect(3, 0) = 1;
  CHECK(g == expect);
  CHECK(rank(g) == 4);
  CHECK(is_faithful(h4.algebra, Vec{0, 0, 0, 1}));
}

TEST_CASE("faithfulness is scaling invariant") {
  catalog::CatalogEntry h4 = catalog::build_sweedler_h4();
  for (const Scalar& c : {Scalar(2), Scalar(-1), Scalar(7, 3)}) {
    Vec phi{0, 0, 0, c};
    CHECK(is_faithful(h4.algebra, phi));
  }
}

TEST_CASE("the idempotent-basis bialgebra has no faithful invariant functional") {
  catalog::CatalogEntry m = catalog::build_monoid_bialgebra();
  auto space = invariant_space(m.comult, Side::Left);
  REQUIRE(space.size() == 1);
  CHECK(proportional(space[0], Vec{1, 0}));
  Matrix g = gram_matrix(m.algebra, space[0]);
  CHECK(rank(g) == 1);
  IntegralSearch search = find_faithful_integral(m.comult, Side::Left);
  CHECK(search.status == IntegralSearch::Status::NoneFaithful);
}

TEST_CASE("faithful integral search finds the worked-example functionals") {
  for (const auto& entry : catalog::all_entries()) {
    IntegralSearch left = find_faithful_integral(entry.comult, Side::Left);
    if (entry.expected.verdict == Verdict::Kind::Hopf) {
      REQUIRE(left.status == IntegralSearch::Status::Found);
      CHECK(proportional(left.integral, *entry.expected.left_integral));
      IntegralSearch right = find_faithful_integral(entry.comult, Side::Right);
      REQUIRE(right.status == IntegralSearch::Status::Found);
      CHECK(proportional(right.integral, *entry.expected.right_integral));
    } else {
      CHECK(left.status != IntegralSearch::Status::Found);
    }
  }
}

TEST_CASE("left invariance holds verbatim for the found integrals") {
  for (const auto& entry : catalog::all_entries()) {
    IntegralSearch left = find_faithful_integral(entry.comult, Side::Left);
    if (left.space.empty()) continue;
    const Vec phi = left.space.front();
    const FinDimAlgebra& alg = entry.algebra;
    for (std::size_t i = 0; i < alg.dim(); ++i) {
      Matrix di = entry.comult.delta_tensor(alg.basis_vector(i));
      Vec lhs = slice_second(di, phi);  // (id (x) phi)Delta(b_i)
      Vec rhs(alg.dim());
      for (std::size_t k = 0; k < alg.dim(); ++k) rhs[k] = phi[i] * (*alg.unit())[k];
      CHECK(lhs == rhs);
    }
  }
}

}  // TEST_SUITE
