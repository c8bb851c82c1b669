#include <doctest.h>

#include "helpers.hpp"
#include "mha/catalog.hpp"

using namespace mha;
using mha::testing::convolution_antipode;

TEST_SUITE("pipeline") {

TEST_CASE("classification matches the worked examples") {
  for (const auto& entry : catalog::all_entries()) {
    CAPTURE(entry.name);
    ClassifyResult res = classify(entry.comult);
    CHECK(res.verdict.kind == entry.expected.verdict);
    if (entry.expected.verdict == Verdict::Kind::Hopf) {
      REQUIRE(res.verdict.kind == Verdict::Kind::Hopf);
      CHECK(res.verdict.counit == *entry.expected.counit);
      CHECK(*res.verdict.antipode == *entry.expected.antipode);
      CHECK(res.structure.has_value());
      CHECK(res.structure->all_ok());
    }
  }
}

TEST_CASE("the idempotent-basis bialgebra fails with the right reason") {
  catalog::CatalogEntry m = catalog::build_monoid_bialgebra();
  ClassifyResult res = classify(m.comult);
  CHECK(res.verdict.kind == Verdict::Kind::NotHopf);
  CHECK(res.verdict.reason == "no faithful left integral");
  REQUIRE(res.galois.has_value() == false);
  CHECK(res.gram_rank_left == std::size_t{1});
}

TEST_CASE("slice-map ranks drop exactly by one on the failing example") {
  catalog::CatalogEntry m = catalog::build_monoid_bialgebra();
  GaloisReport rep = galois_bijectivity_report(m.comult, std::nullopt, std::nullopt);
  CHECK(rep.ranks[0] == 3);  // T1
  CHECK(rep.ranks[1] == 3);  // T2
  CHECK(!rep.injective[0]);
  CHECK(!rep.surjective[1]);
  CHECK(rep.implications_ok);
}

TEST_CASE("antipode on the dim-4 example is order four but not two") {
  catalog::CatalogEntry h4 = catalog::build_sweedler_h4();
  ClassifyResult res = classify(h4.comult);
  REQUIRE(res.verdict.kind == Verdict::Kind::Hopf);
  const Matrix& s = *res.verdict.antipode;
  Matrix s2 = s * s;
  CHECK(!(s2 == Matrix::identity(4)));
  CHECK(s2 * s2 == Matrix::identity(4));
}

TEST_CASE("preimage construction satisfies its defining identity") {
  for (const auto& entry : catalog::all_entries()) {
    if (entry.expected.verdict != Verdict::Kind::Hopf) continue;
    if (entry.algebra.dim() > 4) continue;  // exhaustive version runs in acceptance
    IntegralSearch left = find_faithful_integral(entry.comult, Side::Left);
    REQUIRE(left.status == IntegralSearch::Status::Found);
    const std::size_t d = entry.algebra.dim();
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b)
        for (std::size_t c = 0; c < d; ++c)
          CHECK_NOTHROW(t1_preimage(entry.comult, left.integral, entry.algebra.basis_vector(a),
                                    entry.algebra.basis_vector(b), entry.algebra.basis_vector(c)));
  }
}

TEST_CASE("constructed maps are scaling independent") {
  catalog::CatalogEntry h4 = catalog::build_sweedler_h4();
  IntegralSearch left = find_faithful_integral(h4.comult, Side::Left);
  REQUIRE(left.status == IntegralSearch::Status::Found);
  Vec eps0 = construct_counit(h4.comult, left.integral);
  Matrix s0 = construct_antipode(h4.comult, left.integral).matrix;
  for (const Scalar& c : {Scalar(2), Scalar(-1), Scalar(7, 3)}) {
    Vec phi = left.integral;
    for (auto& v : phi) v *= c;
    CHECK(construct_counit(h4.comult, phi) == eps0);
    CHECK(construct_antipode(h4.comult, phi).matrix == s0);
  }
}

TEST_CASE("counit construction flags a rank-deficient functional") {
  catalog::CatalogEntry m = catalog::build_monoid_bialgebra();
  // The invariant functional is not faithful, so the solve cannot pin eps down.
  CHECK_THROWS_AS(construct_counit(m.comult, Vec{1, 0}), UnderdeterminedSystemError);
}

TEST_CASE("verification catches a wrong antipode") {
  catalog::CatalogEntry h4 = catalog::build_sweedler_h4();
  ClassifyResult res = classify(h4.comult);
  REQUIRE(res.verdict.kind == Verdict::Kind::Hopf);
  StructureReport bad = verify_structure(h4.comult, res.verdict.counit, Matrix::identity(4));
  CHECK(!bad.all_ok());
  bool witnessed = false;
  for (const auto& c : bad.checks)
    if (!c.ok && !c.witness.empty()) witnessed = true;
  CHECK(witnessed);
}

TEST_CASE("independent convolution-inverse solve agrees bit for bit") {
  for (const auto& entry : catalog::all_entries()) {
    if (entry.expected.verdict != Verdict::Kind::Hopf) continue;
    CAPTURE(entry.name);
    ClassifyResult res = classify(entry.comult);
    REQUIRE(res.verdict.kind == Verdict::Kind::Hopf);
    Matrix oracle = convolution_antipode(entry.comult, res.verdict.counit);
    CHECK(oracle == *res.verdict.antipode);
  }
}

TEST_CASE("slice-map report confirms bijectivity for every verdict of Hopf") {
  for (const auto& entry : catalog::all_entries()) {
    if (entry.expected.verdict != Verdict::Kind::Hopf) continue;
    ClassifyResult res = classify(entry.comult);
    REQUIRE(res.galois.has_value());
    for (int k = 0; k < 4; ++k) {
      CHECK(res.galois->injective[k]);
      CHECK(res.galois->surjective[k]);
    }
    CHECK(res.galois->implications_ok);
  }
}

}  // TEST_SUITE
