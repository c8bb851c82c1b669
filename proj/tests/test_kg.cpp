#include <doctest.h>

#include "mha/catalog.hpp"
#include "mha/kg.hpp"

using namespace mha;
using namespace mha::kg;

TEST_SUITE("kg") {

TEST_CASE("group operations on the infinite families") {
  IntegerGroup z;
  CHECK(z.op({2}, {3}) == GroupElem{5});
  CHECK(z.inv({4}) == GroupElem{-4});
  InfiniteDihedralGroup dih;
  CHECK(dih.op({1, 1}, {2, 0}) == GroupElem{-1, 1});
  CHECK(dih.op({1, 1}, {2, 1}) == GroupElem{-1, 0});
  CHECK(dih.inv({3, 0}) == GroupElem{-3, 0});
  CHECK(dih.inv({3, 1}) == GroupElem{3, 1});
  // Reflections square to the identity.
  CHECK(dih.op({3, 1}, {3, 1}) == dih.identity());
  IntegerPairGroup z2;
  CHECK(z2.op({1, 2}, {3, -4}) == GroupElem{4, -2});
}

TEST_CASE("frozen slice support on the integers") {
  IntegerGroup z;
  SparseFunction a = delta_at({2});
  SparseFunction b = delta_at({3});
  SparseTensor t = slice(z, GaloisKind::T1, a, b);
  REQUIRE(t.size() == 1);
  auto it = t.begin();
  CHECK(it->first.first == GroupElem{-1});
  CHECK(it->first.second == GroupElem{3});
  CHECK(it->second == 1);
  SparseTensor t2 = slice(z, GaloisKind::T2, a, b);
  REQUIRE(t2.size() == 1);
  CHECK(t2.begin()->first.first == GroupElem{2});
  CHECK(t2.begin()->first.second == GroupElem{1});
}

TEST_CASE("slices are finitely supported with exact values") {
  IntegerGroup z;
  SparseFunction a;
  a.set({0}, Scalar(1, 2));
  a.set({5}, Scalar(-3));
  SparseFunction b;
  b.set({1}, 2);
  b.set({-2}, Scalar(7, 3));
  for (GaloisKind kind : {GaloisKind::T1, GaloisKind::T2, GaloisKind::T1Prime,
                          GaloisKind::T2Prime}) {
    SparseTensor t = slice(z, kind, a, b);
    CHECK(t.size() <= a.values.size() * b.values.size());
    for (const auto& [key, v] : t) {
      GroupElem gh = z.op(key.first, key.second);
      Scalar expect;
      switch (kind) {
        case GaloisKind::T1: expect = a.at(gh) * b.at(key.second); break;
        case GaloisKind::T2: expect = a.at(key.first) * b.at(gh); break;
        case GaloisKind::T1Prime: expect = a.at(gh) * b.at(key.first); break;
        case GaloisKind::T2Prime: expect = a.at(key.second) * b.at(gh); break;
      }
      CHECK(v == expect);
    }
  }
}

TEST_CASE("counting functional, counit and antipode basics") {
  IntegerGroup z;
  SparseFunction f;
  f.set({0}, 3);
  f.set({2}, Scalar(1, 4));
  CHECK(integral(f) == Scalar(13, 4));
  CHECK(counit(z, f) == 3);
  SparseFunction sf = antipode(z, f);
  CHECK(sf.at({-2}) == Scalar(1, 4));
  CHECK(antipode(z, sf) == f);
}

TEST_CASE("sampled suite passes on all three families") {
  IntegerGroup z;
  IntegerPairGroup z2;
  InfiniteDihedralGroup dih;
  for (const Group* g : {static_cast<const Group*>(&z), static_cast<const Group*>(&z2),
                         static_cast<const Group*>(&dih)}) {
    SuiteReport rep = run_suite(*g, 7, 60);
    CAPTURE(rep.group);
    CAPTURE(rep.failed_checks);
    CHECK(rep.samples == 60);
    CHECK(rep.failures == 0);
  }
}

TEST_CASE("suite runs are deterministic for a fixed seed") {
  InfiniteDihedralGroup dih;
  SuiteReport a = run_suite(dih, 42, 20);
  SuiteReport b = run_suite(dih, 42, 20);
  CHECK(a.failures == b.failures);
  CHECK(a.failed_checks == b.failed_checks);
}

TEST_CASE("finite groups run through the same machinery") {
  CayleyGroup c2(catalog::cyclic_table(2), "c2");
  SparseFunction a = delta_at({1});
  SparseFunction b;
  b.set({0}, 1);
  b.set({1}, -2);
  CrosscheckReport cc = engine_crosscheck(c2, a, b);
  CHECK(cc.counit_ok);
  CHECK(cc.antipode_ok);
  SuiteReport rep = run_suite(c2, 11, 40);
  CHECK(rep.failures == 0);
}

TEST_CASE("bad Cayley tables are rejected") {
  CHECK_THROWS_AS(CayleyGroup({{1}}, "bad"), std::invalid_argument);
  CHECK_THROWS_AS(CayleyGroup({{1, 1}, {1, 1}}, "bad"), std::invalid_argument);
}

}  // TEST_SUITE
