#include <benchmark/benchmark.h>

#include "mha/catalog.hpp"
#include "mha/cointegrals.hpp"
#include "mha/kg.hpp"

using namespace mha;

static void BM_ClassifyH4(benchmark::State& state) {
  catalog::CatalogEntry h4 = catalog::build_sweedler_h4();
  for (auto _ : state) {
    ClassifyResult res = classify(h4.comult);
    benchmark::DoNotOptimize(res.verdict.kind);
  }
}
BENCHMARK(BM_ClassifyH4);

static void BM_ClassifyDiscreteH4(benchmark::State& state) {
  catalog::CatalogEntry h4 = catalog::build_sweedler_h4();
  for (auto _ : state) {
    DiscreteClassifyResult res = classify_discrete(h4.comult);
    benchmark::DoNotOptimize(res.verdict.kind);
  }
}
BENCHMARK(BM_ClassifyDiscreteH4);

static void BM_SliceMapRankQS3(benchmark::State& state) {
  catalog::CatalogEntry qs3 = catalog::build_group_algebra(
      "QS3", catalog::s3_table(), {"e", "t01", "t02", "t12", "c012", "c021"});
  for (auto _ : state) {
    std::size_t r = rank(qs3.comult.galois(GaloisKind::T1));
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_SliceMapRankQS3);

static void BM_ClassifyFS3(benchmark::State& state) {
  catalog::CatalogEntry fs3 = catalog::build_function_algebra(
      "FS3", catalog::s3_table(), {"de", "dt01", "dt02", "dt12", "dc012", "dc021"});
  for (auto _ : state) {
    ClassifyResult res = classify(fs3.comult);
    benchmark::DoNotOptimize(res.verdict.kind);
  }
}
BENCHMARK(BM_ClassifyFS3);

static void BM_KgSuiteDihedral(benchmark::State& state) {
  kg::InfiniteDihedralGroup dih;
  for (auto _ : state) {
    kg::SuiteReport rep = kg::run_suite(dih, 1, 25);
    benchmark::DoNotOptimize(rep.failures);
  }
}
BENCHMARK(BM_KgSuiteDihedral);

BENCHMARK_MAIN();
