#pragma once

#include "mha/pipeline.hpp"

namespace mha::catalog {

struct ExpectedData {
  Verdict::Kind verdict = Verdict::Kind::Inconclusive;
  std::optional<Vec> counit;
  std::optional<Matrix> antipode;
  std::optional<Vec> left_integral;
  std::optional<Vec> right_integral;
  std::optional<Vec> left_cointegral;
  std::optional<Vec> right_cointegral;
};

struct CatalogEntry {
  std::string name;
  FinDimAlgebra algebra;
  ComultMatrix comult;
  ExpectedData expected;
};

/// Cayley tables for the stock groups.
std::vector<std::vector<std::size_t>> cyclic_table(std::size_t n);
std::vector<std::vector<std::size_t>> s3_table();

/// Group algebra Q[G]: basis = group elements, Delta(g) = g (x) g,
/// antipode = group inversion.
CatalogEntry build_group_algebra(const std::string& name,
                                 const std::vector<std::vector<std::size_t>>& cayley,
                                 const std::vector<std::string>& labels);

/// Function algebra F(G): pointwise product,
/// Delta(d_g) = sum over hk = g of d_h (x) d_k.
CatalogEntry build_function_algebra(const std::string& name,
                                    const std::vector<std::vector<std::size_t>>& cayley,
                                    const std::vector<std::string>& labels);

/// The 4-dimensional algebra on (1, g, x, gx) with g^2 = 1, x^2 = 0,
/// xg = -gx; the smallest Hopf algebra whose antipode is not an involution.
CatalogEntry build_sweedler_h4();

/// Q[{1, s}] with s^2 = s: unital, full, counital, but not Hopf. The
/// standing hypothesis-failure witness.
CatalogEntry build_monoid_bialgebra();

/// All stock entries, in a fixed order:
/// QC2, QC3, QS3, FC2, FS3, H4, monoid.
std::vector<CatalogEntry> all_entries();

}  // namespace mha::catalog
