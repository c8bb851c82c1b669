#pragma once

#include "mha/cointegrals.hpp"
#include "mha/specfile.hpp"

namespace mha::testing {

/// Both nonzero and equal up to a nonzero scalar.
inline bool proportional(const Vec& a, const Vec& b) {
  if (a.size() != b.size() || is_zero(a) || is_zero(b)) return false;
  std::size_t t = 0;
  while (b[t] == 0) ++t;
  if (a[t] == 0) return false;
  Scalar c = a[t] / b[t];
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != c * b[i]) return false;
  return true;
}

/// Serializable description of an already validated pair.
inline SpecData to_spec(const FinDimAlgebra& alg, const ComultMatrix& cm) {
  const std::size_t d = alg.dim();
  SpecData s;
  s.dim = d;
  s.labels = alg.labels();
  s.unit = alg.unit();
  s.product.assign(d * d * d, Scalar(0));
  s.delta.assign(d * d * d, Scalar(0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        s.product[(i * d + j) * d + k] = alg.sc(i, j, k);
        s.delta[(i * d + j) * d + k] = cm.delta()(j * d + k, i);
      }
  return s;
}

/// Independent antipode oracle: solves the left convolution-inverse
/// equation m(S (x) id)Delta(b_i) = eps(b_i) 1 as one linear system in the
/// dim^2 matrix entries of S. In a Hopf algebra a left convolution inverse
/// of the identity is automatically two-sided and unique, so the solve must
/// be consistent and unique.
inline Matrix convolution_antipode(const ComultMatrix& cm, const Vec& eps) {
  const FinDimAlgebra& alg = cm.algebra();
  const std::size_t d = alg.dim();
  const Matrix& D = cm.delta();
  const Vec& u = *alg.unit();
  Matrix sys(d * d, d * d);
  Vec rhs(d * d, Scalar(0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) {
      const std::size_t row = i * d + k;
      rhs[row] = eps[i] * u[k];
      for (std::size_t uu = 0; uu < d; ++uu)
        for (std::size_t p = 0; p < d; ++p) {
          Scalar c = 0;
          for (std::size_t q = 0; q < d; ++q)
            if (D(p * d + q, i) != 0 && alg.sc(uu, q, k) != 0)
              c += D(p * d + q, i) * alg.sc(uu, q, k);
          sys(row, uu * d + p) = c;
        }
    }
  Solution sol = solve(sys, rhs);
  if (!sol.consistent) throw std::runtime_error("convolution oracle: inconsistent");
  if (!sol.unique) throw std::runtime_error("convolution oracle: not unique");
  Matrix s(d, d);
  for (std::size_t uu = 0; uu < d; ++uu)
    for (std::size_t p = 0; p < d; ++p) s(uu, p) = sol.value[uu * d + p];
  return s;
}

}  // namespace mha::testing
