#include "mha/integrals.hpp"

namespace mha {

std::vector<Vec> invariant_space(const ComultMatrix& cm, Side side) {
  const FinDimAlgebra& alg = cm.algebra();
  if (!alg.is_unital())
    throw std::invalid_argument("invariant_space requires a unital algebra");
  const std::size_t d = alg.dim();
  const Vec& u = *alg.unit();
  const Matrix& D = cm.delta();
  // Left:  sum_q D[p][q][i] phi_q - phi_i u_p = 0  for all (i, p).
  // Right: sum_p D[p][q][i] phi_p - phi_i u_q = 0  for all (i, q).
  Matrix sys(d * d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t p = 0; p < d; ++p) {
      const std::size_t row = i * d + p;
      for (std::size_t q = 0; q < d; ++q)
        sys(row, q) += side == Side::Left ? D(p * d + q, i) : D(q * d + p, i);
      sys(row, i) -= u[p];
    }
  return kernel(sys);
}

Matrix gram_matrix(const FinDimAlgebra& alg, const Vec& f) {
  const std::size_t d = alg.dim();
  Matrix g(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        if (alg.sc(i, j, k) != 0 && f[k] != 0) g(i, j) += alg.sc(i, j, k) * f[k];
  return g;
}

bool is_faithful(const FinDimAlgebra& alg, const Vec& f) {
  return rank(gram_matrix(alg, f)) == alg.dim();
}

IntegralSearch find_faithful_integral(const ComultMatrix& cm, Side side, long bound) {
  IntegralSearch res;
  res.space = invariant_space(cm, side);
  if (res.space.empty()) {
    res.status = IntegralSearch::Status::NoIntegral;
    return res;
  }
  const FinDimAlgebra& alg = cm.algebra();
  for (const Vec& v : res.space) {
    if (is_faithful(alg, v)) {
      res.status = IntegralSearch::Status::Found;
      res.integral = v;
      return res;
    }
  }
  if (res.space.size() == 1) {
    // Faithfulness is scaling invariant, nothing more to try.
    res.status = IntegralSearch::Status::NoneFaithful;
    return res;
  }
  // Deterministic sweep of small integer combinations.
  const std::size_t n = res.space.size();
  std::vector<long> coeff(n, -bound);
  const std::size_t d = alg.dim();
  while (true) {
    bool all_zero = true;
    for (long c : coeff)
      if (c != 0) all_zero = false;
    if (!all_zero) {
      Vec cand(d, Scalar(0));
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < d; ++i) cand[i] += Scalar(coeff[k]) * res.space[k][i];
      if (!is_zero(cand) && is_faithful(alg, cand)) {
        res.status = IntegralSearch::Status::Found;
        res.integral = cand;
        return res;
      }
    }
    std::size_t pos = 0;
    while (pos < n && coeff[pos] == bound) coeff[pos++] = -bound;
    if (pos == n) break;
    ++coeff[pos];
  }
  res.status = IntegralSearch::Status::Inconclusive;
  return res;
}

}  // namespace mha
