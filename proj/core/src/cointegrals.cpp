#include "mha/cointegrals.hpp"

namespace mha {

std::vector<Vec> cointegral_space(const ComultMatrix& cm, Side side) {
  const FinDimAlgebra& alg = cm.algebra();
  const std::size_t d = alg.dim();
  const Matrix& D = cm.delta();
  // Unknown h, one block of equations per basis a = b_i, one row per
  // tensor coordinate.
  Matrix sys(d * d * d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t a1 = 0; a1 < d; ++a1)
      for (std::size_t a2 = 0; a2 < d; ++a2) {
        const std::size_t row = (i * d + a1) * d + a2;
        for (std::size_t k = 0; k < d; ++k) {
          Scalar coef = 0;
          if (side == Side::Left) {
            // Delta(b_i)(1 (x) h) at (a1, a2): sum_q D[a1][q][i] sc(q,k,a2)
            for (std::size_t q = 0; q < d; ++q)
              if (D(a1 * d + q, i) != 0 && alg.sc(q, k, a2) != 0)
                coef += D(a1 * d + q, i) * alg.sc(q, k, a2);
            if (a1 == i && k == a2) coef -= 1;  // minus b_i (x) h
          } else {
            // (h (x) 1)Delta(b_i) at (a1, a2): sum_p sc(k,p,a1) D[p][a2][i]
            for (std::size_t p = 0; p < d; ++p)
              if (alg.sc(k, p, a1) != 0 && D(p * d + a2, i) != 0)
                coef += alg.sc(k, p, a1) * D(p * d + a2, i);
            if (k == a1 && a2 == i) coef -= 1;  // minus h (x) b_i
          }
          sys(row, k) = coef;
        }
      }
  return kernel(sys);
}

Vec counit_from_cointegral(const ComultMatrix& cm, const Vec& h) {
  const FinDimAlgebra& alg = cm.algebra();
  const std::size_t d = alg.dim();
  if (is_zero(h)) throw std::invalid_argument("cointegral must be nonzero");
  if (comult_leg(cm, Side::Right).rows() != d)
    throw RightLegNotFullError("right leg of the comultiplication is not all of A");

  std::size_t t = 0;
  while (h[t] == 0) ++t;
  Vec eps(d);
  for (std::size_t i = 0; i < d; ++i) {
    Vec v = alg.multiply(alg.basis_vector(i), h);
    eps[i] = v[t] / h[t];
    for (std::size_t k = 0; k < d; ++k)
      if (v[k] != eps[i] * h[k])
        throw NotProportionalError("a*h is not proportional to h at basis " + alg.labels()[i]);
  }

  // Verify the derived identities exactly.
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vec prod = alg.multiply(alg.basis_vector(i), alg.basis_vector(j));
      if (dot(eps, prod) != eps[i] * eps[j])
        throw VerificationFailedError("counit from cointegral is not multiplicative");
    }
  const Matrix& D = cm.delta();
  for (std::size_t i = 0; i < d; ++i) {
    Matrix di = cm.delta_tensor(alg.basis_vector(i));
    if (slice_first(di, eps) != alg.basis_vector(i) ||
        slice_second(di, eps) != alg.basis_vector(i))
      throw VerificationFailedError("counit identity fails for the counit from the cointegral");
    // Delta(b_i)(h (x) 1) = h (x) b_i
    for (std::size_t m = 0; m < d; ++m)
      for (std::size_t q = 0; q < d; ++q) {
        Scalar lhs = 0;
        for (std::size_t p = 0; p < d; ++p)
          if (D(p * d + q, i) != 0)
            for (std::size_t k = 0; k < d; ++k)
              if (h[k] != 0 && alg.sc(p, k, m) != 0) lhs += D(p * d + q, i) * h[k] * alg.sc(p, k, m);
        Scalar rhs = (q == i) ? h[m] : Scalar(0);
        if (lhs != rhs)
          throw VerificationFailedError("Delta(a)(h (x) 1) = h (x) a fails at basis " +
                                        alg.labels()[i]);
      }
  }
  return eps;
}

CointegralFaithfulness cointegral_faithful(const ComultMatrix& cm, const Vec& h) {
  CointegralFaithfulness res;
  res.left_leg_rank = element_leg(cm, Side::Left, h).rows();
  res.right_leg_rank = element_leg(cm, Side::Right, h).rows();
  res.faithful = res.left_leg_rank == cm.dim() && res.right_leg_rank == cm.dim();
  return res;
}

AntipodeMap antipode_from_cointegral(const ComultMatrix& cm, const Vec& h) {
  const FinDimAlgebra& alg = cm.algebra();
  const std::size_t d = alg.dim();
  Matrix H = cm.delta_tensor(h);
  if (element_leg(cm, Side::Left, h).rows() != d)
    throw LegDeficientError("left leg of Delta(h) is not all of A");

  // K[(a1,a2)][r] = coefficient of (b_r (x) 1)Delta(h) at (a1,a2); one
  // solve per basis element a = b_i.
  Matrix K(d * d, d);
  for (std::size_t a1 = 0; a1 < d; ++a1)
    for (std::size_t a2 = 0; a2 < d; ++a2)
      for (std::size_t r = 0; r < d; ++r) {
        Scalar c = 0;
        for (std::size_t p = 0; p < d; ++p)
          if (alg.sc(r, p, a1) != 0 && H(p, a2) != 0) c += alg.sc(r, p, a1) * H(p, a2);
        K(a1 * d + a2, r) = c;
      }
  Matrix s(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    Vec rhs(d * d, Scalar(0));
    // (1 (x) b_i)Delta(h) at (a1, a2)
    for (std::size_t a1 = 0; a1 < d; ++a1)
      for (std::size_t a2 = 0; a2 < d; ++a2) {
        Scalar c = 0;
        for (std::size_t q = 0; q < d; ++q)
          if (H(a1, q) != 0 && alg.sc(i, q, a2) != 0) c += H(a1, q) * alg.sc(i, q, a2);
        rhs[a1 * d + a2] = c;
      }
    Solution sol = solve(K, rhs);
    if (!sol.consistent)
      throw VerificationFailedError("antipode relation has no solution at basis " + alg.labels()[i]);
    if (!sol.unique) throw LegDeficientError("antipode relation is underdetermined");
    for (std::size_t k = 0; k < d; ++k) s(k, i) = sol.value[k];
  }

  // Verify both convolution identities before returning.
  Vec eps = counit_from_cointegral(cm, h);
  if (!alg.is_unital())
    throw NotUnitalError("antipode verification requires a unital algebra");
  const Vec& u = *alg.unit();
  for (std::size_t i = 0; i < d; ++i) {
    Matrix da = cm.delta_tensor(alg.basis_vector(i));
    Vec conv_l(d, Scalar(0)), conv_r(d, Scalar(0));
    for (std::size_t p = 0; p < d; ++p)
      for (std::size_t q = 0; q < d; ++q) {
        if (da(p, q) == 0) continue;
        Vec sl = alg.multiply(s.col(p), alg.basis_vector(q));
        Vec sr = alg.multiply(alg.basis_vector(p), s.col(q));
        for (std::size_t k = 0; k < d; ++k) {
          conv_l[k] += da(p, q) * sl[k];
          conv_r[k] += da(p, q) * sr[k];
        }
      }
    for (std::size_t k = 0; k < d; ++k)
      if (conv_l[k] != eps[i] * u[k] || conv_r[k] != eps[i] * u[k])
        throw VerificationFailedError("antipode from cointegral fails a convolution identity");
  }
  return AntipodeMap{std::move(s)};
}

DiscreteClassifyResult classify_discrete(const ComultMatrix& cm) {
  const FinDimAlgebra& alg = cm.algebra();
  if (!alg.is_unital())
    throw NotUnitalError("classification requires a unital algebra");
  const std::size_t d = alg.dim();
  DiscreteClassifyResult res;
  res.left_cointegral_space = cointegral_space(cm, Side::Left);
  res.right_cointegral_space = cointegral_space(cm, Side::Right);
  if (!res.right_cointegral_space.empty())
    res.right_cointegral = res.right_cointegral_space.front();
  if (res.left_cointegral_space.empty()) {
    res.verdict.kind = Verdict::Kind::NotHopf;
    res.verdict.reason = "no left cointegral";
    return res;
  }

  std::optional<Vec> faithful_h;
  for (const Vec& h : res.left_cointegral_space) {
    CointegralFaithfulness f = cointegral_faithful(cm, h);
    if (!res.faithfulness) res.faithfulness = f;
    if (f.faithful) {
      faithful_h = h;
      res.faithfulness = f;
      break;
    }
  }
  if (!faithful_h && res.left_cointegral_space.size() > 1) {
    // Bounded sweep of small integer combinations, mirroring the
    // integral-side search.
    const long bound = 3;
    const std::size_t n = res.left_cointegral_space.size();
    std::vector<long> coeff(n, -bound);
    while (true) {
      bool all_zero = true;
      for (long c : coeff)
        if (c != 0) all_zero = false;
      if (!all_zero) {
        Vec cand(d, Scalar(0));
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t i = 0; i < d; ++i)
            cand[i] += Scalar(coeff[k]) * res.left_cointegral_space[k][i];
        if (!is_zero(cand)) {
          CointegralFaithfulness f = cointegral_faithful(cm, cand);
          if (f.faithful) {
            faithful_h = cand;
            res.faithfulness = f;
            break;
          }
        }
      }
      std::size_t pos = 0;
      while (pos < n && coeff[pos] == bound) coeff[pos++] = -bound;
      if (pos == n) break;
      ++coeff[pos];
    }
  }
  if (!faithful_h) {
    res.verdict.kind = Verdict::Kind::NotHopf;
    res.verdict.reason = "left cointegral exists but is not faithful";
    return res;
  }
  res.left_cointegral = faithful_h;

  res.galois = galois_bijectivity_report(cm, std::nullopt, std::nullopt);
  // A faithful left cointegral forces T2 injective and T1 surjective; in
  // finite dimensions both are then bijective.
  if (!res.galois->injective[1] || !res.galois->surjective[0])
    throw InternalInconsistencyError("slice-map ranks contradict the faithful left cointegral");

  Vec eps = counit_from_cointegral(cm, *faithful_h);
  AntipodeMap s = antipode_from_cointegral(cm, *faithful_h);
  res.structure = verify_structure(cm, eps, s.matrix);
  if (!res.structure->all_ok())
    throw InternalInconsistencyError("constructed counit/antipode failed verification");
  if (rank(s.matrix) != d)
    throw InternalInconsistencyError("constructed antipode is not invertible");

  res.verdict.kind = Verdict::Kind::Hopf;
  res.verdict.counit = std::move(eps);
  res.verdict.antipode = std::move(s.matrix);
  return res;
}

}  // namespace mha
