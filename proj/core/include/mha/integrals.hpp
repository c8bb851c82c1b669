#pragma once

#include "mha/comult.hpp"

namespace mha {

struct LinearFunctional {
  Vec covector;
};

/// Exact basis of the space of left (right) invariant functionals:
/// (id(x)phi)Delta(b_i) = phi(b_i)*1 for all basis i, resp.\ the mirror
/// condition. Nonzero members are integrals. Requires a unital algebra.
std::vector<Vec> invariant_space(const ComultMatrix& cm, Side side);

/// G[i][j] = f(b_i * b_j).
Matrix gram_matrix(const FinDimAlgebra& alg, const Vec& f);

/// Full Gram rank; in finite dimensions one-sided non-degeneracy suffices.
bool is_faithful(const FinDimAlgebra& alg, const Vec& f);

struct IntegralSearch {
  enum class Status { Found, NoIntegral, NoneFaithful, Inconclusive };
  Status status = Status::NoIntegral;
  Vec integral;            // valid when status == Found
  std::vector<Vec> space;  // the full invariant space
};

/// Tests each basis vector of the invariant space for faithfulness; for
/// spaces of dimension > 1 a deterministic sweep of small integer
/// combinations (coefficients in [-bound, bound]) runs before giving up.
IntegralSearch find_faithful_integral(const ComultMatrix& cm, Side side, long bound = 3);

}  // namespace mha
