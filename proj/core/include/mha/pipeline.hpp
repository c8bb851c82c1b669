#pragma once

#include <array>
#include <optional>

#include "mha/integrals.hpp"

namespace mha {

class InconsistentSystemError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class UnderdeterminedSystemError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class VerificationFailedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
/// A guaranteed implication between verified hypotheses failed. This is a
/// bug signal, never an expected outcome; the CLI maps it to exit code 3.
class InternalInconsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class NotUnitalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// (id (x) f) and (f (x) id) applied to a dim x dim tensor.
Vec slice_second(const Matrix& t, const Vec& f);
Vec slice_first(const Matrix& t, const Vec& f);

/// x_{ij} = (id (x) phi)(Delta(b_i)(1 (x) b_j)).
Vec slice_t1(const ComultMatrix& cm, const Vec& phi, std::size_t i, std::size_t j);
/// y_{ij} = (id (x) phi)((1 (x) b_i)Delta(b_j)).
Vec slice_t2prime(const ComultMatrix& cm, const Vec& phi, std::size_t i, std::size_t j);

struct AntipodeMap {
  Matrix matrix;  // column i = coordinates of S(b_i)
};

struct GaloisReport {
  // Order: T1, T2, T1', T2'.
  std::array<std::size_t, 4> ranks{};
  std::array<bool, 4> injective{};
  std::array<bool, 4> surjective{};
  bool implications_ok = true;
  std::vector<std::string> notes;
};

/// Ranks of the four slice maps plus cross-checks of the implications a
/// faithful integral forces (injectivity from faithfulness, surjectivity
/// from faithfulness plus full legs).
GaloisReport galois_bijectivity_report(const ComultMatrix& cm, const std::optional<Vec>& phi,
                                       const std::optional<Vec>& psi);

/// Explicit preimage: returns y with T1(y) = x (x) c where
/// x = (id (x) phi)(Delta(a)(1 (x) b)). The identity is verified exactly
/// before returning; failure means phi is not left invariant.
Matrix t1_preimage(const ComultMatrix& cm, const Vec& phi, const Vec& a, const Vec& b,
                   const Vec& c);

/// Counit from a faithful left integral: the unique covector with
/// eps(x_{ij}) = phi(b_i b_j) over all basis pairs. Inconsistency means phi
/// is not an invariant faithful functional; rank deficiency means the left
/// leg is not all of A.
Vec construct_counit(const ComultMatrix& cm, const Vec& phi);

/// Antipode from a faithful left integral: solves S x_{ij} = y_{ij} over
/// all basis pairs.
AntipodeMap construct_antipode(const ComultMatrix& cm, const Vec& phi);

struct IdentityCheck {
  std::string name;
  bool ok = false;
  std::string witness;  // empty when ok
};

struct StructureReport {
  std::vector<IdentityCheck> checks;
  bool all_ok() const;
};

/// Exhaustive basis-level verification: counit multiplicative, both counit
/// identities, antipode antimultiplicative, (S(x)S)Delta = flip.Delta.S,
/// and both convolution identities m(id(x)S)Delta(a) = eps(a)1 =
/// m(S(x)id)Delta(a). Residuals must be exactly zero.
StructureReport verify_structure(const ComultMatrix& cm, const Vec& eps, const Matrix& s);

struct Verdict {
  enum class Kind { Hopf, NotHopf, Inconclusive };
  Kind kind = Kind::Inconclusive;
  std::string reason;       // for NotHopf / Inconclusive
  Vec counit;               // valid when Hopf
  std::optional<Matrix> antipode;
};

struct ClassifyResult {
  Verdict verdict;
  std::size_t left_leg_rank = 0;
  std::size_t right_leg_rank = 0;
  bool full = false;
  std::vector<Vec> left_integral_space;
  std::vector<Vec> right_integral_space;
  std::optional<Vec> left_integral;
  std::optional<Vec> right_integral;
  std::optional<std::size_t> gram_rank_left;
  std::optional<std::size_t> gram_rank_right;
  std::optional<GaloisReport> galois;
  std::optional<StructureReport> structure;
};

/// The full decision pipeline for a unital finite-dimensional algebra:
/// fullness -> integral solve -> faithfulness -> slice-map ranks ->
/// construct counit and antipode -> verify all identities.
ClassifyResult classify(const ComultMatrix& cm);

}  // namespace mha
