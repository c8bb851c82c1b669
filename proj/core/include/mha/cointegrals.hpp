#pragma once

#include "mha/pipeline.hpp"

namespace mha {

class RightLegNotFullError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class NotProportionalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class LegDeficientError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact basis of the solution space of the cointegral condition:
/// left:  Delta(a)(1 (x) h) = a (x) h for all basis a;
/// right: (h (x) 1)Delta(a) = h (x) a for all basis a.
std::vector<Vec> cointegral_space(const ComultMatrix& cm, Side side);

/// Counit from a left cointegral h: solves eps from a*h = eps(a)*h per
/// basis a (requires the right leg of the comultiplication to be full) and
/// verifies multiplicativity, both counit identities and
/// Delta(a)(h (x) 1) = h (x) a before returning.
Vec counit_from_cointegral(const ComultMatrix& cm, const Vec& h);

struct CointegralFaithfulness {
  bool faithful = false;
  std::size_t left_leg_rank = 0;
  std::size_t right_leg_rank = 0;
};

/// Both legs of Delta(h) are computed and reported; in finite dimensions
/// either one being full already decides.
CointegralFaithfulness cointegral_faithful(const ComultMatrix& cm, const Vec& h);

/// Antipode from a faithful left cointegral: for each basis a, S(a) is the
/// unique solution of (1 (x) a)Delta(h) = (S(a) (x) 1)Delta(h). The result
/// is verified against both convolution identities before returning.
AntipodeMap antipode_from_cointegral(const ComultMatrix& cm, const Vec& h);

struct DiscreteClassifyResult {
  Verdict verdict;
  std::vector<Vec> left_cointegral_space;
  std::vector<Vec> right_cointegral_space;
  std::optional<Vec> left_cointegral;   // the faithful one when found
  std::optional<Vec> right_cointegral;  // first basis vector of the space
  std::optional<CointegralFaithfulness> faithfulness;
  std::optional<GaloisReport> galois;
  std::optional<StructureReport> structure;
};

/// The dual decision pipeline: left cointegral -> faithfulness ->
/// slice-map ranks -> counit -> antipode -> verify.
DiscreteClassifyResult classify_discrete(const ComultMatrix& cm);

}  // namespace mha
