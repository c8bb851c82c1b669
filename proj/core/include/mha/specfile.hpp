#pragma once

#include "mha/comult.hpp"

namespace mha {

/// Parse failure with a 1-based line number; message already includes it.
class SpecParseError : public std::runtime_error {
 public:
  SpecParseError(std::size_t line, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg), line(line) {}
  std::size_t line;
};

/// Parsed but not yet validated description of an algebra with
/// comultiplication. Product entries are sc(i,j,k); comultiplication
/// entries d(i,j,k) give the coefficient of b_j (x) b_k in Delta(b_i).
/// Omitted coefficients are zero.
struct SpecData {
  std::size_t dim = 0;
  std::vector<std::string> labels;
  std::optional<Vec> unit;
  std::vector<Scalar> product;  // (i*dim + j)*dim + k
  std::vector<Scalar> delta;    // (i*dim + j)*dim + k

  bool operator==(const SpecData& other) const = default;
};

/// Line-oriented "mha-spec v1" format:
///   mha-spec v1
///   dim N
///   basis name0 ... name{N-1}
///   unit c0 ... c{N-1}          (optional)
///   m i j k p/q                 (product coefficients)
///   d i j k p/q                 (comultiplication coefficients)
/// '#' starts a comment; blank lines are ignored; duplicate coefficient
/// lines are rejected.
SpecData parse_spec(const std::string& text);
SpecData load_spec(const std::string& path);

/// Canonical serialization: fixed line order, nonzero coefficients only,
/// ascending indices. parse_spec(export_spec(s)) == s.
std::string export_spec(const SpecData& s);

struct BuiltSpec {
  FinDimAlgebra algebra;
  ComultMatrix comult;
};

/// Runs the full validation stack (associativity, unit, non-degeneracy,
/// coassociativity, homomorphism) and returns the validated pair.
BuiltSpec build_spec(const SpecData& s);

}  // namespace mha
