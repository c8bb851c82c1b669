#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace mha {

/// Exact rational scalar. Always kept in lowest terms with positive
/// denominator (GMP canonical form); arithmetic never rounds.
using Scalar = mpq_class;

/// Serializes as "p" for integers and "p/q" otherwise, q > 0, lowest terms.
std::string to_string(const Scalar& s);

/// Parses "p" or "p/q" with optional leading '-'. Throws
/// std::invalid_argument on malformed input or zero denominator.
Scalar parse_scalar(std::string_view text);

}  // namespace mha
