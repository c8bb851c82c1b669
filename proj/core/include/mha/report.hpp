#pragma once

#include <cstdint>

#include "mha/cointegrals.hpp"
#include "mha/specfile.hpp"

namespace mha::report {

enum class Format { Text, Json };

struct Options {
  Format format = Format::Text;
  std::optional<Side> side;          // integrals / cointegrals; unset = both
  std::string route = "both";        // classify: integral | cointegral | both
};

/// Exit codes: 0 = a verdict was computed, 2 = the input is invalid,
/// 3 = an internal consistency guarantee failed.
struct RunResult {
  int exit_code = 0;
  std::string output;  // fully rendered, ends with a newline
};

/// FNV-1a (64-bit) digest of the canonical serialization; identical inputs
/// always hash identically, whatever formatting they arrived in.
std::string input_digest(const SpecData& s);

/// Executes one of check / integrals / cointegrals / construct / classify
/// on raw spec text. Never throws: all failures are rendered into the
/// result with the matching exit code. Rendering is byte-deterministic.
RunResult run(const std::string& command, const std::string& spec_text, const Options& opts);

/// The sampled infinite-group suite, rendered in the same two formats.
RunResult run_kg(const std::string& group, std::uint64_t seed, int samples, Format format);

}  // namespace mha::report
