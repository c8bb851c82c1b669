#include "mha/specfile.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace mha {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> toks;
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

std::size_t parse_index(const std::string& tok, std::size_t dim, std::size_t lineno,
                        const char* what) {
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(tok, &pos);
  } catch (const std::exception&) {
    throw SpecParseError(lineno, std::string(what) + " index '" + tok + "' is not a number");
  }
  if (pos != tok.size())
    throw SpecParseError(lineno, std::string(what) + " index '" + tok + "' is not a number");
  if (v >= dim)
    throw SpecParseError(lineno, std::string(what) + " index " + tok + " is out of range [0, " +
                                     std::to_string(dim) + ")");
  return static_cast<std::size_t>(v);
}

Scalar parse_value(const std::string& tok, std::size_t lineno) {
  try {
    return parse_scalar(tok);
  } catch (const std::invalid_argument& e) {
    throw SpecParseError(lineno, std::string("bad coefficient '") + tok + "': " + e.what());
  }
}

}  // namespace

SpecData parse_spec(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  bool saw_header = false;
  bool saw_dim = false;
  bool saw_basis = false;
  bool saw_unit = false;
  SpecData s;
  std::set<std::size_t> seen_m, seen_d;

  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    std::vector<std::string> toks = tokenize(line);
    if (toks.empty()) continue;

    if (!saw_header) {
      if (toks.size() != 2 || toks[0] != "mha-spec" || toks[1] != "v1")
        throw SpecParseError(lineno, "expected header 'mha-spec v1'");
      saw_header = true;
      continue;
    }

    const std::string& kw = toks[0];
    if (kw == "dim") {
      if (saw_dim) throw SpecParseError(lineno, "duplicate 'dim' line");
      if (toks.size() != 2) throw SpecParseError(lineno, "'dim' takes exactly one argument");
      std::size_t pos = 0;
      unsigned long v = 0;
      try {
        v = std::stoul(toks[1], &pos);
      } catch (const std::exception&) {
        throw SpecParseError(lineno, "dimension '" + toks[1] + "' is not a number");
      }
      if (pos != toks[1].size())
        throw SpecParseError(lineno, "dimension '" + toks[1] + "' is not a number");
      if (v == 0) throw SpecParseError(lineno, "dimension must be positive");
      if (v > FinDimAlgebra::kMaxDim)
        throw SpecParseError(lineno, "dimension " + toks[1] + " exceeds the limit of " +
                                         std::to_string(FinDimAlgebra::kMaxDim));
      s.dim = static_cast<std::size_t>(v);
      s.product.assign(s.dim * s.dim * s.dim, Scalar(0));
      s.delta.assign(s.dim * s.dim * s.dim, Scalar(0));
      saw_dim = true;
      continue;
    }
    if (!saw_dim) throw SpecParseError(lineno, "'dim' must come before '" + kw + "'");

    if (kw == "basis") {
      if (saw_basis) throw SpecParseError(lineno, "duplicate 'basis' line");
      if (toks.size() != s.dim + 1)
        throw SpecParseError(lineno, "'basis' needs exactly " + std::to_string(s.dim) +
                                         " names, got " + std::to_string(toks.size() - 1));
      s.labels.assign(toks.begin() + 1, toks.end());
      std::set<std::string> uniq(s.labels.begin(), s.labels.end());
      if (uniq.size() != s.labels.size())
        throw SpecParseError(lineno, "basis names must be distinct");
      saw_basis = true;
    } else if (kw == "unit") {
      if (saw_unit) throw SpecParseError(lineno, "duplicate 'unit' line");
      if (toks.size() != s.dim + 1)
        throw SpecParseError(lineno, "'unit' needs exactly " + std::to_string(s.dim) +
                                         " coefficients, got " + std::to_string(toks.size() - 1));
      Vec u(s.dim);
      for (std::size_t i = 0; i < s.dim; ++i) u[i] = parse_value(toks[i + 1], lineno);
      s.unit = std::move(u);
      saw_unit = true;
    } else if (kw == "m" || kw == "d") {
      if (toks.size() != 5)
        throw SpecParseError(lineno, "'" + kw + "' lines take three indices and one coefficient");
      std::size_t i = parse_index(toks[1], s.dim, lineno, "basis");
      std::size_t j = parse_index(toks[2], s.dim, lineno, "basis");
      std::size_t k = parse_index(toks[3], s.dim, lineno, "basis");
      Scalar v = parse_value(toks[4], lineno);
      const std::size_t flat = (i * s.dim + j) * s.dim + k;
      auto& seen = (kw == "m") ? seen_m : seen_d;
      if (!seen.insert(flat).second)
        throw SpecParseError(lineno, "duplicate '" + kw + "' entry for (" + toks[1] + ", " +
                                         toks[2] + ", " + toks[3] + ")");
      ((kw == "m") ? s.product : s.delta)[flat] = std::move(v);
    } else {
      throw SpecParseError(lineno, "unknown keyword '" + kw + "'");
    }
  }

  if (!saw_header) throw SpecParseError(lineno + 1, "missing header 'mha-spec v1'");
  if (!saw_dim) throw SpecParseError(lineno + 1, "missing 'dim' line");
  if (!saw_basis) throw SpecParseError(lineno + 1, "missing 'basis' line");
  return s;
}

SpecData load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spec(buf.str());
}

std::string export_spec(const SpecData& s) {
  std::ostringstream out;
  out << "mha-spec v1\n";
  out << "dim " << s.dim << "\n";
  out << "basis";
  for (const std::string& l : s.labels) out << ' ' << l;
  out << "\n";
  if (s.unit) {
    out << "unit";
    for (const Scalar& c : *s.unit) out << ' ' << to_string(c);
    out << "\n";
  }
  auto dump = [&out, &s](const char* kw, const std::vector<Scalar>& coeffs) {
    for (std::size_t i = 0; i < s.dim; ++i)
      for (std::size_t j = 0; j < s.dim; ++j)
        for (std::size_t k = 0; k < s.dim; ++k) {
          const Scalar& v = coeffs[(i * s.dim + j) * s.dim + k];
          if (v != 0)
            out << kw << ' ' << i << ' ' << j << ' ' << k << ' ' << to_string(v) << "\n";
        }
  };
  dump("m", s.product);
  dump("d", s.delta);
  return out.str();
}

BuiltSpec build_spec(const SpecData& s) {
  FinDimAlgebra alg = FinDimAlgebra::validate(s.labels, s.product, s.unit);
  const std::size_t d = s.dim;
  Matrix delta(d * d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        delta(j * d + k, i) = s.delta[(i * d + j) * d + k];
  ComultMatrix cm = ComultMatrix::validate(alg, std::move(delta));
  return BuiltSpec{std::move(alg), std::move(cm)};
}

}  // namespace mha
