#include "mha/report.hpp"

#include <json.hpp>

#include <sstream>

#include "mha/integrals.hpp"
#include "mha/kg.hpp"

namespace mha::report {

namespace {

using nlohmann::ordered_json;

ordered_json vec_json(const Vec& v) {
  ordered_json a = ordered_json::array();
  for (const Scalar& s : v) a.push_back(to_string(s));
  return a;
}

ordered_json matrix_json(const Matrix& m) {
  ordered_json a = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(vec_json(m.row(i)));
  return a;
}

ordered_json space_json(const std::vector<Vec>& basis) {
  ordered_json a = ordered_json::array();
  for (const Vec& v : basis) a.push_back(vec_json(v));
  return a;
}

const char* verdict_name(Verdict::Kind k) {
  switch (k) {
    case Verdict::Kind::Hopf: return "hopf";
    case Verdict::Kind::NotHopf: return "not-hopf";
    default: return "inconclusive";
  }
}

ordered_json galois_json(const GaloisReport& g) {
  ordered_json j;
  static const char* names[4] = {"T1", "T2", "T1'", "T2'"};
  for (int k = 0; k < 4; ++k) {
    ordered_json e;
    e["rank"] = g.ranks[k];
    e["injective"] = g.injective[k];
    e["surjective"] = g.surjective[k];
    j[names[k]] = e;
  }
  j["implications-ok"] = g.implications_ok;
  return j;
}

ordered_json structure_json(const StructureReport& r) {
  ordered_json a = ordered_json::array();
  for (const IdentityCheck& c : r.checks) {
    ordered_json e;
    e["name"] = c.name;
    e["ok"] = c.ok;
    if (!c.witness.empty()) e["witness"] = c.witness;
    a.push_back(e);
  }
  return a;
}

// Plain-text certificate rendering: scalars inline, arrays of scalars
// space-joined, everything else nested two spaces per level.
void render_text(const ordered_json& j, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  auto inline_array = [](const ordered_json& a) {
    for (const auto& e : a)
      if (e.is_structured()) return false;
    return true;
  };
  auto scalar_str = [](const ordered_json& v) -> std::string {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
  };
  for (const auto& [key, val] : j.items()) {
    if (val.is_object()) {
      out << pad << key << ":\n";
      render_text(val, out, indent + 1);
    } else if (val.is_array() && !inline_array(val)) {
      out << pad << key << ":\n";
      const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
      for (const auto& e : val) {
        if (e.is_array()) {
          out << inner << "-";
          for (const auto& x : e) out << ' ' << scalar_str(x);
          out << "\n";
        } else {
          ordered_json wrap;
          bool first = true;
          for (const auto& [k2, v2] : e.items()) {
            if (first) {
              out << inner << "- " << k2 << ": " << scalar_str(v2) << "\n";
              first = false;
            } else {
              wrap[k2] = v2;
            }
          }
          if (!wrap.is_null()) render_text(wrap, out, indent + 1);
        }
      }
    } else if (val.is_array()) {
      out << pad << key << ":";
      for (const auto& e : val) out << ' ' << scalar_str(e);
      out << "\n";
    } else {
      out << pad << key << ": " << scalar_str(val) << "\n";
    }
  }
}

std::string render(const ordered_json& j, Format format) {
  if (format == Format::Json) return j.dump(2) + "\n";
  std::ostringstream out;
  render_text(j, out, 0);
  return out.str();
}

ordered_json classify_json(const ClassifyResult& r) {
  ordered_json j;
  j["verdict"] = verdict_name(r.verdict.kind);
  if (!r.verdict.reason.empty()) j["reason"] = r.verdict.reason;
  j["left-leg-rank"] = r.left_leg_rank;
  j["right-leg-rank"] = r.right_leg_rank;
  j["full"] = r.full;
  j["left-integral-space"] = space_json(r.left_integral_space);
  j["right-integral-space"] = space_json(r.right_integral_space);
  if (r.left_integral) j["left-integral"] = vec_json(*r.left_integral);
  if (r.right_integral) j["right-integral"] = vec_json(*r.right_integral);
  if (r.gram_rank_left) j["gram-rank-left"] = *r.gram_rank_left;
  if (r.gram_rank_right) j["gram-rank-right"] = *r.gram_rank_right;
  if (r.galois) j["slice-maps"] = galois_json(*r.galois);
  if (r.verdict.kind == Verdict::Kind::Hopf) {
    j["counit"] = vec_json(r.verdict.counit);
    j["antipode"] = matrix_json(*r.verdict.antipode);
  }
  if (r.structure) j["checks"] = structure_json(*r.structure);
  return j;
}

ordered_json classify_discrete_json(const DiscreteClassifyResult& r) {
  ordered_json j;
  j["verdict"] = verdict_name(r.verdict.kind);
  if (!r.verdict.reason.empty()) j["reason"] = r.verdict.reason;
  j["left-cointegral-space"] = space_json(r.left_cointegral_space);
  j["right-cointegral-space"] = space_json(r.right_cointegral_space);
  if (r.left_cointegral) j["left-cointegral"] = vec_json(*r.left_cointegral);
  if (r.right_cointegral) j["right-cointegral"] = vec_json(*r.right_cointegral);
  if (r.faithfulness) {
    j["cointegral-left-leg-rank"] = r.faithfulness->left_leg_rank;
    j["cointegral-right-leg-rank"] = r.faithfulness->right_leg_rank;
    j["cointegral-faithful"] = r.faithfulness->faithful;
  }
  if (r.galois) j["slice-maps"] = galois_json(*r.galois);
  if (r.verdict.kind == Verdict::Kind::Hopf) {
    j["counit"] = vec_json(r.verdict.counit);
    j["antipode"] = matrix_json(*r.verdict.antipode);
  }
  if (r.structure) j["checks"] = structure_json(*r.structure);
  return j;
}

const char* search_status(IntegralSearch::Status s) {
  switch (s) {
    case IntegralSearch::Status::Found: return "found";
    case IntegralSearch::Status::NoIntegral: return "none";
    case IntegralSearch::Status::NoneFaithful: return "none-faithful";
    default: return "inconclusive";
  }
}

ordered_json integrals_side_json(const ComultMatrix& cm, Side side) {
  ordered_json j;
  std::vector<Vec> space = invariant_space(cm, side);
  j["space-dim"] = space.size();
  j["space"] = space_json(space);
  IntegralSearch found = find_faithful_integral(cm, side);
  j["faithful-search"] = search_status(found.status);
  if (found.status == IntegralSearch::Status::Found) {
    j["faithful-integral"] = vec_json(found.integral);
    j["gram-rank"] = rank(gram_matrix(cm.algebra(), found.integral));
  }
  return j;
}

ordered_json cointegrals_side_json(const ComultMatrix& cm, Side side) {
  ordered_json j;
  std::vector<Vec> space = cointegral_space(cm, side);
  j["space-dim"] = space.size();
  j["space"] = space_json(space);
  ordered_json faith = ordered_json::array();
  for (const Vec& h : space) {
    CointegralFaithfulness f = cointegral_faithful(cm, h);
    ordered_json e;
    e["element"] = vec_json(h);
    e["left-leg-rank"] = f.left_leg_rank;
    e["right-leg-rank"] = f.right_leg_rank;
    e["faithful"] = f.faithful;
    faith.push_back(e);
  }
  j["faithfulness"] = faith;
  return j;
}

void require_agreement(const ClassifyResult& a, const DiscreteClassifyResult& b) {
  if (a.verdict.kind != b.verdict.kind)
    throw InternalInconsistencyError("the two classification routes disagree on the verdict");
  if (a.verdict.kind == Verdict::Kind::Hopf) {
    if (a.verdict.counit != b.verdict.counit)
      throw InternalInconsistencyError("the two classification routes produced different counits");
    if (!(*a.verdict.antipode == *b.verdict.antipode))
      throw InternalInconsistencyError(
          "the two classification routes produced different antipodes");
  }
}

}  // namespace

std::string input_digest(const SpecData& s) {
  const std::string canon = export_spec(s);
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : canon) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << "fnv1a:" << std::hex;
  for (int shift = 60; shift >= 0; shift -= 4) out << ((h >> shift) & 0xF);
  return out.str();
}

RunResult run(const std::string& command, const std::string& spec_text, const Options& opts) {
  ordered_json j;
  j["command"] = command;
  try {
    SpecData spec = parse_spec(spec_text);
    j["input-digest"] = input_digest(spec);
    BuiltSpec built = build_spec(spec);
    const ComultMatrix& cm = built.comult;
    const FinDimAlgebra& alg = built.algebra;
    j["dim"] = alg.dim();
    j["basis"] = alg.labels();

    if (command == "check") {
      j["status"] = "ok";
      if (alg.is_unital())
        j["unit"] = vec_json(*alg.unit());
      else
        j["unit"] = "none";
      j["regularity"] = regularity_note(cm);
      j["left-leg-rank"] = comult_leg(cm, Side::Left).rows();
      j["right-leg-rank"] = comult_leg(cm, Side::Right).rows();
      j["full"] = is_full(cm);
    } else if (command == "integrals") {
      if (!opts.side || *opts.side == Side::Left)
        j["left"] = integrals_side_json(cm, Side::Left);
      if (!opts.side || *opts.side == Side::Right)
        j["right"] = integrals_side_json(cm, Side::Right);
    } else if (command == "cointegrals") {
      if (!opts.side || *opts.side == Side::Left)
        j["left"] = cointegrals_side_json(cm, Side::Left);
      if (!opts.side || *opts.side == Side::Right)
        j["right"] = cointegrals_side_json(cm, Side::Right);
    } else if (command == "construct") {
      ClassifyResult res = classify(cm);
      if (res.verdict.kind == Verdict::Kind::Hopf) {
        j["status"] = "constructed";
        j["integral"] = vec_json(*res.left_integral);
        j["counit"] = vec_json(res.verdict.counit);
        j["antipode"] = matrix_json(*res.verdict.antipode);
        j["checks"] = structure_json(*res.structure);
      } else {
        j["status"] = "not-constructible";
        j["verdict"] = verdict_name(res.verdict.kind);
        j["reason"] = res.verdict.reason;
      }
    } else if (command == "classify") {
      if (opts.route == "integral") {
        j["route"] = "integral";
        j.update(classify_json(classify(cm)));
      } else if (opts.route == "cointegral") {
        j["route"] = "cointegral";
        j.update(classify_discrete_json(classify_discrete(cm)));
      } else if (opts.route == "both") {
        ClassifyResult a = classify(cm);
        DiscreteClassifyResult b = classify_discrete(cm);
        require_agreement(a, b);
        j["route"] = "both";
        j["agreement"] = true;
        ordered_json routes;
        routes["integral"] = classify_json(a);
        routes["cointegral"] = classify_discrete_json(b);
        j["verdict"] = verdict_name(a.verdict.kind);
        if (a.verdict.kind == Verdict::Kind::Hopf) {
          j["counit"] = vec_json(a.verdict.counit);
          j["antipode"] = matrix_json(*a.verdict.antipode);
        }
        j["routes"] = routes;
      } else {
        return RunResult{2, "unknown route '" + opts.route + "'\n"};
      }
    } else {
      return RunResult{2, "unknown command '" + command + "'\n"};
    }
    return RunResult{0, render(j, opts.format)};
  } catch (const InternalInconsistencyError& e) {
    j["status"] = "internal-inconsistency";
    j["error"] = e.what();
    return RunResult{3, render(j, opts.format)};
  } catch (const SpecParseError& e) {
    j["status"] = "invalid";
    j["error"] = e.what();
    return RunResult{2, render(j, opts.format)};
  } catch (const std::invalid_argument& e) {
    j["status"] = "invalid";
    j["error"] = e.what();
    return RunResult{2, render(j, opts.format)};
  } catch (const std::runtime_error& e) {
    j["status"] = "invalid";
    j["error"] = e.what();
    return RunResult{2, render(j, opts.format)};
  }
}

RunResult run_kg(const std::string& group, std::uint64_t seed, int samples, Format format) {
  std::unique_ptr<kg::Group> grp;
  if (group == "z")
    grp = std::make_unique<kg::IntegerGroup>();
  else if (group == "z2")
    grp = std::make_unique<kg::IntegerPairGroup>();
  else if (group == "dihedral")
    grp = std::make_unique<kg::InfiniteDihedralGroup>();
  else
    return RunResult{2, "unknown group '" + group + "' (expected z, z2 or dihedral)\n"};
  kg::SuiteReport rep = kg::run_suite(*grp, seed, samples);
  ordered_json j;
  j["command"] = "kg";
  j["group"] = rep.group;
  j["seed"] = rep.seed;
  j["samples"] = rep.samples;
  j["failures"] = rep.failures;
  if (!rep.failed_checks.empty()) j["failed-checks"] = rep.failed_checks;
  j["status"] = rep.all_ok() ? "ok" : "failed";
  return RunResult{rep.all_ok() ? 0 : 3, render(j, format)};
}

}  // namespace mha::report
