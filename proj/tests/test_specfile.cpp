#include <doctest.h>

#include "helpers.hpp"
#include "mha/catalog.hpp"
#include "mha/report.hpp"

using namespace mha;
using mha::testing::to_spec;

namespace {

const char* kH4 = R"(mha-spec v1
# four-dimensional example with a non-involutive antipode
dim 4
basis 1 g x gx
unit 1 0 0 0
m 0 0 0 1
m 0 1 1 1
m 0 2 2 1
m 0 3 3 1
m 1 0 1 1
m 1 1 0 1
m 1 2 3 1
m 1 3 2 1
m 2 0 2 1
m 2 1 3 -1
m 3 0 3 1
m 3 1 2 -1
d 0 0 0 1
d 1 1 1 1
d 2 2 0 1
d 2 1 2 1
d 3 3 1 1
d 3 0 3 1
)";

}  // namespace

TEST_SUITE("specfile") {

TEST_CASE("parsing and building a well-formed file") {
  SpecData s = parse_spec(kH4);
  CHECK(s.dim == 4);
  CHECK(s.labels == std::vector<std::string>{"1", "g", "x", "gx"});
  REQUIRE(s.unit.has_value());
  BuiltSpec built = build_spec(s);
  ClassifyResult res = classify(built.comult);
  CHECK(res.verdict.kind == Verdict::Kind::Hopf);
}

TEST_CASE("export and parse are mutually inverse on all worked examples") {
  for (const auto& entry : catalog::all_entries()) {
    CAPTURE(entry.name);
    SpecData s = to_spec(entry.algebra, entry.comult);
    SpecData back = parse_spec(export_spec(s));
    CHECK(back == s);
    // Exporting again is byte-identical.
    CHECK(export_spec(back) == export_spec(s));
  }
}

TEST_CASE("parse errors carry exact line numbers") {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      parse_spec(text);
    } catch (const SpecParseError& e) {
      return e.line;
    }
    return 0;
  };
  CHECK(line_of("nonsense\n") == 1);
  CHECK(line_of("mha-spec v1\ndim 0\n") == 2);
  CHECK(line_of("mha-spec v1\ndim two\n") == 2);
  CHECK(line_of("mha-spec v1\ndim 2\nbasis a\n") == 3);
  CHECK(line_of("mha-spec v1\ndim 2\nbasis a a\n") == 3);
  CHECK(line_of("mha-spec v1\ndim 2\nbasis a b\nm 0 0 2 1\n") == 4);
  CHECK(line_of("mha-spec v1\ndim 2\nbasis a b\nm 0 0 0 1/0\n") == 4);
  CHECK(line_of("mha-spec v1\ndim 2\nbasis a b\nm 0 0 0 1\nm 0 0 0 2\n") == 5);
  CHECK(line_of("mha-spec v1\ndim 2\nbasis a b\nwhat 1 2\n") == 4);
  CHECK(line_of("mha-spec v1\nbasis a b\n") == 2);
  // Missing sections point one past the end.
  CHECK(line_of("mha-spec v1\ndim 2\n") == 3);
}

TEST_CASE("comments and blank lines are ignored") {
  SpecData a = parse_spec("mha-spec v1\n\ndim 1\n# hello\nbasis e  # trailing\nm 0 0 0 1\nd 0 0 0 1\n");
  SpecData b = parse_spec("mha-spec v1\ndim 1\nbasis e\nm 0 0 0 1\nd 0 0 0 1\n");
  CHECK(a == b);
}

TEST_CASE("input digest is format independent") {
  SpecData a = parse_spec(kH4);
  // Same content, different whitespace, comments and line order.
  std::string reordered = "mha-spec v1\ndim 4\nbasis 1 g x gx\nunit 1 0 0 0\n";
  reordered += "d 3 0 3 1\nd 3 3 1 1\nd 2 1 2 1\nd 2 2 0 1\nd 1 1 1 1\nd 0 0 0 1\n";
  reordered += "m 3 1 2 -1\nm 3 0 3 1\nm 2 1 3 -1\nm 2 0 2 1\n";
  reordered += "m 1 3 2 1\nm 1 2 3 1\nm 1 1 0 1\nm 1 0 1 1\n";
  reordered += "m 0 3 3 1\nm 0 2 2 1\nm 0 1 1 1\nm 0 0 0 1\n";
  SpecData b = parse_spec(reordered);
  CHECK(report::input_digest(a) == report::input_digest(b));
  // A genuinely different input hashes differently.
  SpecData c = a;
  c.product[0] = 2;
  CHECK(report::input_digest(a) != report::input_digest(c));
}

TEST_CASE("report runner maps outcomes to exit codes") {
  report::Options json;
  json.format = report::Format::Json;
  report::RunResult ok = report::run("classify", kH4, json);
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("\"verdict\": \"hopf\"") != std::string::npos);
  CHECK(ok.output.find("\"agreement\": true") != std::string::npos);

  report::RunResult bad = report::run("classify", "mha-spec v1\ndim oops\n", json);
  CHECK(bad.exit_code == 2);
  CHECK(bad.output.find("\"status\": \"invalid\"") != std::string::npos);

  report::RunResult check = report::run("check", kH4, json);
  CHECK(check.exit_code == 0);
  CHECK(check.output.find("\"full\": true") != std::string::npos);
}

TEST_CASE("report rendering is byte-deterministic") {
  report::Options text;
  report::RunResult a = report::run("classify", kH4, text);
  report::RunResult b = report::run("classify", kH4, text);
  CHECK(a.output == b.output);
  CHECK(a.exit_code == 0);
  CHECK(a.output.find("verdict: hopf") != std::string::npos);
}

TEST_CASE("integrals and cointegrals commands report both sides") {
  report::Options json;
  json.format = report::Format::Json;
  report::RunResult r = report::run("integrals", kH4, json);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"left\"") != std::string::npos);
  CHECK(r.output.find("\"right\"") != std::string::npos);
  report::Options left_only = json;
  left_only.side = Side::Left;
  report::RunResult l = report::run("cointegrals", kH4, left_only);
  CHECK(l.exit_code == 0);
  CHECK(l.output.find("\"left\"") != std::string::npos);
  CHECK(l.output.find("\"right\"") == std::string::npos);
}

TEST_CASE("construct command emits verified maps") {
  report::Options json;
  json.format = report::Format::Json;
  report::RunResult r = report::run("construct", kH4, json);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"status\": \"constructed\"") != std::string::npos);
  CHECK(r.output.find("\"antipode\"") != std::string::npos);
}

TEST_CASE("kg command runs the sampled suite") {
  report::RunResult r = report::run_kg("z", 5, 50, report::Format::Json);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"failures\": 0") != std::string::npos);
  report::RunResult bad = report::run_kg("nope", 5, 50, report::Format::Json);
  CHECK(bad.exit_code == 2);
}

}  // TEST_SUITE
