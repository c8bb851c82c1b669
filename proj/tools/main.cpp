#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "mha/report.hpp"

namespace {

int run_file_command(const std::string& command, const std::string& path,
                     const mha::report::Options& opts) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot open '" << path << "'\n";
    return 2;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  mha::report::RunResult res = mha::report::run(command, buf.str(), opts);
  std::cout << res.output;
  return res.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact decision procedure for Hopf structure on finite-dimensional algebras"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  std::string file;
  std::string side;
  std::string route = "both";
  std::string group;
  std::uint64_t seed = 0;
  int samples = 64;

  CLI::App* check = app.add_subcommand("check", "Validate the input and report basic structure");
  check->add_option("file", file, "Input file")->required();

  CLI::App* integrals = app.add_subcommand("integrals", "Compute invariant functionals");
  integrals->add_option("file", file, "Input file")->required();
  integrals->add_option("--side", side, "Restrict to one side")
      ->check(CLI::IsMember({"left", "right"}));

  CLI::App* cointegrals = app.add_subcommand("cointegrals", "Compute cointegral elements");
  cointegrals->add_option("file", file, "Input file")->required();
  cointegrals->add_option("--side", side, "Restrict to one side")
      ->check(CLI::IsMember({"left", "right"}));

  CLI::App* construct =
      app.add_subcommand("construct", "Construct counit and antipode from a faithful integral");
  construct->add_option("file", file, "Input file")->required();

  CLI::App* classify = app.add_subcommand("classify", "Full decision with certificate");
  classify->add_option("file", file, "Input file")->required();
  classify->add_option("--route", route, "Which pipeline to run")
      ->check(CLI::IsMember({"integral", "cointegral", "both"}))
      ->capture_default_str();

  CLI::App* kg = app.add_subcommand("kg", "Sampled checks on infinite-group function algebras");
  kg->add_option("--group", group, "Group family")
      ->check(CLI::IsMember({"z", "z2", "dihedral"}))
      ->required();
  kg->add_option("--seed", seed, "Sampling seed")->capture_default_str();
  kg->add_option("--samples", samples, "Number of sampled pairs")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);
  (void)check;
  (void)integrals;
  (void)cointegrals;
  (void)construct;
  (void)classify;

  mha::report::Options opts;
  opts.format = format == "json" ? mha::report::Format::Json : mha::report::Format::Text;
  if (side == "left") opts.side = mha::Side::Left;
  if (side == "right") opts.side = mha::Side::Right;
  opts.route = route;

  try {
    if (kg->parsed()) {
      mha::report::RunResult res = mha::report::run_kg(group, seed, samples, opts.format);
      std::cout << res.output;
      return res.exit_code;
    }
    const CLI::App* sub = app.get_subcommands().front();
    return run_file_command(sub->get_name(), file, opts);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
