// Command-line front end: verify / formal / simons / bounds / sweep.
// Exit codes: 0 all checks pass, 1 a residual or sign check failed,
// 2 config or usage error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "ektau/errors.hpp"
#include "ektau/report.hpp"

using nlohmann::json;

namespace {

int write_output(std::string text, const std::string& out_path) {
  if (text.empty() || text.back() != '\n') text += '\n';
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return 2;
  }
  out << text;
  return 0;
}

int emit(const ektau::ReportOutcome& outcome, const std::string& out_path) {
  int werr = write_output(outcome.report.dump(2), out_path);
  return werr ? werr : outcome.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Residual checks, exact derivative-chain replay, curvature functional "
      "and root-interval tables for cmc surfaces in the two-parameter "
      "homogeneous 3-manifold family (tau != 0)"};
  app.require_subcommand(1);
  std::string out_path;
  app.add_option("-o,--output", out_path, "write the report here instead of stdout")
      ->capture_default_str();

  std::string verify_config;
  auto* verify = app.add_subcommand(
      "verify", "run configured residual checks over a surface grid");
  verify->add_option("config", verify_config, "JSON run configuration")
      ->required();

  int formal_count = 1000;
  std::uint64_t formal_seed = 7;
  bool formal_mutate = false;
  auto* formal = app.add_subcommand(
      "formal", "exact-arithmetic replay of the derivative chain");
  formal->add_option("--count", formal_count, "number of random rational states")
      ->capture_default_str();
  formal->add_option("--seed", formal_seed, "generator seed")
      ->capture_default_str();
  formal
      ->add_flag("--mutate", formal_mutate,
                 "flip a sign in the curvature constraint (self-test hook)")
      ->group("");

  std::string simons_config;
  auto* simons = app.add_subcommand(
      "simons", "evaluate the curvature functional on a compact cmc surface");
  simons->add_option("config", simons_config, "JSON run configuration")
      ->required();

  double b_kappa = 4.0, b_tau = 1.0, b_H = 0.0, b_C = 0.0;
  auto* bounds =
      app.add_subcommand("bounds", "root-interval row for one parameter point");
  bounds->add_option("--kappa", b_kappa)->required();
  bounds->add_option("--tau", b_tau)->required();
  bounds->add_option("--H", b_H)->required();
  bounds->add_option("--C", b_C)->required();

  std::string sweep_config;
  auto* sweep =
      app.add_subcommand("sweep", "CSV root-interval table over parameter ranges");
  sweep->add_option("ranges", sweep_config, "JSON ranges configuration")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage problems map to the config-error code
  }

  try {
    if (*verify)
      return emit(ektau::verify_report(ektau::load_config(verify_config)),
                  out_path);
    if (*formal)
      return emit(ektau::formal_report(formal_count, formal_seed, formal_mutate),
                  out_path);
    if (*simons)
      return emit(ektau::simons_report(ektau::load_config(simons_config)),
                  out_path);
    if (*bounds)
      return write_output(ektau::bounds_csv({b_kappa, b_tau, b_H, b_C}),
                          out_path);
    if (*sweep) {
      std::ifstream in(sweep_config);
      if (!in) throw ektau::ConfigError("cannot read ranges file: " + sweep_config);
      json ranges;
      try {
        ranges = json::parse(in);
      } catch (const json::exception& e) {
        throw ektau::ConfigError(std::string("ranges file is not valid JSON: ") +
                                 e.what());
      }
      auto result = ektau::sweep_csv(ranges);
      int werr = write_output(result.csv, out_path);
      if (werr) return werr;
      std::cerr << "rows: " << result.rows
                << "  ordering violations: " << result.ordering_violations
                << "\n";
      return result.ordering_violations == 0 ? 0 : 1;
    }
  } catch (const ektau::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const ektau::CmcRequired& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const ektau::NonCompact& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
