#pragma once

// Config-driven front end: parse a JSON run configuration, build the requested
// surface, run named residual checks / the curvature functional / the root
// bounds, and emit deterministic JSON reports and CSV sweep tables.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "ektau/identities.hpp"
#include "ektau/pinching.hpp"
#include "ektau/quadrature.hpp"
#include "ektau/surface.hpp"

namespace ektau {

inline constexpr int kReportSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

struct RunConfig {
  nlohmann::json surface;  // surface block as parsed (echoed into reports)
  GridSpec grid;
  // check selection: explicit names, expanded from "all-general"/"all-cmc"
  std::vector<std::string> checks;
  bool wants_cmc = false;  // any Cmc-group check requested
  std::map<std::string, double> tolerance_overrides;
  std::uint64_t seed = 0;
  std::string raw;  // canonical config text, hashed for provenance
};

// Parses and validates a config file. Unknown check names, malformed schema,
// or cmc checks requested on a non-cmc surface type raise ConfigError.
RunConfig load_config(const std::string& path);

// Builds the surface described by a config's surface block
// (types: hopf_torus, hopf_cylinder_disk, perturbed_torus, graph_patch).
ParametricImmersion build_surface(const nlohmann::json& surface);

// FNV-1a hash of the canonical config text, hex-encoded.
std::string config_hash(const std::string& text);

struct ReportOutcome {
  nlohmann::json report;
  int exit_code = 0;  // 0 pass, 1 residual failure (2 is raised as ConfigError)
};

// Runs the selected checks over the grid and assembles the report
// (per-check max residual, worst point with its frame inputs, verdict).
// An entirely gated grid yields verdict "inconclusive" with exit code 1.
ReportOutcome verify_report(const RunConfig& config);

// Exact-arithmetic replay of the derivative chain on `count` random rational
// states; corrupt_sign is the mutation hook used by the tests.
ReportOutcome formal_report(int count, std::uint64_t seed,
                            bool corrupt_sign = false);

// Value and sign verdict of the curvature functional, with equality detection.
ReportOutcome simons_report(const RunConfig& config);

// One CSV row of root-interval data for a single parameter point.
std::string bounds_csv(const PinchingInput& in);

// CSV table over the ranges config {kappa|tau|H|C: value or
// {min,max,count}}; returns the table and counts ordering-chain violations
// among rows with kappa > 4 tau^2 (must be 0).
struct SweepResult {
  std::string csv;
  int rows = 0;
  int ordering_violations = 0;
};
SweepResult sweep_csv(const nlohmann::json& ranges);

}  // namespace ektau
