#include "ektau/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "ektau/errors.hpp"
#include "ektau/formal.hpp"
#include "ektau/hopf.hpp"
#include "ektau/quadrature.hpp"

using nlohmann::json;

namespace ektau {

namespace {

ModelParams parse_model(const json& j) {
  if (!j.contains("model") || !j["model"].is_object())
    throw ConfigError("surface block needs a 'model' object with kappa and tau");
  const json& m = j["model"];
  if (!m.contains("kappa") || !m.contains("tau"))
    throw ConfigError("model requires numeric 'kappa' and 'tau'");
  return {m["kappa"].get<double>(), m["tau"].get<double>()};
}

double field(const json& j, const char* key, double dflt) {
  return j.contains(key) ? j[key].get<double>() : dflt;
}

bool surface_type_is_cmc(const std::string& type) {
  return type == "hopf_torus" || type == "hopf_cylinder_disk";
}

// deterministic numeric formatting for CSV cells
std::string num(double x) {
  if (std::isnan(x)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string rat_str(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

std::string csv_header() {
  return "kappa,tau,H,C,rho,a,b,corridor_lo,corridor_hi,regime\n";
}

// row of interval data; counts an ordering-chain violation for the caller
std::string csv_row(const PinchingInput& in, bool* violation) {
  auto iv = pinching_interval(in);
  bool pinching_regime = in.kappa > 4.0 * in.tau * in.tau;
  std::string row = num(in.kappa) + "," + num(in.tau) + "," + num(in.H) + "," +
                    num(in.C) + "," + num(iv.rho) + "," + num(iv.a) + "," +
                    num(iv.b) + ",";
  if (pinching_regime) {
    double h2 = 2.0 * in.H * in.H;
    row += num(iv.a + h2) + "," + num(iv.b + h2) + ",pinching\n";
    double ht = in.H * in.H + in.tau * in.tau;
    if (violation)
      *violation = iv.negative_discriminant || !(iv.a <= ht + 1e-12) ||
                   !(2.0 * ht <= iv.b + 1e-12);
  } else {
    row += ",,open\n";
    if (violation) *violation = false;
  }
  return row;
}

struct AxisSamples {
  std::vector<double> values;
};

AxisSamples parse_axis(const json& j, const char* key) {
  if (!j.contains(key))
    throw ConfigError(std::string("sweep ranges require '") + key + "'");
  const json& a = j[key];
  AxisSamples out;
  if (a.is_number()) {
    out.values.push_back(a.get<double>());
    return out;
  }
  if (!a.is_object() || !a.contains("min") || !a.contains("max") ||
      !a.contains("count"))
    throw ConfigError(std::string(key) +
                      ": expected a number or {min,max,count}");
  double lo = a["min"].get<double>(), hi = a["max"].get<double>();
  int n = a["count"].get<int>();
  if (n < 1) throw ConfigError(std::string(key) + ": empty range");
  for (int i = 0; i < n; ++i)
    out.values.push_back(n == 1 ? lo : lo + (hi - lo) * i / (n - 1));
  return out;
}

json provenance(const std::string& raw, std::uint64_t seed) {
  return {{"config_hash", config_hash(raw)},
          {"seed", seed},
          {"tool_version", kToolVersion}};
}

}  // namespace

std::string config_hash(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[24];
  std::snprintf(buf, sizeof buf, "fnv1a:%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

ParametricImmersion build_surface(const json& surface) {
  if (!surface.is_object() || !surface.contains("type"))
    throw ConfigError("surface block requires a 'type'");
  std::string type = surface["type"].get<std::string>();
  ModelParams mp = parse_model(surface);
  try {
    if (type == "hopf_torus")
      return hopf_torus({mp, field(surface, "s", M_PI / 4)});
    if (type == "hopf_cylinder_disk")
      return hopf_cylinder_disk(mp, field(surface, "radius", 0.5));
    if (type == "perturbed_torus")
      return perturbed_torus({mp, field(surface, "s", M_PI / 4),
                              field(surface, "amplitude", 0.0),
                              surface.value("freq_u", 2),
                              surface.value("freq_v", 3)});
    if (type == "graph_patch")
      return graph_patch({mp, field(surface, "cx", 0.0), field(surface, "cy", 0.0),
                          field(surface, "amp", 0.0), field(surface, "fx", 1.0),
                          field(surface, "fy", 1.0), field(surface, "x0", 0.0),
                          field(surface, "y0", 0.0), field(surface, "half", 0.3)});
  } catch (const json::exception& e) {
    throw ConfigError(std::string("surface block: ") + e.what());
  }
  throw ConfigError("unknown surface type: " + type);
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();

  RunConfig cfg;
  cfg.raw = buf.str();
  json j;
  try {
    j = json::parse(cfg.raw);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }

  try {
    if (j.value("schema_version", kReportSchemaVersion) != kReportSchemaVersion)
      throw ConfigError("unsupported schema_version");
    if (!j.contains("surface")) throw ConfigError("config requires 'surface'");
    cfg.surface = j["surface"];
    if (!cfg.surface.is_object() || !cfg.surface.contains("type"))
      throw ConfigError("surface block requires a 'type'");
    cfg.grid.n_u = j.contains("grid") ? j["grid"].value("n_u", 12) : 12;
    cfg.grid.n_v = j.contains("grid") ? j["grid"].value("n_v", 12) : 12;
    if (cfg.grid.n_u < 1 || cfg.grid.n_v < 1)
      throw ConfigError("grid sizes must be positive");
    cfg.seed = j.value("seed", 0);

    const auto& reg = check_registry();
    auto expand = [&](const std::string& sel) {
      if (sel == "all-general") {
        for (const auto& c : reg)
          if (c.group == CheckGroup::General) cfg.checks.push_back(c.name);
        return;
      }
      if (sel == "all-cmc") {
        for (const auto& c : reg) cfg.checks.push_back(c.name);
        return;
      }
      bool found = false;
      for (const auto& c : reg) found = found || c.name == sel;
      if (!found) throw ConfigError("unknown check name: " + sel);
      cfg.checks.push_back(sel);
    };
    if (j.contains("checks")) {
      if (j["checks"].is_string())
        expand(j["checks"].get<std::string>());
      else if (j["checks"].is_array())
        for (const auto& s : j["checks"]) expand(s.get<std::string>());
      else
        throw ConfigError("'checks' must be a string or array of strings");
    } else {
      expand("all-general");
    }
    std::sort(cfg.checks.begin(), cfg.checks.end());
    cfg.checks.erase(std::unique(cfg.checks.begin(), cfg.checks.end()),
                     cfg.checks.end());

    for (const auto& c : reg)
      if (c.group == CheckGroup::Cmc &&
          std::find(cfg.checks.begin(), cfg.checks.end(), c.name) !=
              cfg.checks.end())
        cfg.wants_cmc = true;
    if (cfg.wants_cmc &&
        !surface_type_is_cmc(cfg.surface["type"].get<std::string>()))
      throw ConfigError(
          "cmc-group checks requested on a surface type without a cmc tag");

    if (j.contains("tolerances")) {
      if (!j["tolerances"].is_object())
        throw ConfigError("'tolerances' must map check names to numbers");
      for (auto it = j["tolerances"].begin(); it != j["tolerances"].end(); ++it) {
        if (std::find(cfg.checks.begin(), cfg.checks.end(), it.key()) ==
            cfg.checks.end())
          throw ConfigError("tolerance override for unselected check: " +
                            it.key());
        cfg.tolerance_overrides[it.key()] = it.value().get<double>();
      }
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config schema violation: ") + e.what());
  }
  return cfg;
}

ReportOutcome verify_report(const RunConfig& cfg) {
  ParametricImmersion imm = build_surface(cfg.surface);
  if (cfg.wants_cmc && !imm.cmc_H)
    throw ConfigError("cmc checks requested but the surface carries no cmc tag");

  std::optional<double> env_tol;
  if (const char* e = std::getenv("EKTAU_TOL")) env_tol = std::atof(e);

  struct Rec {
    const IdentityCheck* chk = nullptr;
    double tol = 0.0;
    double max_res = -1.0;
    int evaluated = 0;
    double wu = 0.0, wv = 0.0;
    SurfaceFrameData worst{};
  };
  std::vector<Rec> recs;
  for (const auto& name : cfg.checks) {
    for (const auto& c : check_registry())
      if (c.name == name) {
        Rec r;
        r.chk = &c;
        auto it = cfg.tolerance_overrides.find(name);
        r.tol = it != cfg.tolerance_overrides.end()
                    ? it->second
                    : (env_tol ? *env_tol : c.tolerance);
        recs.push_back(r);
      }
  }

  double H_const = imm.cmc_H.value_or(0.0);
  auto us = grid_axis(imm.domain.u0, imm.domain.u1, cfg.grid.n_u,
                      imm.domain.periodic_u);
  auto vs = grid_axis(imm.domain.v0, imm.domain.v1, cfg.grid.n_v,
                      imm.domain.periodic_v);
  int skipped = 0, points = 0;
  for (double u : us)
    for (double v : vs) {
      if (!in_W(imm, u, v)) {
        ++skipped;
        continue;
      }
      SurfaceFrameData d = frame_data(imm, u, v);
      ++points;
      for (auto& r : recs) {
        double res = std::abs(r.chk->residual(d, H_const));
        ++r.evaluated;
        if (res > r.max_res) {
          r.max_res = res;
          r.wu = u;
          r.wv = v;
          r.worst = d;
        }
      }
    }

  bool inconclusive = points == 0;
  bool all_pass = !inconclusive;
  json checks = json::array();
  for (const auto& r : recs) {
    bool pass = !inconclusive && r.max_res <= r.tol;
    all_pass = all_pass && pass;
    json rec = {
        {"name", r.chk->name},
        {"group", r.chk->group == CheckGroup::Cmc ? "cmc" : "general"},
        {"tolerance", r.tol},
        {"evaluated", r.evaluated},
        {"max_residual", inconclusive ? json() : json(r.max_res)},
        {"verdict", inconclusive ? "inconclusive" : (pass ? "pass" : "fail")}};
    if (!inconclusive)
      rec["worst_point"] = json{{"u", r.wu},           {"v", r.wv},
                                {"beta", r.worst.beta}, {"C", r.worst.C},
                                {"H", r.worst.H},       {"beta1", r.worst.beta1},
                                {"beta2", r.worst.beta2},
                                {"phi_sq", r.worst.phi2}};
    checks.push_back(std::move(rec));
  }

  ReportOutcome out;
  out.report = {{"schema_version", kReportSchemaVersion},
                {"command", "verify"},
                {"provenance", provenance(cfg.raw, cfg.seed)},
                {"surface", cfg.surface},
                {"grid", {{"n_u", cfg.grid.n_u}, {"n_v", cfg.grid.n_v}}},
                {"points", points},
                {"skipped", skipped},
                {"checks", checks},
                {"verdict", inconclusive ? "inconclusive"
                                         : (all_pass ? "pass" : "fail")}};
  out.exit_code = all_pass ? 0 : 1;
  return out;
}

ReportOutcome formal_report(int count, std::uint64_t seed, bool corrupt_sign) {
  if (count < 1) throw ConfigError("formal run count must be >= 1");
  FormalRun run = run_formal(count, seed, corrupt_sign);
  ReportOutcome out;
  out.report = {{"schema_version", kReportSchemaVersion},
                {"command", "formal"},
                {"provenance", provenance("formal", seed)},
                {"count", run.count},
                {"failures", run.failures},
                {"verdict", run.failures == 0 ? "pass" : "fail"}};
  if (run.has_witness)
    out.report["witness"] = json{{"t", rat_str(run.witness.t)},
                                 {"beta1", rat_str(run.witness.beta1)},
                                 {"H", rat_str(run.witness.H)},
                                 {"tau", rat_str(run.witness.tau)},
                                 {"kappa", rat_str(run.witness.kappa)}};
  out.exit_code = run.failures == 0 ? 0 : 1;
  return out;
}

ReportOutcome simons_report(const RunConfig& cfg) {
  ParametricImmersion imm = build_surface(cfg.surface);
  SimonsResult s = simons_functional(imm, cfg.grid);
  constexpr double tol = 1e-7;
  bool equality = std::abs(s.integral.value) < tol;
  ReportOutcome out;
  out.report = {{"schema_version", kReportSchemaVersion},
                {"command", "simons"},
                {"provenance", provenance(cfg.raw, cfg.seed)},
                {"surface", cfg.surface},
                {"grid", {{"n_u", cfg.grid.n_u}, {"n_v", cfg.grid.n_v}}},
                {"H", s.H},
                {"value", s.integral.value},
                {"coarse_value", s.integral.coarse},
                {"doubling_delta", s.integral.doubling_delta},
                {"nonnegative", s.nonnegative},
                {"equality_case", equality},
                {"verdict", s.nonnegative ? "pass" : "fail"}};
  out.exit_code = s.nonnegative ? 0 : 1;
  return out;
}

std::string bounds_csv(const PinchingInput& in) {
  return csv_header() + csv_row(in, nullptr);
}

SweepResult sweep_csv(const json& ranges) {
  if (!ranges.is_object()) throw ConfigError("sweep ranges must be an object");
  AxisSamples ks = parse_axis(ranges, "kappa");
  AxisSamples ts = parse_axis(ranges, "tau");
  AxisSamples hs = parse_axis(ranges, "H");
  AxisSamples cs = parse_axis(ranges, "C");
  SweepResult out;
  out.csv = csv_header();
  for (double k : ks.values)
    for (double t : ts.values)
      for (double h : hs.values)
        for (double c : cs.values) {
          bool viol = false;
          out.csv += csv_row({k, t, h, c}, &viol);
          ++out.rows;
          if (viol) ++out.ordering_violations;
        }
  return out;
}

}  // namespace ektau
