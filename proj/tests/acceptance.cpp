// Acceptance gate: one pass/fail line per criterion, exit 0 iff all pass.
//
//  1  canonical-frame bracket relations at random points in both charts
//  2  connection forms of the canonical frame from jet derivatives
//  3  general identity suite on non-cmc tori and graph patches
//  4  exact rational replay of the derivative chain + mutation detection
//  5  equality case on a family of vertical tori
//  6  space-form reduction at kappa = 4 tau^2 on the minimal torus
//  7  root-interval oracle and the corridor ordering sweep
//  8  quadrature against the closed-form area oracle

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "ektau/ambient.hpp"
#include "ektau/formal.hpp"
#include "ektau/hopf.hpp"
#include "ektau/identities.hpp"
#include "ektau/pinching.hpp"
#include "ektau/quadrature.hpp"
#include "ektau/surface.hpp"

using namespace ektau;

namespace {

int g_failures = 0;

void report(int n, bool pass, const char* what) {
  std::printf("criterion %d: %s - %s\n", n, pass ? "PASS" : "FAIL", what);
  if (!pass) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

struct ChartSample {
  ChartId chart;
  ModelParams mp;
  Vec3T<double> q;
};

std::vector<ChartSample> random_points(int per_chart, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  std::vector<ChartSample> out;
  for (int i = 0; i < per_chart; ++i) {
    ModelParams mp{1.5 + 3.0 * U(rng), 0.4 + 1.2 * U(rng)};
    double s = 0.1 + (M_PI / 2 - 0.2) * U(rng);
    out.push_back({ChartId::BergerSphere, mp,
                   {s, 2 * M_PI * U(rng), 2 * M_PI * U(rng)}});
  }
  for (int i = 0; i < per_chart; ++i) {
    // mixed-sign base curvature; radius kept inside the chart for kappa < 0
    ModelParams mp{-2.0 + 4.0 * U(rng), 0.4 + 1.2 * U(rng)};
    double rmax = mp.kappa < 0.0 ? 0.9 * 2.0 / std::sqrt(-mp.kappa) : 1.5;
    double r = rmax * std::sqrt(U(rng)), th = 2 * M_PI * U(rng);
    out.push_back({ChartId::DiskModel, mp,
                   {r * std::cos(th), r * std::sin(th), -1.0 + 2.0 * U(rng)}});
  }
  return out;
}

void criterion_brackets() {
  auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (const auto& pt : random_points(100, 11)) {
    AmbientPoint p{pt.chart, pt.q};
    auto F = [&](int i) { return frame_field(pt.chart, pt.mp, i); };
    double c = pt.mp.kappa / (2.0 * pt.mp.tau);
    // frame components of the three brackets vs the structure constants
    struct Case {
      int i, j, k;
      double coeff;
    } cases[] = {{0, 1, 2, -2.0 * pt.mp.tau}, {1, 2, 0, -c}, {2, 0, 1, -c}};
    for (const auto& cs : cases) {
      auto br = lie_bracket(pt.chart, pt.mp, pt.q, F(cs.i), F(cs.j));
      auto bf = to_frame_components(pt.mp, p, br);
      for (int a = 0; a < 3; ++a) {
        double expect = a == cs.k ? cs.coeff : 0.0;
        worst = std::max(worst, std::abs(bf[a] - expect));
      }
    }
  }
  double dt = seconds_since(t0);
  char line[160];
  std::snprintf(line, sizeof line,
                "frame bracket residual %.2e (< 1e-7) at 100 points per chart "
                "in %.2fs (< 5s)",
                worst, dt);
  report(1, worst < 1e-7 && dt < 5.0, line);
}

void criterion_connection_forms() {
  double worst = 0.0;
  for (const auto& pt : random_points(40, 23)) {
    AmbientPoint p{pt.chart, pt.q};
    auto g = metric_at(pt.mp, p);
    auto frame = canonical_frame(pt.mp, p);
    for (int j = 0; j < 3; ++j) {
      auto d3 = covariant_derivative(pt.chart, pt.mp, pt.q,
                                     frame_field(pt.chart, pt.mp, j),
                                     frame_field(pt.chart, pt.mp, 2));
      auto pair = [&](const Vec3T<double>& a, const Vec3T<double>& b) {
        double s = 0.0;
        for (int x = 0; x < 3; ++x)
          for (int y = 0; y < 3; ++y) s += g[x][y] * a[x] * b[y];
        return s;
      };
      // w^1_3 = -tau w^2 and w^2_3 = tau w^1 on the coframe basis
      double w13 = pair(d3, frame[0].coord);
      double w23 = pair(d3, frame[1].coord);
      worst = std::max(worst, std::abs(w13 - (j == 1 ? -pt.mp.tau : 0.0)));
      worst = std::max(worst, std::abs(w23 - (j == 0 ? pt.mp.tau : 0.0)));
      // cross-check against the closed-form table
      Vec3T<double> ej{};
      ej[j] = 1.0;
      worst = std::max(worst,
                       std::abs(w13 - connection_form(pt.mp, 1, 3, ej)));
      worst = std::max(worst,
                       std::abs(w23 - connection_form(pt.mp, 2, 3, ej)));
    }
  }
  char line[160];
  std::snprintf(line, sizeof line,
                "vertical connection-form residual %.2e (< 1e-7)", worst);
  report(2, worst < 1e-7, line);
}

void criterion_general_suite() {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<ParametricImmersion> corpus;
  corpus.push_back(perturbed_torus({{4.0, 1.0}, 0.8, 0.05, 2, 3}));
  corpus.push_back(perturbed_torus({{2.5, 0.7}, 0.6, 0.08, 1, 2}));
  corpus.push_back(perturbed_torus({{5.0, 1.3}, 1.0, 0.06, 3, 1}));
  corpus.push_back(
      graph_patch({{0.0, 0.7}, 0.3, -0.2, 0.15, 1.3, 0.9, 0.1, 0.0, 0.3}));
  corpus.push_back(
      graph_patch({{-1.0, 0.5}, -0.1, 0.4, 0.1, 0.8, 1.5, 0.2, -0.1, 0.25}));
  bool pass = true;
  double worst_margin = 0.0;
  for (const auto& imm : corpus) {
    auto suite = run_identity_suite(imm, 7, 7, false);
    pass = pass && suite.pass && suite.scan.points > 0;
    for (const auto& c : suite.checks)
      worst_margin = std::max(worst_margin, c.max_residual / c.tolerance);
  }
  double dt = seconds_since(t0);
  char line[200];
  std::snprintf(line, sizeof line,
                "general suite on 3 non-cmc tori + 2 graph patches, worst "
                "residual at %.1f%% of tolerance, %.1fs (< 60s)",
                100.0 * worst_margin, dt);
  report(3, pass && dt < 60.0, line);
}

void criterion_formal() {
  auto t0 = std::chrono::steady_clock::now();
  FormalRun clean = run_formal(1000, 7);
  FormalRun mutated = run_formal(50, 3, true);
  double dt = seconds_since(t0);
  bool pass = clean.count == 1000 && clean.failures == 0 &&
              mutated.failures > 0 && mutated.has_witness && dt < 30.0;
  char line[200];
  std::snprintf(line, sizeof line,
                "1000 rational states exactly zero (%d failures); sign "
                "mutation detected (%d/%d); %.1fs (< 30s)",
                clean.failures, mutated.failures, mutated.count, dt);
  report(4, pass, line);
}

void criterion_equality_case() {
  struct Spec {
    double kappa, tau, s;
  } specs[] = {{4.0, 1.0, 0.5},  {4.0, 1.0, 1.0},  {4.0, 0.5, 0.7},
               {2.0, 0.8, 0.6},  {2.0, 0.8, 0.9},  {6.0, 1.2, 0.4},
               {6.0, 1.2, 1.1},  {1.5, 0.4, 0.8},  {3.0, 1.5, 0.65},
               {5.0, 0.9, 0.85}};
  double worst_spread = 0.0, worst_C = 0.0, worst_A2 = 0.0, worst_integrand = 0.0,
         worst_value = 0.0;
  for (const auto& sp : specs) {
    auto imm = hopf_torus({{sp.kappa, sp.tau}, sp.s});
    auto scan = scan_grid(imm, 10, 10);
    worst_spread = std::max(worst_spread, scan.H_spread);
    worst_C = std::max(worst_C, scan.C_max);
    double H = *imm.cmc_H;
    auto us = grid_axis(0.0, 2 * M_PI, 10, true);
    for (double u : us)
      for (double v : us) {
        auto d = frame_data(imm, u, v);
        worst_A2 = std::max(
            worst_A2, std::abs(d.A2 - 2.0 * (2.0 * H * H + sp.tau * sp.tau)));
        worst_integrand = std::max(
            worst_integrand,
            std::abs(simons_integrand(d.phi2, d.C, d.params, H)));
      }
    auto s = simons_functional(imm, {10, 10});
    worst_value = std::max(worst_value, std::abs(s.integral.value));
  }
  bool pass = worst_spread < 1e-9 && worst_C < 1e-10 && worst_A2 < 1e-8 &&
              worst_integrand < 1e-8 && worst_value < 1e-7;
  char line[240];
  std::snprintf(line, sizeof line,
                "10 vertical tori: H spread %.1e (<1e-9), |C| %.1e (<1e-10), "
                "|A|^2 law %.1e (<1e-8), integrand %.1e (<1e-8), functional "
                "%.1e (<1e-7)",
                worst_spread, worst_C, worst_A2, worst_integrand, worst_value);
  report(5, pass, line);
}

void criterion_space_form() {
  auto imm = hopf_torus({{4.0, 1.0}, M_PI / 4});
  auto d = frame_data(imm, 0.9, 1.7);
  double H = *imm.cmc_H;
  auto r = integrate(imm, gated_field([](const SurfaceFrameData& s) {
                       return s.A2 * (s.A2 - 2.0);
                     }),
                     {12, 12});
  bool pass = std::abs(H) < 1e-10 && std::abs(d.A2 - 2.0) < 1e-8 &&
              std::abs(r.value) < 1e-7;
  char line[200];
  std::snprintf(line, sizeof line,
                "minimal torus at kappa = 4 tau^2: |H| %.1e (<1e-10), "
                "|A|^2 - 2 = %.1e (<1e-8), integral %.1e (<1e-7)",
                std::abs(H), d.A2 - 2.0, r.value);
  report(6, pass, line);
}

void criterion_pinching() {
  auto iv = pinching_interval({4.0, 0.5, 0.0, 0.0});
  // independent oracle: roots of x^2 + 2.5 x - 1.5
  double disc = std::sqrt(2.5 * 2.5 + 4.0 * 1.5);
  bool point_ok = std::abs(iv.rho - 12.25) < 1e-12 &&
                  std::abs(iv.a - (-2.5 - disc) / 2) < 1e-12 &&
                  std::abs(iv.b - (-2.5 + disc) / 2) < 1e-12 &&
                  std::abs(iv.a + 3.0) < 1e-12 && std::abs(iv.b - 0.5) < 1e-12;
  std::mt19937 rng(123);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  int violations = 0;
  double worst_vieta = 0.0;
  for (int i = 0; i < 10000; ++i) {
    double tau = 0.1 + 2.0 * U(rng);
    double kappa = 4 * tau * tau + 0.01 + 5.0 * U(rng);
    double H = -2.0 + 4.0 * U(rng);
    double C = -1.0 + 2.0 * U(rng);
    auto v = pinching_interval({kappa, tau, H, C});
    double ht = H * H + tau * tau;
    if (v.negative_discriminant || !(v.a <= ht) || !(2 * ht <= v.b + 1e-12))
      ++violations;
    double K = kappa - 4 * tau * tau;
    double mid = 2 * ht + K * (5 * C * C - 1);
    double cst = 2 * K * ht * (3 * C * C - 1);
    double scale = 1.0 + std::abs(mid) + std::abs(cst);
    worst_vieta =
        std::max(worst_vieta, std::max(std::abs(v.a + v.b - mid) / scale,
                                       std::abs(v.a * v.b - cst) / scale));
  }
  bool pass = point_ok && violations == 0 && worst_vieta < 1e-10;
  char line[200];
  std::snprintf(line, sizeof line,
                "rho = 12.25, (a,b) = (-3, 0.5) vs root oracle; ordering "
                "violations %d/10000 (must be 0); Vieta %.1e (<1e-10)",
                violations, worst_vieta);
  report(7, pass, line);
}

void criterion_quadrature() {
  auto imm = hopf_torus({{4.0, 1.0}, M_PI / 4});
  auto area = integrate(imm, constant_field(1.0), {16, 16});
  double err = std::abs(area.value - 2.0 * M_PI * M_PI);
  // doubling stability on every smooth periodic integrand used above
  double H = *imm.cmc_H;
  auto r1 = integrate(imm, gated_field([](const SurfaceFrameData& s) {
                        return s.A2 * (s.A2 - 2.0);
                      }),
                      {16, 16});
  auto r2 = integrate(imm, gated_field([H](const SurfaceFrameData& s) {
                        return simons_integrand(s.phi2, s.C, s.params, H);
                      }),
                      {16, 16});
  double delta = std::max({area.doubling_delta, r1.doubling_delta,
                           r2.doubling_delta});
  bool pass = err < 1e-8 && delta < 1e-10;
  char line[200];
  std::snprintf(line, sizeof line,
                "torus area vs 2 pi^2: %.1e (<1e-8); grid-doubling delta "
                "%.1e (<1e-10) on all periodic integrands",
                err, delta);
  report(8, pass, line);
}

}  // namespace

int main() {
  criterion_brackets();
  criterion_connection_forms();
  criterion_general_suite();
  criterion_formal();
  criterion_equality_case();
  criterion_space_form();
  criterion_pinching();
  criterion_quadrature();
  if (g_failures) std::printf("%d criterion(s) failed\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
