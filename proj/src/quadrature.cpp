#include "ektau/quadrature.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "ektau/errors.hpp"
#include "ektau/identities.hpp"

namespace ektau {

namespace {

// nodes and weights on one axis: periodic trapezoid or composite Simpson
void axis_rule(double a, double b, int n, bool periodic, std::vector<double>& xs,
               std::vector<double>& ws) {
  xs.clear();
  ws.clear();
  if (periodic) {
    double h = (b - a) / n;
    for (int i = 0; i < n; ++i) {
      xs.push_back(a + h * i);
      ws.push_back(h);
    }
    return;
  }
  if (n % 2) ++n;  // Simpson needs an even interval count
  double h = (b - a) / n;
  for (int i = 0; i <= n; ++i) {
    xs.push_back(a + h * i);
    double w = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    ws.push_back(w * h / 3.0);
  }
}

double pairwise_sum(std::vector<double>& v, size_t lo, size_t hi) {
  if (hi - lo <= 8) {
    double s = 0.0;
    for (size_t i = lo; i < hi; ++i) s += v[i];
    return s;
  }
  size_t mid = lo + (hi - lo) / 2;
  return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

double area_element(const ParametricImmersion& imm, double u, double v) {
  auto q = imm.eval(u, v);
  auto g = chart_metric<Jet3>(imm.chart, imm.params, q);
  Vec3T<Jet3> Xu, Xv;
  for (int c = 0; c < 3; ++c) {
    Xu[c] = q[c].du();
    Xv[c] = q[c].dv();
  }
  double E = quad_form(g, Xu, Xu).value();
  double F = quad_form(g, Xu, Xv).value();
  double G = quad_form(g, Xv, Xv).value();
  double det = E * G - F * F;
  if (det <= 0.0) throw DegenerateParametrization("vanishing area element");
  return std::sqrt(det);
}

double integrate_once(const ParametricImmersion& imm, const ScalarField& field,
                      int n_u, int n_v) {
  std::vector<double> us, wu, vs, wv;
  axis_rule(imm.domain.u0, imm.domain.u1, n_u, imm.domain.periodic_u, us, wu);
  axis_rule(imm.domain.v0, imm.domain.v1, n_v, imm.domain.periodic_v, vs, wv);
  std::vector<double> terms;
  terms.reserve(us.size() * vs.size());
  for (size_t i = 0; i < us.size(); ++i)
    for (size_t j = 0; j < vs.size(); ++j)
      terms.push_back(wu[i] * wv[j] * field(imm, us[i], vs[j]) *
                      area_element(imm, us[i], vs[j]));
  return pairwise_sum(terms, 0, terms.size());
}

}  // namespace

ScalarField constant_field(double c) {
  return [c](const ParametricImmersion&, double, double) { return c; };
}

ScalarField gated_field(std::function<double(const SurfaceFrameData&)> f) {
  return [f = std::move(f)](const ParametricImmersion& imm, double u, double v) {
    return f(frame_data(imm, u, v));
  };
}

IntegralResult integrate(const ParametricImmersion& imm, const ScalarField& field,
                         const GridSpec& grid) {
  if (grid.n_u < 1 || grid.n_v < 1)
    throw ConfigError("grid sizes must be positive");
  IntegralResult r;
  r.n_u = grid.n_u;
  r.n_v = grid.n_v;
  r.coarse = integrate_once(imm, field, grid.n_u, grid.n_v);
  r.value = integrate_once(imm, field, 2 * grid.n_u, 2 * grid.n_v);
  r.doubling_delta = std::abs(r.value - r.coarse);
  return r;
}

double surface_area(const ParametricImmersion& imm, const GridSpec& grid) {
  return integrate(imm, constant_field(1.0), grid).value;
}

SimonsResult simons_functional(const ParametricImmersion& imm,
                               const GridSpec& grid) {
  if (!imm.cmc_H)
    throw CmcRequired("the curvature functional requires a cmc-tagged surface");
  if (!(imm.domain.periodic_u && imm.domain.periodic_v))
    throw NonCompact("the functional integrates over a doubly periodic surface");
  SimonsResult out;
  out.H = *imm.cmc_H;
  double H = out.H;
  out.integral = integrate(
      imm,
      gated_field([H](const SurfaceFrameData& d) {
        return simons_integrand(d.phi2, d.C, d.params, H);
      }),
      grid);
  out.nonnegative = out.integral.value >= -1e-7;
  return out;
}

}  // namespace ektau
