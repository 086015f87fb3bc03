#include "ektau/ambient.hpp"

namespace ektau {

Mat3T<double> metric_at(const ModelParams& mp, const AmbientPoint& p) {
  validate_params(mp, p.chart);
  require_in_domain(mp, p);
  return chart_metric<double>(p.chart, mp, p.q);
}

std::array<TangentVec, 3> canonical_frame(const ModelParams& mp, const AmbientPoint& p) {
  validate_params(mp, p.chart);
  require_in_domain(mp, p);
  auto f = chart_frame<double>(p.chart, mp, p.q);
  std::array<TangentVec, 3> out;
  for (int i = 0; i < 3; ++i) {
    out[i].base = p;
    out[i].coord = f[i];
    out[i].frame = Vec3T<double>{};
    out[i].frame[i] = 1.0;
  }
  return out;
}

Vec3T<double> to_frame_components(const ModelParams& mp, const AmbientPoint& p,
                                  const Vec3T<double>& coord) {
  auto g = chart_metric<double>(p.chart, mp, p.q);
  auto f = chart_frame<double>(p.chart, mp, p.q);
  Vec3T<double> r;
  for (int i = 0; i < 3; ++i) r[i] = quad_form(g, coord, f[i]);
  return r;
}

Vec3T<double> to_coord_components(const ModelParams& mp, const AmbientPoint& p,
                                  const Vec3T<double>& frame) {
  auto f = chart_frame<double>(p.chart, mp, p.q);
  Vec3T<double> r{};
  for (int i = 0; i < 3; ++i) r = vadd(r, vscale(frame[i], f[i]));
  return r;
}

double connection_form(const ModelParams& mp, int A, int B, const Vec3T<double>& x) {
  validate_params(mp, ChartId::DiskModel);
  const double t = mp.tau, k = mp.kappa;
  auto val = [&](int a, int b) -> double {
    if (a == 1 && b == 2) return (k / (2.0 * t) - t) * x[2];  // w^1_2
    if (a == 1 && b == 3) return -t * x[1];                   // w^1_3
    if (a == 2 && b == 3) return t * x[0];                    // w^2_3
    return 0.0;
  };
  if (A == B) return 0.0;
  if (A < B) return val(A, B);
  return -val(B, A);
}

AmbientField frame_field(ChartId chart, const ModelParams& mp, int i) {
  return [chart, mp, i](const Vec3T<Dual3<double>>& q) {
    return chart_frame<Dual3<double>>(chart, mp, q)[i];
  };
}

namespace {

struct FieldEval {
  Vec3T<double> value;
  Mat3T<double> jac;  // jac[c][a] = d_a X^c
};

FieldEval eval_field(const AmbientField& X, const Vec3T<double>& q) {
  using D = Dual3<double>;
  Vec3T<D> qd = {D::seeded(q[0], 0), D::seeded(q[1], 1), D::seeded(q[2], 2)};
  auto xv = X(qd);
  FieldEval r;
  for (int c = 0; c < 3; ++c) {
    r.value[c] = xv[c].v;
    for (int a = 0; a < 3; ++a) r.jac[c][a] = xv[c].d[a];
  }
  return r;
}

}  // namespace

Vec3T<double> lie_bracket(ChartId chart, const ModelParams& mp, const Vec3T<double>& q,
                          const AmbientField& X, const AmbientField& Y) {
  (void)chart;
  (void)mp;
  auto xe = eval_field(X, q);
  auto ye = eval_field(Y, q);
  Vec3T<double> r{};
  for (int c = 0; c < 3; ++c)
    for (int a = 0; a < 3; ++a)
      r[c] += xe.value[a] * ye.jac[c][a] - ye.value[a] * xe.jac[c][a];
  return r;
}

Vec3T<double> covariant_derivative(ChartId chart, const ModelParams& mp,
                                   const Vec3T<double>& q, const AmbientField& X,
                                   const AmbientField& Y) {
  auto xe = eval_field(X, q);
  auto ye = eval_field(Y, q);
  auto gam = christoffel<double>(chart, mp, q);
  Vec3T<double> r{};
  for (int c = 0; c < 3; ++c) {
    for (int a = 0; a < 3; ++a) r[c] += xe.value[a] * ye.jac[c][a];
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) r[c] += gam[c][a][b] * xe.value[a] * ye.value[b];
  }
  return r;
}

RiemannTensor riemann(ChartId chart, const ModelParams& mp, const Vec3T<double>& q) {
  using D = Dual3<double>;
  Vec3T<D> qd = {D::seeded(q[0], 0), D::seeded(q[1], 1), D::seeded(q[2], 2)};
  auto gamd = christoffel<D>(chart, mp, qd);
  double gam[3][3][3], dgam[3][3][3][3];  // dgam[e][c][a][b] = d_e Gamma^c_ab
  for (int c = 0; c < 3; ++c)
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        gam[c][a][b] = gamd[c][a][b].v;
        for (int e = 0; e < 3; ++e) dgam[e][c][a][b] = gamd[c][a][b].d[e];
      }
  RiemannTensor R{};
  for (int c = 0; c < 3; ++c)
    for (int d = 0; d < 3; ++d)
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
          double v = dgam[a][c][b][d] - dgam[b][c][a][d];
          for (int e = 0; e < 3; ++e)
            v += gam[c][a][e] * gam[e][b][d] - gam[c][b][e] * gam[e][a][d];
          R[c][d][a][b] = v;
        }
  return R;
}

double curvature_4(const ModelParams& mp, const AmbientPoint& p, const Vec3T<double>& X,
                   const Vec3T<double>& Y, const Vec3T<double>& Z, const Vec3T<double>& W) {
  auto R = riemann(p.chart, mp, p.q);
  auto g = chart_metric<double>(p.chart, mp, p.q);
  Vec3T<double> rz{};
  for (int c = 0; c < 3; ++c)
    for (int d = 0; d < 3; ++d)
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) rz[c] += R[c][d][a][b] * Z[d] * X[a] * Y[b];
  return quad_form(g, rz, W);
}

double sectional(const ModelParams& mp, const AmbientPoint& p, const Vec3T<double>& e1,
                 const Vec3T<double>& e2) {
  return curvature_4(mp, p, e1, e2, e2, e1);
}

std::array<double, 4> embedding4(const AmbientPoint& p) {
  if (p.chart != ChartId::BergerSphere)
    throw ChartDomainError("embedding4 is for the Berger chart");
  double s = p.q[0], t1 = p.q[1], t2 = p.q[2];
  return {std::cos(s) * std::cos(t1), std::cos(s) * std::sin(t1),
          std::sin(s) * std::cos(t2), std::sin(s) * std::sin(t2)};
}

std::array<double, 4> hopf_field4(const std::array<double, 4>& x) {
  return {-x[1], x[0], -x[3], x[2]};
}

double berger_metric4(const ModelParams& mp, const std::array<double, 4>& p,
                      const std::array<double, 4>& X, const std::array<double, 4>& Y) {
  const double k = mp.kappa, t = mp.tau;
  auto xi = hopf_field4(p);
  double xy = 0.0, xxi = 0.0, yxi = 0.0;
  for (int a = 0; a < 4; ++a) {
    xy += X[a] * Y[a];
    xxi += X[a] * xi[a];
    yxi += Y[a] * xi[a];
  }
  return 4.0 / k * (xy + (4.0 * t * t / k - 1.0) * xxi * yxi);
}

}  // namespace ektau
