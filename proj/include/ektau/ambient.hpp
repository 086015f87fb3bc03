#pragma once

// Coordinate models of E(kappa,tau), tau != 0: the Berger sphere in Hopf
// coordinates (s, theta1, theta2) and the disk-model fibration chart (x,y,z)
// over the base disk {1 + kappa(x^2+y^2)/4 > 0}. Both carry the canonical
// orthonormal frame {f1, f2, f3} with f3 the unit vertical Killing field,
// satisfying
//   [f1,f2] = -2 tau f3,   [f2,f3] = -kappa/(2 tau) f1,   [f3,f1] = -kappa/(2 tau) f2.
//
// Connection-form convention: w^A_B(X) = <D_X f_B, f_A>, so that
// w^1_3 = -tau w^2, w^2_3 = tau w^1 and w^1_2 = (kappa/(2 tau) - tau) w^3.

#include <array>
#include <cmath>
#include <functional>

#include "ektau/dual.hpp"
#include "ektau/errors.hpp"
#include "ektau/jet.hpp"
#include "ektau/linalg.hpp"

namespace ektau {

struct ModelParams {
  double kappa = 0.0;
  double tau = 1.0;
};

enum class ChartId { BergerSphere, DiskModel };

struct AmbientPoint {
  ChartId chart = ChartId::DiskModel;
  Vec3T<double> q{};  // chart coordinates: (s,theta1,theta2) or (x,y,z)
};

inline void validate_params(const ModelParams& mp, ChartId chart) {
  if (mp.tau == 0.0) throw ZeroTau("tau must be nonzero");
  if (chart == ChartId::BergerSphere && mp.kappa <= 0.0)
    throw ChartDomainError("Berger chart requires kappa > 0");
}

inline bool in_chart_domain(const ModelParams& mp, const AmbientPoint& p) {
  if (p.chart == ChartId::BergerSphere) {
    constexpr double eps = 1e-9;
    return p.q[0] > eps && p.q[0] < M_PI / 2 - eps;
  }
  return 1.0 + mp.kappa * (p.q[0] * p.q[0] + p.q[1] * p.q[1]) / 4.0 > 1e-9;
}

inline void require_in_domain(const ModelParams& mp, const AmbientPoint& p) {
  if (!in_chart_domain(mp, p)) throw ChartDomainError("point outside chart domain");
}

// ---------------------------------------------------------------------------
// Chart metric and canonical frame, templated over the scalar type.

template <class S>
Mat3T<S> chart_metric(ChartId chart, const ModelParams& mp, const Vec3T<S>& q) {
  using std::cos;
  using std::sin;
  Mat3T<S> g{};
  if (chart == ChartId::BergerSphere) {
    const double k = mp.kappa, t = mp.tau;
    const double mu = 4.0 * t * t / k - 1.0;
    S c = cos(q[0]), s = sin(q[0]);
    S c2 = c * c, s2 = s * s;
    Vec3T<S> v = {S(0.0), c2, s2};
    g[0][0] = S(1.0);
    g[1][1] = c2;
    g[2][2] = s2;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) g[a][b] = (g[a][b] + mu * v[a] * v[b]) * (4.0 / k);
    return g;
  }
  const double k = mp.kappa, t = mp.tau;
  S li = 1.0 + (q[0] * q[0] + q[1] * q[1]) * (k / 4.0);  // 1/lambda
  S lam = S(1.0) / li;
  // w3 = tau*lam*(x dy - y dx) + dz
  Vec3T<S> w3 = {S(0.0) - t * lam * q[1], t * lam * q[0], S(1.0)};
  S l2 = lam * lam;
  g[0][0] = l2 + w3[0] * w3[0];
  g[0][1] = w3[0] * w3[1];
  g[0][2] = w3[0] * w3[2];
  g[1][0] = g[0][1];
  g[1][1] = l2 + w3[1] * w3[1];
  g[1][2] = w3[1] * w3[2];
  g[2][0] = g[0][2];
  g[2][1] = g[1][2];
  g[2][2] = S(1.0);
  return g;
}

// Columns are the coordinate components of f1, f2, f3.
template <class S>
std::array<Vec3T<S>, 3> chart_frame(ChartId chart, const ModelParams& mp,
                                    const Vec3T<S>& q) {
  using std::cos;
  using std::sin;
  if (chart == ChartId::BergerSphere) {
    const double k = mp.kappa, t = mp.tau;
    const double sq = std::sqrt(k) / 2.0;
    S phi = q[1] + q[2];
    S cs = cos(q[0]), ss = sin(q[0]);
    S tn = ss / cs, ct = cs / ss;
    S cp = cos(phi), sp = sin(phi);
    Vec3T<S> f1 = {sq * cp, sq * (tn * sp), S(0.0) - sq * (ct * sp)};
    Vec3T<S> f2 = {sq * sp, S(0.0) - sq * (tn * cp), sq * (ct * cp)};
    Vec3T<S> f3 = {S(0.0), S(k / (4.0 * t)), S(k / (4.0 * t))};
    return {f1, f2, f3};
  }
  const double k = mp.kappa, t = mp.tau;
  S li = 1.0 + (q[0] * q[0] + q[1] * q[1]) * (k / 4.0);
  S psi = q[2] * (-k / (2.0 * t));
  S cp = cos(psi), sp = sin(psi);
  // coordinate lift, then the vertical-angle rotation that makes the
  // structure constants position-independent
  Vec3T<S> F1 = {li, S(0.0), t * q[1]};
  Vec3T<S> F2 = {S(0.0), li, S(0.0) - t * q[0]};
  Vec3T<S> f1 = vadd(vscale(cp, F1), vscale(sp, F2));
  Vec3T<S> f2 = vadd(vscale(S(0.0) - sp, F1), vscale(cp, F2));
  Vec3T<S> f3 = {S(0.0), S(0.0), S(1.0)};
  return {f1, f2, f3};
}

// Christoffel symbols Gamma[c][a][b] of the chart metric at q, computed from
// one forward-mode sweep over the coordinate directions.
template <class S>
std::array<Mat3T<S>, 3> christoffel(ChartId chart, const ModelParams& mp,
                                    const Vec3T<S>& q) {
  using D = Dual3<S>;
  Vec3T<D> qd = {D::seeded(q[0], 0), D::seeded(q[1], 1), D::seeded(q[2], 2)};
  Mat3T<D> gd = chart_metric<D>(chart, mp, qd);
  Mat3T<S> g;
  S dg[3][3][3];  // dg[d][a][b] = d_d g_ab
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      g[a][b] = gd[a][b].v;
      for (int d = 0; d < 3; ++d) dg[d][a][b] = gd[a][b].d[d];
    }
  Mat3T<S> gi = inv3(g);
  std::array<Mat3T<S>, 3> gam{};
  for (int c = 0; c < 3; ++c)
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        S sum{};
        for (int d = 0; d < 3; ++d)
          sum += gi[c][d] * (dg[a][b][d] + dg[b][a][d] - dg[d][a][b]);
        gam[c][a][b] = sum * 0.5;
      }
  return gam;
}

// ---------------------------------------------------------------------------
// Point-level operations (doubles).

Mat3T<double> metric_at(const ModelParams& mp, const AmbientPoint& p);

struct TangentVec {
  AmbientPoint base;
  Vec3T<double> frame;  // components in the canonical frame
  Vec3T<double> coord;  // components in the chart coordinate basis
};

std::array<TangentVec, 3> canonical_frame(const ModelParams& mp, const AmbientPoint& p);

Vec3T<double> to_frame_components(const ModelParams& mp, const AmbientPoint& p,
                                  const Vec3T<double>& coord);
Vec3T<double> to_coord_components(const ModelParams& mp, const AmbientPoint& p,
                                  const Vec3T<double>& frame);

// Closed-form connection forms of the canonical frame: w^A_B(X) for
// 1 <= A,B <= 3, X given by its frame components.
double connection_form(const ModelParams& mp, int A, int B, const Vec3T<double>& x_frame);

// Ambient vector fields as coordinate-component functions, differentiable in
// the chart coordinates.
using AmbientField =
    std::function<Vec3T<Dual3<double>>(const Vec3T<Dual3<double>>&)>;

AmbientField frame_field(ChartId chart, const ModelParams& mp, int i);

Vec3T<double> lie_bracket(ChartId chart, const ModelParams& mp, const Vec3T<double>& q,
                          const AmbientField& X, const AmbientField& Y);

// nabla_X Y at q (coordinate components).
Vec3T<double> covariant_derivative(ChartId chart, const ModelParams& mp,
                                   const Vec3T<double>& q, const AmbientField& X,
                                   const AmbientField& Y);

// Full curvature tensor R^c_{dab} with R(X,Y)Z = nabla_X nabla_Y Z - ... ;
// riemann[c][d][a][b].
using RiemannTensor = std::array<std::array<Mat3T<double>, 3>, 3>;
RiemannTensor riemann(ChartId chart, const ModelParams& mp, const Vec3T<double>& q);

// <R(X,Y)Z, W> at q, all vectors in coordinate components.
double curvature_4(const ModelParams& mp, const AmbientPoint& p, const Vec3T<double>& X,
                   const Vec3T<double>& Y, const Vec3T<double>& Z, const Vec3T<double>& W);

// Sectional curvature of the plane spanned by an orthonormal pair.
double sectional(const ModelParams& mp, const AmbientPoint& p, const Vec3T<double>& e1,
                 const Vec3T<double>& e2);

// ---------------------------------------------------------------------------
// Berger sphere, 4-coordinate unit-sphere embedding.

std::array<double, 4> embedding4(const AmbientPoint& p);
std::array<double, 4> hopf_field4(const std::array<double, 4>& x);
double berger_metric4(const ModelParams& mp, const std::array<double, 4>& p,
                      const std::array<double, 4>& X, const std::array<double, 4>& Y);

}  // namespace ektau
