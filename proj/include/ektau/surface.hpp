#pragma once

// Parametric immersed surfaces in E(kappa,tau): tangent frame and unit normal,
// the adapted frame of the contact-angle construction, second fundamental
// form through the ambient connection, frame derivatives of beta, and the
// T = f3 - <f3,N>N projection data. Everything is computed from order-3 jets
// of the immersion; quantities are valid to the jet order that survives the
// differentiations involved.

#include <functional>
#include <optional>
#include <string>

#include "ektau/ambient.hpp"
#include "ektau/jet.hpp"

namespace ektau {

// Gate for W^c: the adapted frame requires |cos(beta)| >= this.
inline constexpr double kCosBetaGate = 1e-6;

struct Domain {
  double u0 = 0.0, u1 = 1.0;
  double v0 = 0.0, v1 = 1.0;
  bool periodic_u = false;
  bool periodic_v = false;
};

struct ParametricImmersion {
  ModelParams params;
  ChartId chart = ChartId::DiskModel;
  // chart coordinates of the immersion, jet-evaluable
  std::function<Vec3T<Jet3>(const Jet3&, const Jet3&)> map;
  Domain domain;
  std::optional<double> cmc_H;  // set iff the surface is cmc-tagged
  std::string name;

  Vec3T<Jet3> eval(double u, double v) const {
    return map(Jet3::variable(u, 0), Jet3::variable(v, 1));
  }
  AmbientPoint point(double u, double v) const {
    auto q = eval(u, v);
    return AmbientPoint{chart, {q[0].value(), q[1].value(), q[2].value()}};
  }
};

struct TangentNormal {
  TangentVec du, dv, normal;
};

// First-derivative data only; defined on all of M, including W^c.
TangentNormal tangent_normal(const ParametricImmersion& imm, double u, double v);

struct SurfaceFrameData {
  double u = 0.0, v = 0.0;
  ModelParams params;
  AmbientPoint p;

  // adapted frame, canonical-frame components
  Vec3T<double> e1, e2, normal;
  // rotated horizontal frame (f1_rot = e1, f2_rot spans the rest of the
  // horizontal plane)
  Vec3T<double> f2_rot;

  double C = 0.0;      // <xi, N> = sin(beta)
  double beta = 0.0;   // in (-pi/2, pi/2)
  double cos_b = 1.0;

  double beta1 = 0.0, beta2 = 0.0;
  // iterated frame derivatives beta_ij = e_j(e_i(beta))
  double beta11 = 0.0, beta12 = 0.0, beta21 = 0.0, beta22 = 0.0;
  // covariant Hessian of beta, betaH[i][j] = e_j(e_i beta) - (nabla_{e_j}e_i)beta
  double betaH[2][2] = {};

  double w12_e1 = 0.0, w12_e2 = 0.0;
  double e2_w12_e1 = 0.0;  // e_2(w^1_2(e_1))

  double h11 = 0.0, h12 = 0.0, h21 = 0.0, h22 = 0.0;
  double H = 0.0;
  double A2 = 0.0;       // |A|^2
  double phi2 = 0.0;     // |Phi|^2 = |A|^2 - 2H^2

  // surface connection <nabla_{e_k} e_i, e_l>, indices [k][i][l]
  double conn[2][2][2] = {};

  // covariant derivative of the second fundamental form, h_{ij|k} at [i][j][k],
  // from the direct route dh_ij - h_kj theta^k_i - h_ik theta^k_j
  double hcov[2][2][2] = {};

  // T-field block
  double Tnorm2 = 0.0;           // |T|^2 (= cos^2 beta)
  double tt_lhs = 0.0;           // (1/2) Lap|T|^2 - div(nabla_T T)
  double tt_rhs = 0.0;           // 2 tau (beta1 cos^2 b + 2 tau sin^2 b)
  double nablaTT_formula_res = 0.0;  // | nabla_T T - (-(1/2) sin 2b (grad b + 2 tau e1)) |

  // Gauss block
  double K_intrinsic = 0.0;  // Brioschi, from first-fundamental-form jets
  double K_ambient = 0.0;    // ambient sectional curvature of the tangent plane
  double det_h = 0.0;        // h11 h22 - h12 h21
};

// Full adapted-frame computation. Throws DegenerateParametrization if the
// first fundamental form degenerates and AdaptedFrameUndefined on W^c
// (|cos beta| < kCosBetaGate).
SurfaceFrameData frame_data(const ParametricImmersion& imm, double u, double v);

// True if (u,v) is a W-point (adapted frame defined); never throws for
// non-degenerate immersions.
bool in_W(const ParametricImmersion& imm, double u, double v);

// Scans an n_u x n_v grid: mean/spread of H, max |C|, count of gated points.
struct GridScan {
  double H_mean = 0.0;
  double H_spread = 0.0;
  double C_max = 0.0;
  int points = 0;
  int gated = 0;
};
GridScan scan_grid(const ParametricImmersion& imm, int n_u, int n_v);

// Grid coordinates honoring periodicity (periodic axes: n equispaced nodes
// without the duplicate endpoint; otherwise n+1 nodes including endpoints).
std::vector<double> grid_axis(double a, double b, int n, bool periodic);

}  // namespace ektau
