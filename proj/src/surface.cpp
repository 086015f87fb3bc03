#include "ektau/surface.hpp"

#include <cmath>

#include "ektau/errors.hpp"

namespace ektau {

namespace {

struct JetChart {
  Vec3T<Jet3> q;
  Mat3T<Jet3> g;
  std::array<Vec3T<Jet3>, 3> frame;
  std::array<Mat3T<Jet3>, 3> gam;
};

JetChart jet_chart(const ParametricImmersion& imm, double u, double v) {
  JetChart jc;
  jc.q = imm.eval(u, v);
  jc.g = chart_metric<Jet3>(imm.chart, imm.params, jc.q);
  jc.frame = chart_frame<Jet3>(imm.chart, imm.params, jc.q);
  jc.gam = christoffel<Jet3>(imm.chart, imm.params, jc.q);
  return jc;
}

Jet3 ip(const Mat3T<Jet3>& g, const Vec3T<Jet3>& x, const Vec3T<Jet3>& y) {
  return quad_form(g, x, y);
}

// directional derivative along a e_u + b e_v of a scalar jet field
Jet3 ddir(const Jet3& a, const Jet3& b, const Jet3& f) {
  return a * f.du() + b * f.dv();
}

Vec3T<double> values(const Vec3T<Jet3>& x) {
  return {x[0].value(), x[1].value(), x[2].value()};
}

}  // namespace

std::vector<double> grid_axis(double a, double b, int n, bool periodic) {
  std::vector<double> xs;
  if (periodic) {
    xs.reserve(n);
    for (int i = 0; i < n; ++i) xs.push_back(a + (b - a) * i / n);
  } else {
    xs.reserve(n + 1);
    for (int i = 0; i <= n; ++i) xs.push_back(a + (b - a) * i / n);
  }
  return xs;
}

TangentNormal tangent_normal(const ParametricImmersion& imm, double u, double v) {
  validate_params(imm.params, imm.chart);
  JetChart jc = jet_chart(imm, u, v);
  AmbientPoint p{imm.chart, values(jc.q)};
  require_in_domain(imm.params, p);

  Vec3T<Jet3> Xu, Xv;
  for (int c = 0; c < 3; ++c) {
    Xu[c] = jc.q[c].du();
    Xv[c] = jc.q[c].dv();
  }
  Jet3 E = ip(jc.g, Xu, Xu), F = ip(jc.g, Xu, Xv), G = ip(jc.g, Xv, Xv);
  double detI = E.value() * G.value() - F.value() * F.value();
  if (detI < 1e-12 * (1.0 + E.value() + G.value()))
    throw DegenerateParametrization("first fundamental form degenerates");

  Vec3T<Jet3> Xu_f, Xv_f;
  for (int i = 0; i < 3; ++i) {
    Xu_f[i] = ip(jc.g, Xu, jc.frame[i]);
    Xv_f[i] = ip(jc.g, Xv, jc.frame[i]);
  }
  Vec3T<Jet3> n_f = vcross(Xu_f, Xv_f);
  Jet3 nn = sqrt(vdot(n_f, n_f));
  Vec3T<Jet3> N_f = vscale(recip(nn), n_f);
  Vec3T<Jet3> N_c{};
  for (int i = 0; i < 3; ++i) N_c = vadd(N_c, vscale(N_f[i], jc.frame[i]));

  TangentNormal tn;
  tn.du = TangentVec{p, values(Xu_f), values(Xu)};
  tn.dv = TangentVec{p, values(Xv_f), values(Xv)};
  tn.normal = TangentVec{p, values(N_f), values(N_c)};
  return tn;
}

bool in_W(const ParametricImmersion& imm, double u, double v) {
  TangentNormal tn = tangent_normal(imm, u, v);
  double C = tn.normal.frame[2];
  return 1.0 - C * C >= kCosBetaGate * kCosBetaGate;
}

SurfaceFrameData frame_data(const ParametricImmersion& imm, double u, double v) {
  validate_params(imm.params, imm.chart);
  JetChart jc = jet_chart(imm, u, v);
  AmbientPoint p{imm.chart, values(jc.q)};
  require_in_domain(imm.params, p);
  const double tau = imm.params.tau;

  Vec3T<Jet3> Xu, Xv;
  for (int c = 0; c < 3; ++c) {
    Xu[c] = jc.q[c].du();
    Xv[c] = jc.q[c].dv();
  }
  Jet3 E = ip(jc.g, Xu, Xu), F = ip(jc.g, Xu, Xv), G = ip(jc.g, Xv, Xv);
  if (E.value() * G.value() - F.value() * F.value() <
      1e-12 * (1.0 + E.value() + G.value()))
    throw DegenerateParametrization("first fundamental form degenerates");

  // unit normal via the frame-component cross product
  Vec3T<Jet3> Xu_f, Xv_f;
  for (int i = 0; i < 3; ++i) {
    Xu_f[i] = ip(jc.g, Xu, jc.frame[i]);
    Xv_f[i] = ip(jc.g, Xv, jc.frame[i]);
  }
  Vec3T<Jet3> n_f = vcross(Xu_f, Xv_f);
  Vec3T<Jet3> N_f = vscale(recip(sqrt(vdot(n_f, n_f))), n_f);

  Jet3 C = N_f[2];
  double cb2 = 1.0 - C.value() * C.value();
  if (cb2 < kCosBetaGate * kCosBetaGate)
    throw AdaptedFrameUndefined("normal is vertical: adapted frame undefined");
  Jet3 cos_b = sqrt(1.0 - C * C);
  Jet3 beta = asin(C);

  // adapted frame: e1 horizontal, e2 the normalized projection of f3
  Jet3 icb = recip(cos_b);
  Vec3T<Jet3> f2r_f = {-(N_f[0] * icb), -(N_f[1] * icb), Jet3::constant(0.0)};
  Vec3T<Jet3> e1_f = {f2r_f[1], -f2r_f[0], Jet3::constant(0.0)};
  Vec3T<Jet3> e2_f = {-(C * N_f[0] * icb), -(C * N_f[1] * icb), cos_b};

  auto to_coords = [&](const Vec3T<Jet3>& w_f) {
    Vec3T<Jet3> r{};
    for (int i = 0; i < 3; ++i) r = vadd(r, vscale(w_f[i], jc.frame[i]));
    return r;
  };
  Vec3T<Jet3> e1_c = to_coords(e1_f), e2_c = to_coords(e2_f);
  Vec3T<Jet3> N_c = to_coords(N_f), f2r_c = to_coords(f2r_f);

  // decompose a tangent field in (X_u, X_v) to differentiate along it
  auto decomp = [&](const Vec3T<Jet3>& w_c) {
    return solve_sym2(E, F, G, ip(jc.g, w_c, Xu), ip(jc.g, w_c, Xv));
  };
  auto d1 = decomp(e1_c), d2 = decomp(e2_c);

  // ambient covariant derivative along a e_u + b e_v of a coordinate field
  auto ambD = [&](const std::array<Jet3, 2>& ab, const Vec3T<Jet3>& Y) {
    Vec3T<Jet3> Xc = vadd(vscale(ab[0], Xu), vscale(ab[1], Xv));
    Vec3T<Jet3> r;
    for (int c = 0; c < 3; ++c) {
      r[c] = ab[0] * Y[c].du() + ab[1] * Y[c].dv();
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) r[c] += jc.gam[c][a][b] * Xc[a] * Y[b];
    }
    return r;
  };

  SurfaceFrameData out;
  out.u = u;
  out.v = v;
  out.params = imm.params;
  out.p = p;
  out.e1 = values(e1_f);
  out.e2 = values(e2_f);
  out.normal = values(N_f);
  out.f2_rot = values(f2r_f);
  out.C = C.value();
  out.beta = beta.value();
  out.cos_b = cos_b.value();

  Jet3 beta1 = ddir(d1[0], d1[1], beta);
  Jet3 beta2 = ddir(d2[0], d2[1], beta);
  out.beta1 = beta1.value();
  out.beta2 = beta2.value();

  // second fundamental form and surface connection
  Vec3T<Jet3> De1e1 = ambD(d1, e1_c), De1e2 = ambD(d1, e2_c);
  Vec3T<Jet3> De2e1 = ambD(d2, e1_c), De2e2 = ambD(d2, e2_c);
  Jet3 h11 = ip(jc.g, De1e1, N_c), h12 = ip(jc.g, De1e2, N_c);
  Jet3 h21 = ip(jc.g, De2e1, N_c), h22 = ip(jc.g, De2e2, N_c);
  out.h11 = h11.value();
  out.h12 = h12.value();
  out.h21 = h21.value();
  out.h22 = h22.value();
  out.H = 0.5 * (out.h11 + out.h22);
  out.A2 = out.h11 * out.h11 + out.h12 * out.h12 + out.h21 * out.h21 +
           out.h22 * out.h22;
  out.phi2 = out.A2 - 2.0 * out.H * out.H;

  const Vec3T<Jet3>* De[2][2] = {{&De1e1, &De1e2}, {&De2e1, &De2e2}};
  const Vec3T<Jet3>* ee[2] = {&e1_c, &e2_c};
  for (int k = 0; k < 2; ++k)
    for (int i = 0; i < 2; ++i)
      for (int l = 0; l < 2; ++l)
        out.conn[k][i][l] = ip(jc.g, *De[k][i], *ee[l]).value();

  // iterated frame derivatives (the convention of the source identities) and
  // the covariant Hessian
  out.beta11 = ddir(d1[0], d1[1], beta1).value();
  out.beta12 = ddir(d2[0], d2[1], beta1).value();
  out.beta21 = ddir(d1[0], d1[1], beta2).value();
  out.beta22 = ddir(d2[0], d2[1], beta2).value();
  {
    double raw[2][2] = {{out.beta11, out.beta12}, {out.beta21, out.beta22}};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        out.betaH[i][j] = raw[i][j] - out.beta1 * out.conn[j][i][0] -
                          out.beta2 * out.conn[j][i][1];
  }

  // rotated-frame connection form w^1_2(X) = <D_X f2_rot, e1>
  Jet3 w12e1 = ip(jc.g, ambD(d1, f2r_c), e1_c);
  Jet3 w12e2 = ip(jc.g, ambD(d2, f2r_c), e1_c);
  out.w12_e1 = w12e1.value();
  out.w12_e2 = w12e2.value();
  out.e2_w12_e1 = ddir(d2[0], d2[1], w12e1).value();

  // h_{ij|k} directly from the covariant-derivative definition
  const Jet3* hj[2][2] = {{&h11, &h12}, {&h21, &h22}};
  const std::array<Jet3, 2>* dd[2] = {&d1, &d2};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        double s = ddir((*dd[k])[0], (*dd[k])[1], *hj[i][j]).value();
        for (int l = 0; l < 2; ++l) {
          s -= hj[l][j]->value() * out.conn[k][i][l];
          s -= hj[i][l]->value() * out.conn[k][j][l];
        }
        out.hcov[i][j][k] = s;
      }

  // T = f3 - C N, the tangential projection of the vertical field
  Vec3T<Jet3> T_c = vsub(jc.frame[2], vscale(C, N_c));
  auto dT = decomp(T_c);
  Jet3 Tn2 = cos_b * cos_b;
  out.Tnorm2 = Tn2.value();

  // (1/2) Lap |T|^2 - div(nabla_T T), with the rough Laplacian on the surface
  Jet3 e1Tn2 = ddir(d1[0], d1[1], Tn2);
  Jet3 e2Tn2 = ddir(d2[0], d2[1], Tn2);
  double lap = ddir(d1[0], d1[1], e1Tn2).value() +
               ddir(d2[0], d2[1], e2Tn2).value();
  // subtract (nabla_{e_i} e_i)(|T|^2), tangential parts only
  lap -= out.conn[0][0][0] * e1Tn2.value() + out.conn[0][0][1] * e2Tn2.value();
  lap -= out.conn[1][1][0] * e1Tn2.value() + out.conn[1][1][1] * e2Tn2.value();

  // nabla_T T: tangential part of the ambient derivative, kept as a jet field
  Vec3T<Jet3> W = ambD(dT, T_c);
  Jet3 w_1 = ip(jc.g, W, e1_c), w_2 = ip(jc.g, W, e2_c);
  Vec3T<Jet3> V = vadd(vscale(w_1, e1_c), vscale(w_2, e2_c));
  double divV = ip(jc.g, ambD(d1, V), e1_c).value() +
                ip(jc.g, ambD(d2, V), e2_c).value();
  out.tt_lhs = 0.5 * lap - divV;
  double sb = C.value(), cbv = cos_b.value();
  out.tt_rhs = 2.0 * tau * (out.beta1 * cbv * cbv + 2.0 * tau * sb * sb);

  // residual of nabla_T T = -(1/2) sin(2 beta) (grad beta + 2 tau e1)
  {
    double s2b = 2.0 * sb * cbv;
    double c1 = -0.5 * s2b * (out.beta1 + 2.0 * tau);
    double c2 = -0.5 * s2b * out.beta2;
    double r1 = w_1.value() - c1, r2 = w_2.value() - c2;
    out.nablaTT_formula_res = std::sqrt(r1 * r1 + r2 * r2);
  }

  // Gauss curvature, intrinsically (Brioschi) and through the ambient geometry
  {
    double Ev = E.d_v(), Eu = E.d_u(), Gu = G.d_u(), Gv = G.d_v();
    double Fu = F.d_u(), Fv = F.d_v();
    double Evv = E.d_vv(), Guu = G.d_uu(), Fuv = F.d_uv();
    Mat3T<double> M1 = {{{-0.5 * Evv + Fuv - 0.5 * Guu, 0.5 * Eu, Fu - 0.5 * Ev},
                         {Fv - 0.5 * Gu, E.value(), F.value()},
                         {0.5 * Gv, F.value(), G.value()}}};
    Mat3T<double> M2 = {{{0.0, 0.5 * Ev, 0.5 * Gu},
                         {0.5 * Ev, E.value(), F.value()},
                         {0.5 * Gu, F.value(), G.value()}}};
    double detI = E.value() * G.value() - F.value() * F.value();
    out.K_intrinsic = (det3(M1) - det3(M2)) / (detI * detI);
  }
  out.K_ambient = sectional(imm.params, p, values(e1_c), values(e2_c));
  out.det_h = out.h11 * out.h22 - out.h12 * out.h21;

  return out;
}

GridScan scan_grid(const ParametricImmersion& imm, int n_u, int n_v) {
  GridScan gs;
  auto us = grid_axis(imm.domain.u0, imm.domain.u1, n_u, imm.domain.periodic_u);
  auto vs = grid_axis(imm.domain.v0, imm.domain.v1, n_v, imm.domain.periodic_v);
  double hmin = 0.0, hmax = 0.0, hsum = 0.0;
  bool first = true;
  for (double uu : us)
    for (double vv : vs) {
      if (!in_W(imm, uu, vv)) {
        ++gs.gated;
        continue;
      }
      SurfaceFrameData fd = frame_data(imm, uu, vv);
      if (first) {
        hmin = hmax = fd.H;
        first = false;
      } else {
        hmin = std::min(hmin, fd.H);
        hmax = std::max(hmax, fd.H);
      }
      hsum += fd.H;
      gs.C_max = std::max(gs.C_max, std::abs(fd.C));
      ++gs.points;
    }
  if (gs.points > 0) {
    gs.H_mean = hsum / gs.points;
    gs.H_spread = hmax - hmin;
  }
  return gs;
}

}  // namespace ektau
