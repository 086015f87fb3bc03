#include <cmath>
#include <vector>

#include "doctest.h"
#include "ektau/errors.hpp"
#include "ektau/hopf.hpp"
#include "ektau/surface.hpp"

using namespace ektau;

namespace {

// mixed corpus exercising the general (non-cmc) identities
std::vector<ParametricImmersion> general_corpus() {
  std::vector<ParametricImmersion> out;
  out.push_back(perturbed_torus({{4.0, 1.0}, 0.8, 0.07, 2, 3}));
  out.push_back(perturbed_torus({{2.5, 0.6}, 0.5, 0.05, 1, 2}));
  out.push_back(graph_patch({{0.0, 0.7}, 0.4, -0.3, 0.25, 1.3, 0.9, 0.1, -0.2, 0.3}));
  out.push_back(graph_patch({{-1.0, 0.5}, 1.1, 0.6, 0.2, 1.0, 1.7, 0.0, 0.1, 0.25}));
  return out;
}

std::vector<std::pair<double, double>> sample_points(const ParametricImmersion& imm,
                                                     int n = 4) {
  std::vector<std::pair<double, double>> pts;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double u = imm.domain.u0 + (imm.domain.u1 - imm.domain.u0) * (i + 0.37) / n;
      double v = imm.domain.v0 + (imm.domain.v1 - imm.domain.v0) * (j + 0.61) / n;
      pts.emplace_back(u, v);
    }
  return pts;
}

}  // namespace

TEST_CASE("tangent_normal: vertical field tangent to Hopf tori") {
  auto imm = hopf_torus({{4.0, 1.0}, M_PI / 4});
  for (auto [u, v] : sample_points(imm)) {
    auto tn = tangent_normal(imm, u, v);
    CHECK(std::abs(tn.normal.frame[2]) < 1e-12);       // <N, xi> = 0
    CHECK(vdot(tn.normal.frame, tn.normal.frame) ==
          doctest::Approx(1.0).epsilon(1e-12));        // unit normal
    // N orthogonal to both partials
    CHECK(vdot(tn.normal.frame, tn.du.frame) ==
          doctest::Approx(0.0).epsilon(1e-10).scale(1.0));
    CHECK(vdot(tn.normal.frame, tn.dv.frame) ==
          doctest::Approx(0.0).epsilon(1e-10).scale(1.0));
  }
}

TEST_CASE("horizontal graph at the disk origin has vertical normal") {
  ParametricImmersion imm;
  imm.params = {0.0, 0.7};
  imm.chart = ChartId::DiskModel;
  imm.map = [](const Jet3& u, const Jet3& v) -> Vec3T<Jet3> {
    return {u, v, Jet3::constant(0.0)};
  };
  imm.domain = {-0.2, 0.2, -0.2, 0.2, false, false};
  auto tn = tangent_normal(imm, 0.0, 0.0);
  CHECK(std::abs(std::abs(tn.normal.frame[2]) - 1.0) < 1e-12);  // C = +-1
  CHECK_THROWS_AS((void)frame_data(imm, 0.0, 0.0), AdaptedFrameUndefined);
  CHECK(!in_W(imm, 0.0, 0.0));
}

TEST_CASE("degenerate parametrization is rejected") {
  ParametricImmersion imm;
  imm.params = {0.0, 1.0};
  imm.chart = ChartId::DiskModel;
  imm.map = [](const Jet3& u, const Jet3& v) -> Vec3T<Jet3> {
    return {u + v, u + v, Jet3::constant(0.1)};  // rank-1 map
  };
  imm.domain = {-0.2, 0.2, -0.2, 0.2, false, false};
  CHECK_THROWS_AS((void)tangent_normal(imm, 0.05, 0.03), DegenerateParametrization);
}

TEST_CASE("Hopf tori: flat contact angle and the (2H, -tau, 0) shape operator") {
  for (auto spec : {HopfTorusSpec{{4.0, 1.0}, 0.6}, HopfTorusSpec{{4.0, 0.5}, 1.1},
                    HopfTorusSpec{{2.5, 1.3}, 0.9}}) {
    auto imm = hopf_torus(spec);
    double tau = spec.params.tau;
    for (auto [u, v] : sample_points(imm, 3)) {
      auto fd = frame_data(imm, u, v);
      CHECK(std::abs(fd.C) < 1e-12);
      CHECK(std::abs(fd.beta) < 1e-12);
      CHECK(std::abs(fd.beta1) < 1e-9);
      CHECK(std::abs(fd.beta2) < 1e-9);
      // e2 is the vertical direction
      CHECK(fd.e2[0] == doctest::Approx(0.0).epsilon(1e-10).scale(1.0));
      CHECK(fd.e2[1] == doctest::Approx(0.0).epsilon(1e-10).scale(1.0));
      CHECK(fd.e2[2] == doctest::Approx(1.0).epsilon(1e-12));
      // shape operator in the adapted frame
      CHECK(fd.h11 == doctest::Approx(2.0 * fd.H).epsilon(1e-9).scale(1.0));
      CHECK(fd.h12 == doctest::Approx(-tau).epsilon(1e-9));
      CHECK(fd.h22 == doctest::Approx(0.0).epsilon(1e-9).scale(1.0));
      CHECK(fd.A2 == doctest::Approx(2.0 * (2.0 * fd.H * fd.H + tau * tau))
                         .epsilon(1e-9));
    }
  }
}

TEST_CASE("Hopf torus H equals half the base-circle geodesic curvature") {
  for (auto spec : {HopfTorusSpec{{4.0, 1.0}, 0.5}, HopfTorusSpec{{4.0, 1.0}, 1.0},
                    HopfTorusSpec{{9.0, 0.7}, 0.75}}) {
    auto imm = hopf_torus(spec);
    double Hm = frame_data(imm, 1.0, 2.0).H;
    CHECK(std::abs(Hm) ==
          doctest::Approx(std::abs(hopf_torus_H(spec.params, spec.s))).epsilon(1e-9));
  }
}

TEST_CASE("Clifford torus is minimal with |A|^2 = 2") {
  auto imm = hopf_torus({{4.0, 1.0}, M_PI / 4});
  for (auto [u, v] : sample_points(imm, 3)) {
    auto fd = frame_data(imm, u, v);
    CHECK(std::abs(fd.H) < 1e-10);
    CHECK(fd.A2 == doctest::Approx(2.0).epsilon(1e-10));
  }
}

TEST_CASE("shape-operator relations on general surfaces") {
  for (const auto& imm : general_corpus()) {
    double tau = imm.params.tau;
    for (auto [u, v] : sample_points(imm)) {
      if (!in_W(imm, u, v)) continue;
      auto fd = frame_data(imm, u, v);
      CHECK(fd.h12 == doctest::Approx(fd.h21).epsilon(1e-9).scale(1.0));
      CHECK(fd.h11 - 2.0 * fd.H - fd.beta2 ==
            doctest::Approx(0.0).epsilon(1e-7).scale(1.0));
      CHECK(fd.h12 + tau + fd.beta1 ==
            doctest::Approx(0.0).epsilon(1e-7).scale(1.0));
      CHECK(fd.h22 + fd.beta2 == doctest::Approx(0.0).epsilon(1e-7).scale(1.0));
      CHECK(fd.phi2 >= -1e-12);
    }
  }
}

TEST_CASE("surface connection matches the tan(beta) closed forms") {
  for (const auto& imm : general_corpus()) {
    double tau = imm.params.tau;
    for (auto [u, v] : sample_points(imm)) {
      if (!in_W(imm, u, v)) continue;
      auto fd = frame_data(imm, u, v);
      double tb = std::tan(fd.beta);
      // <nabla_{e1}e1, e2> = -(2H+beta2) tan(beta), and its cyclic partners
      CHECK(fd.conn[0][0][1] == doctest::Approx(-(2 * fd.H + fd.beta2) * tb)
                                    .epsilon(1e-7).scale(1.0));
      CHECK(fd.conn[1][1][0] == doctest::Approx(-(2 * tau + fd.beta1) * tb)
                                    .epsilon(1e-7).scale(1.0));
      CHECK(fd.conn[1][0][1] == doctest::Approx((2 * tau + fd.beta1) * tb)
                                    .epsilon(1e-7).scale(1.0));
      CHECK(fd.conn[0][1][0] == doctest::Approx((2 * fd.H + fd.beta2) * tb)
                                    .epsilon(1e-7).scale(1.0));
      // unit-length frame: diagonal coefficients vanish
      CHECK(std::abs(fd.conn[0][0][0]) < 1e-9);
      CHECK(std::abs(fd.conn[1][1][1]) < 1e-9);
      // rotated-frame connection form relation cos(b) w12(e1) = 2H + beta2
      CHECK(fd.cos_b * fd.w12_e1 ==
            doctest::Approx(2 * fd.H + fd.beta2).epsilon(1e-7).scale(1.0));
    }
  }
}

TEST_CASE("covariant Hessian of beta is symmetric; raw asymmetry is the bracket") {
  for (const auto& imm : general_corpus())
    for (auto [u, v] : sample_points(imm)) {
      if (!in_W(imm, u, v)) continue;
      auto fd = frame_data(imm, u, v);
      CHECK(fd.betaH[0][1] == doctest::Approx(fd.betaH[1][0]).epsilon(1e-7).scale(1.0));
      // e_1 e_2 beta - e_2 e_1 beta = [e_1,e_2] beta, via the connection
      double bracket = (2 * fd.H + fd.beta2) * std::tan(fd.beta) * fd.beta1 -
                       (2 * fd.params.tau + fd.beta1) * std::tan(fd.beta) * fd.beta2;
      CHECK(fd.beta21 - fd.beta12 ==
            doctest::Approx(bracket).epsilon(1e-7).scale(1.0));
    }
}

TEST_CASE("vertical projection: norm, drift identity, closed form") {
  // Hopf torus: every term vanishes
  auto torus = hopf_torus({{4.0, 0.8}, 0.7});
  auto fd0 = frame_data(torus, 0.3, 1.1);
  CHECK(std::abs(fd0.tt_lhs) < 1e-9);
  CHECK(std::abs(fd0.tt_rhs) < 1e-9);

  for (const auto& imm : general_corpus())
    for (auto [u, v] : sample_points(imm)) {
      if (!in_W(imm, u, v)) continue;
      auto fd = frame_data(imm, u, v);
      CHECK(fd.Tnorm2 + fd.C * fd.C == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(fd.tt_lhs == doctest::Approx(fd.tt_rhs).epsilon(1e-6).scale(1.0));
      CHECK(fd.nablaTT_formula_res < 1e-7);
    }
}

TEST_CASE("Gauss equation ties intrinsic and ambient curvature") {
  for (const auto& imm : general_corpus())
    for (auto [u, v] : sample_points(imm)) {
      if (!in_W(imm, u, v)) continue;
      auto fd = frame_data(imm, u, v);
      CHECK(fd.K_intrinsic == doctest::Approx(fd.K_ambient + fd.det_h)
                                  .epsilon(1e-5).scale(1.0));
    }
}

TEST_CASE("covariant derivative of the shape operator is symmetric in i,j") {
  for (const auto& imm : general_corpus())
    for (auto [u, v] : sample_points(imm, 3)) {
      if (!in_W(imm, u, v)) continue;
      auto fd = frame_data(imm, u, v);
      for (int k = 0; k < 2; ++k)
        CHECK(fd.hcov[0][1][k] ==
              doctest::Approx(fd.hcov[1][0][k]).epsilon(1e-6).scale(1.0));
    }
}

TEST_CASE("grid scans separate cmc from perturbed surfaces") {
  auto torus = hopf_torus({{4.0, 1.0}, 0.9});
  auto gs = scan_grid(torus, 8, 8);
  CHECK(gs.points == 64);
  CHECK(gs.H_spread < 1e-9);
  CHECK(gs.C_max < 1e-10);
  CHECK(torus.cmc_H.has_value());
  CHECK(*torus.cmc_H == doctest::Approx(gs.H_mean).epsilon(1e-9));

  auto pert = perturbed_torus({{4.0, 1.0}, 0.8, 0.05, 2, 3});
  auto gp = scan_grid(pert, 8, 8);
  CHECK(gp.H_spread > 1e-3);
  CHECK(!pert.cmc_H.has_value());
}

TEST_CASE("constructor guards") {
  CHECK_THROWS_AS((void)hopf_torus({{4.0, 1.0}, 1.8}), ConfigError);
  CHECK_THROWS_AS((void)hopf_torus({{-1.0, 1.0}, 0.5}), ChartDomainError);
  CHECK_THROWS_AS((void)perturbed_torus({{4.0, 1.0}, 0.1, 0.2, 2, 3}),
                  ImmersionError);
  CHECK_THROWS_AS((void)hopf_cylinder_disk({-4.0, 1.0}, 1.1), ChartDomainError);
  // amplitude 0 perturbation coincides with the unperturbed torus
  auto p0 = perturbed_torus({{4.0, 1.0}, 0.7, 0.0, 2, 3});
  auto t0 = hopf_torus({{4.0, 1.0}, 0.7});
  auto a = frame_data(p0, 0.4, 1.2), b = frame_data(t0, 0.4, 1.2);
  CHECK(a.H == doctest::Approx(b.H).epsilon(1e-12));
  CHECK(a.A2 == doctest::Approx(b.A2).epsilon(1e-12));
}

TEST_CASE("disk-chart cylinders: vertical tangent, h22 = 0, cmc") {
  for (auto mp : {ModelParams{0.0, 0.7}, ModelParams{-1.0, 0.5},
                  ModelParams{1.5, 0.4}}) {
    auto imm = hopf_cylinder_disk(mp, 0.8);
    for (auto [u, v] : sample_points(imm, 3)) {
      auto fd = frame_data(imm, u, v);
      CHECK(std::abs(fd.C) < 1e-10);
      CHECK(fd.h22 == doctest::Approx(0.0).epsilon(1e-9).scale(1.0));
      CHECK(fd.h12 == doctest::Approx(-mp.tau).epsilon(1e-9));
      CHECK(fd.A2 == doctest::Approx(2.0 * (2.0 * fd.H * fd.H + mp.tau * mp.tau))
                         .epsilon(1e-8));
      // parallel second fundamental form
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          for (int k = 0; k < 2; ++k)
            CHECK(std::abs(fd.hcov[i][j][k]) < 1e-7);
    }
    auto gs = scan_grid(imm, 8, 4);
    CHECK(gs.H_spread < 1e-9);
  }
}
