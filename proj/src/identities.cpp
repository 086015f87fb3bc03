#include "ektau/identities.hpp"

#include <cmath>

#include "ektau/errors.hpp"

namespace ektau {

double simons_integrand(double phi_sq, double C, const ModelParams& mp, double H) {
  double K = mp.kappa - 4.0 * mp.tau * mp.tau;
  double ht = H * H + mp.tau * mp.tau;
  double C2 = C * C;
  return phi_sq * phi_sq - (2.0 * ht + K * (5.0 * C2 - 1.0)) * phi_sq +
         2.0 * K * ht * (3.0 * C2 - 1.0);
}

double grad_A_sq_closed(const SurfaceFrameData& d, double H) {
  double tau = d.params.tau;
  double D = 1.0 + (H / tau) * (H / tau);
  double tb = std::tan(d.beta);
  double a = tau + d.beta1, b = 2.0 * tau + d.beta1;
  return 2.0 * D * D *
         (d.beta11 * d.beta11 + 4.0 * a * a * b * b * tb * tb);
}

namespace {

// components of the covariant derivative of A for a cmc surface, from the
// closed beta-derivative forms; order: h11|1, h11|2, h12|1, h12|2
std::array<double, 4> hcov_closed(const SurfaceFrameData& d, double H) {
  double tau = d.params.tau;
  double r = H / tau;
  double x = d.beta11;
  double y = 2.0 * (tau + d.beta1) * (2.0 * tau + d.beta1) * std::tan(d.beta);
  return {r * (x - y), r * r * x + y, -x - r * r * y, -r * (x - y)};
}

// third frame derivative of beta, eliminated through the differentiated
// curvature constraint (not reachable from order-3 jets of the immersion)
double beta111_from_constraint(const SurfaceFrameData& d, double H) {
  double tau = d.params.tau, kappa = d.params.kappa;
  double D = 1.0 + (H / tau) * (H / tau);
  double K = kappa - 4.0 * tau * tau;
  double tb = std::tan(d.beta), sec2 = 1.0 / (std::cos(d.beta) * std::cos(d.beta));
  double a = tau + d.beta1, b = 2.0 * tau + d.beta1;
  double num = -2.0 * D * ((3.0 * tau + 2.0 * d.beta1) * d.beta11 * tb +
                           a * b * sec2 * d.beta1) -
               K * std::cos(2.0 * d.beta) * d.beta1;
  return num / D;
}

double lap_phi_sq(const SurfaceFrameData& d, double H) {
  double tau = d.params.tau;
  double D = 1.0 + (H / tau) * (H / tau);
  double a = tau + d.beta1, b = 2.0 * tau + d.beta1;
  double b111 = beta111_from_constraint(d, H);
  return 4.0 * D * D *
         (d.beta11 * d.beta11 + a * b111 + b * a * std::tan(d.beta) * d.beta11);
}

}  // namespace

double simons_rhs(const SurfaceFrameData& d, double H) {
  double tau = d.params.tau;
  double K = d.params.kappa - 4.0 * tau * tau;
  double ht = H * H + tau * tau;
  double C2 = d.C * d.C;
  double phi2 = d.phi2;
  return grad_A_sq_closed(d, H) - phi2 * (phi2 - 2.0 * ht) +
         K * (phi2 * (5.0 * C2 - 1.0) - 2.0 * ht * (3.0 * C2 - 1.0));
}

const std::vector<IdentityCheck>& check_registry() {
  static const std::vector<IdentityCheck> reg = [] {
    std::vector<IdentityCheck> r;
    auto add = [&r](std::string name, CheckGroup g, double tol,
                    std::function<double(const SurfaceFrameData&, double)> f) {
      r.push_back({std::move(name), g, tol, std::move(f)});
    };

    // --- General group -----------------------------------------------------
    add("shape_h11", CheckGroup::General, 1e-7,
        [](const SurfaceFrameData& d, double) {
          return d.h11 - 2.0 * d.H - d.beta2;
        });
    add("shape_h12", CheckGroup::General, 1e-7,
        [](const SurfaceFrameData& d, double) {
          return d.h12 + d.params.tau + d.beta1;
        });
    add("shape_h22", CheckGroup::General, 1e-7,
        [](const SurfaceFrameData& d, double) { return d.h22 + d.beta2; });
    // The first Codazzi relation is equivalent (through the shape-operator
    // relations) to tau beta2 = H beta1, an algebraic constraint on the
    // traceless second fundamental form. It holds on cmc surfaces but not
    // pointwise on arbitrary immersions, so it lives in the Cmc group.
    add("codazzi_first", CheckGroup::Cmc, 1e-6,
        [](const SurfaceFrameData& d, double) {
          return d.beta1 * d.w12_e1 * d.cos_b -
                 d.beta2 * (2.0 * d.params.tau + d.beta1);
        });
    add("codazzi_first_consequence", CheckGroup::Cmc, 1e-7,
        [](const SurfaceFrameData& d, double) {
          return d.params.tau * d.beta2 - d.H * d.beta1;
        });
    add("codazzi_second", CheckGroup::General, 1e-5,
        [](const SurfaceFrameData& d, double) {
          double tau = d.params.tau;
          double K = d.params.kappa - 4.0 * tau * tau;
          double sb = d.C, cb = d.cos_b;
          return cb * d.e2_w12_e1 + sb * cb * d.w12_e1 * d.w12_e1 + d.beta11 +
                 2.0 * (tau + d.beta1) * (2.0 * tau + d.beta1) * (sb / cb) +
                 K * sb * cb;
        });
    add("beta_hessian_symmetry", CheckGroup::General, 1e-7,
        [](const SurfaceFrameData& d, double) {
          return d.betaH[0][1] - d.betaH[1][0];
        });
    add("gauss_equation", CheckGroup::General, 1e-5,
        [](const SurfaceFrameData& d, double) {
          return d.K_intrinsic - d.K_ambient - d.det_h;
        });
    add("vertical_norm_split", CheckGroup::General, 1e-12,
        [](const SurfaceFrameData& d, double) {
          return d.Tnorm2 + d.C * d.C - 1.0;
        });
    add("t_field_drift", CheckGroup::General, 1e-6,
        [](const SurfaceFrameData& d, double) { return d.tt_lhs - d.tt_rhs; });
    add("t_field_component", CheckGroup::General, 1e-7,
        [](const SurfaceFrameData& d, double) { return d.nablaTT_formula_res; });

    // --- Cmc group ---------------------------------------------------------
    add("phi_norm", CheckGroup::Cmc, 1e-8,
        [](const SurfaceFrameData& d, double H) {
          double tau = d.params.tau;
          double a = tau + d.beta1;
          double D = 1.0 + (H / tau) * (H / tau);
          return d.A2 - 2.0 * H * H - 2.0 * D * a * a;
        });
    add("grad_A_components", CheckGroup::Cmc, 1e-5,
        [](const SurfaceFrameData& d, double H) {
          auto c = hcov_closed(d, H);
          double worst = 0.0;
          double direct[4] = {d.hcov[0][0][0], d.hcov[0][0][1], d.hcov[0][1][0],
                              d.hcov[0][1][1]};
          for (int i = 0; i < 4; ++i)
            worst = std::max(worst, std::abs(direct[i] - c[i]));
          // trace-freeness of the derivative
          for (int k = 0; k < 2; ++k)
            worst = std::max(worst, std::abs(d.hcov[0][0][k] + d.hcov[1][1][k]));
          return worst;
        });
    add("grad_A_closed_form", CheckGroup::Cmc, 1e-10,
        [](const SurfaceFrameData& d, double H) {
          auto c = hcov_closed(d, H);
          double sum = 2.0 * (c[0] * c[0] + c[1] * c[1] + c[2] * c[2] + c[3] * c[3]);
          return sum - grad_A_sq_closed(d, H);
        });
    add("grad_A_direct", CheckGroup::Cmc, 1e-5,
        [](const SurfaceFrameData& d, double H) {
          double sum = 0.0;
          for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
              for (int k = 0; k < 2; ++k) sum += d.hcov[i][j][k] * d.hcov[i][j][k];
          return sum - grad_A_sq_closed(d, H);
        });
    add("pointwise_laplacian", CheckGroup::Cmc, 1e-5,
        [](const SurfaceFrameData& d, double H) {
          double tau = d.params.tau;
          double K = d.params.kappa - 4.0 * tau * tau;
          double D = 1.0 + (H / tau) * (H / tau);
          double lhs = 0.5 * lap_phi_sq(d, H) - K * D * d.tt_lhs;
          return lhs - simons_rhs(d, H);
        });
    add("equality_case_integrand", CheckGroup::Cmc, 1e-8,
        [](const SurfaceFrameData& d, double H) {
          // only an identity on the extremal (beta1 = 0, C = 0) locus; the
          // suite applies it to Hopf surfaces via its tolerance
          return simons_integrand(d.phi2, d.C, d.params, H);
        });
    return r;
  }();
  return reg;
}

SuiteResult run_identity_suite(const ParametricImmersion& imm, int n_u, int n_v,
                               bool include_cmc) {
  if (include_cmc && !imm.cmc_H)
    throw CmcRequired("cmc checks requested on a surface without a cmc tag");

  SuiteResult out;
  const auto& reg = check_registry();
  for (const auto& chk : reg) {
    if (chk.group == CheckGroup::Cmc && !include_cmc) continue;
    out.checks.push_back({chk.name, chk.group, 0.0, chk.tolerance, 0, true});
  }

  double H_const = imm.cmc_H.value_or(0.0);
  auto us = grid_axis(imm.domain.u0, imm.domain.u1, n_u, imm.domain.periodic_u);
  auto vs = grid_axis(imm.domain.v0, imm.domain.v1, n_v, imm.domain.periodic_v);
  double hmin = 0.0, hmax = 0.0, hsum = 0.0;
  bool first = true;
  for (double u : us)
    for (double v : vs) {
      if (!in_W(imm, u, v)) {
        ++out.skipped;
        continue;
      }
      SurfaceFrameData d = frame_data(imm, u, v);
      if (first) {
        hmin = hmax = d.H;
        first = false;
      } else {
        hmin = std::min(hmin, d.H);
        hmax = std::max(hmax, d.H);
      }
      hsum += d.H;
      out.scan.C_max = std::max(out.scan.C_max, std::abs(d.C));
      ++out.scan.points;
      int slot = 0;
      for (const auto& chk : reg) {
        if (chk.group == CheckGroup::Cmc && !include_cmc) continue;
        CheckResult& cr = out.checks[slot++];
        double res = std::abs(chk.residual(d, H_const));
        cr.max_residual = std::max(cr.max_residual, res);
        ++cr.evaluated;
      }
    }
  if (out.scan.points > 0) {
    out.scan.H_mean = hsum / out.scan.points;
    out.scan.H_spread = hmax - hmin;
  }
  out.scan.gated = out.skipped;

  if (include_cmc && out.scan.H_spread > 1e-8) {
    out.checks.push_back({"cmc_tag_constancy", CheckGroup::Cmc,
                          out.scan.H_spread, 1e-8, out.scan.points, false});
  }
  for (auto& cr : out.checks) {
    cr.pass = cr.max_residual <= cr.tolerance;
    out.pass = out.pass && cr.pass;
  }
  return out;
}

}  // namespace ektau
