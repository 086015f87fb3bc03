#include "ektau/hopf.hpp"

#include <cmath>

#include "ektau/errors.hpp"

namespace ektau {

namespace {

// Construction-time smoke test: the immersion condition and chart domain on a
// coarse grid. Converts failures into ImmersionError.
void validate_immersion(const ParametricImmersion& imm, int n = 9) {
  auto us = grid_axis(imm.domain.u0, imm.domain.u1, n, imm.domain.periodic_u);
  auto vs = grid_axis(imm.domain.v0, imm.domain.v1, n, imm.domain.periodic_v);
  for (double u : us)
    for (double v : vs) {
      try {
        (void)tangent_normal(imm, u, v);
      } catch (const DegenerateParametrization&) {
        throw ImmersionError("immersion condition fails on the requested domain");
      } catch (const ChartDomainError&) {
        throw ImmersionError("surface leaves the chart domain");
      }
    }
}

double measure_H(const ParametricImmersion& imm) {
  double u = imm.domain.u0 + 0.37 * (imm.domain.u1 - imm.domain.u0);
  double v = imm.domain.v0 + 0.61 * (imm.domain.v1 - imm.domain.v0);
  return frame_data(imm, u, v).H;
}

}  // namespace

double hopf_torus_H(const ModelParams& mp, double s) {
  // geodesic curvature of the latitude circle in the curvature-kappa sphere,
  // divided by two
  return 0.5 * std::sqrt(mp.kappa) * (std::cos(2.0 * s) / std::sin(2.0 * s));
}

ParametricImmersion hopf_torus(const HopfTorusSpec& spec) {
  validate_params(spec.params, ChartId::BergerSphere);
  if (!(spec.s > 0.0 && spec.s < M_PI / 2))
    throw ConfigError("torus latitude must lie in (0, pi/2)");
  ParametricImmersion imm;
  imm.params = spec.params;
  imm.chart = ChartId::BergerSphere;
  double s0 = spec.s;
  imm.map = [s0](const Jet3& u, const Jet3& v) -> Vec3T<Jet3> {
    return {Jet3::constant(s0), u, v};
  };
  imm.domain = {0.0, 2 * M_PI, 0.0, 2 * M_PI, true, true};
  imm.name = "hopf_torus";
  validate_immersion(imm);
  imm.cmc_H = measure_H(imm);
  return imm;
}

ParametricImmersion hopf_cylinder_disk(const ModelParams& mp, double radius) {
  validate_params(mp, ChartId::DiskModel);
  if (radius <= 0.0 || 1.0 + mp.kappa * radius * radius / 4.0 <= 1e-6)
    throw ChartDomainError("cylinder radius outside the disk chart");
  ParametricImmersion imm;
  imm.params = mp;
  imm.chart = ChartId::DiskModel;
  imm.map = [radius](const Jet3& u, const Jet3& v) -> Vec3T<Jet3> {
    return {radius * cos(u), radius * sin(u), v};
  };
  imm.domain = {0.0, 2 * M_PI, -0.5, 0.5, true, false};
  imm.name = "hopf_cylinder_disk";
  validate_immersion(imm);
  imm.cmc_H = measure_H(imm);
  return imm;
}

ParametricImmersion perturbed_torus(const PerturbedTorusSpec& spec) {
  validate_params(spec.params, ChartId::BergerSphere);
  double a = std::abs(spec.amplitude);
  if (!(spec.s - a > 0.0 && spec.s + a < M_PI / 2))
    throw ImmersionError("perturbation leaves the Hopf-coordinate strip");
  ParametricImmersion imm;
  imm.params = spec.params;
  imm.chart = ChartId::BergerSphere;
  double s0 = spec.s, A = spec.amplitude;
  double m = spec.freq_u, n = spec.freq_v;
  imm.map = [s0, A, m, n](const Jet3& u, const Jet3& v) -> Vec3T<Jet3> {
    return {s0 + A * sin(m * u + n * v), u, v};
  };
  imm.domain = {0.0, 2 * M_PI, 0.0, 2 * M_PI, true, true};
  imm.name = "perturbed_torus";
  validate_immersion(imm, 13);
  return imm;
}

ParametricImmersion graph_patch(const GraphPatchSpec& spec) {
  validate_params(spec.params, ChartId::DiskModel);
  ParametricImmersion imm;
  imm.params = spec.params;
  imm.chart = ChartId::DiskModel;
  double cx = spec.cx, cy = spec.cy, amp = spec.amp, fx = spec.fx, fy = spec.fy;
  imm.map = [cx, cy, amp, fx, fy](const Jet3& u, const Jet3& v) -> Vec3T<Jet3> {
    return {u, v, cx * u + cy * v + amp * sin(fx * u) * cos(fy * v)};
  };
  imm.domain = {spec.x0 - spec.half, spec.x0 + spec.half, spec.y0 - spec.half,
                spec.y0 + spec.half, false, false};
  imm.name = "graph_patch";
  validate_immersion(imm);
  return imm;
}

}  // namespace ektau
