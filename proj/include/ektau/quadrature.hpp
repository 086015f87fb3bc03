#pragma once

// Surface integrals with the area element of the first fundamental form.
// Periodic axes use the equispaced trapezoid rule (spectrally accurate for
// smooth periodic integrands); non-periodic axes use composite Simpson.
// Summation is pairwise for run-to-run determinism, and every integral carries
// a grid-doubling estimate.

#include <functional>

#include "ektau/surface.hpp"

namespace ektau {

struct GridSpec {
  int n_u = 64;
  int n_v = 64;
};

struct IntegralResult {
  double value = 0.0;           // finer-grid value
  double coarse = 0.0;          // value at the requested grid
  double doubling_delta = 0.0;  // |value - coarse|
  int n_u = 0, n_v = 0;         // requested grid
};

// Scalar integrand sampled at parameter points.
using ScalarField =
    std::function<double(const ParametricImmersion&, double u, double v)>;

ScalarField constant_field(double c);
// Lifts a SurfaceFrameData functional; throws through AdaptedFrameUndefined at
// W^c points.
ScalarField gated_field(std::function<double(const SurfaceFrameData&)> f);

IntegralResult integrate(const ParametricImmersion& imm, const ScalarField& field,
                         const GridSpec& grid);

double surface_area(const ParametricImmersion& imm, const GridSpec& grid);

struct SimonsResult {
  IntegralResult integral;
  double H = 0.0;
  bool nonnegative = false;  // value >= -1e-7
};

// The curvature functional of the pinching inequality; requires a cmc tag and
// a doubly periodic (compact) domain.
SimonsResult simons_functional(const ParametricImmersion& imm, const GridSpec& grid);

}  // namespace ektau
