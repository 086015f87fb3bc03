#pragma once

// Discriminant and roots of the quadratic (in |Phi|^2) under the curvature
// integral, the corridor ordering a <= H^2+tau^2 < 2(H^2+tau^2) <= b for
// kappa > 4 tau^2, and corridor membership in |A|^2 terms.

#include <vector>

namespace ektau {

struct PinchingInput {
  double kappa = 0.0;
  double tau = 1.0;
  double H = 0.0;
  double C = 0.0;
};

// rho = 4(H^2+tau^2)^2 + 4(H^2+tau^2)(kappa-4tau^2)(1-C^2)
//       + (kappa-4tau^2)^2 (5C^2-1)^2
double rho(const PinchingInput& in);

struct PinchingInterval {
  double a = 0.0, b = 0.0;
  double rho = 0.0;
  bool negative_discriminant = false;  // possible only for kappa < 4 tau^2;
                                       // reported as data, a/b are NaN then
};

PinchingInterval pinching_interval(const PinchingInput& in);

struct CorridorVerdict {
  double general_lo = 0.0, general_hi = 0.0;  // [a+2H^2, b+2H^2]
  double special_lo = 0.0, special_hi = 0.0;  // [3H^2+tau^2, 2(2H^2+tau^2)]
  bool in_general = false;
  bool in_special = false;
  bool special_inside_general = false;
};

// Membership of |A|^2 in the corridors; requires kappa > 4 tau^2
// (WrongCurvatureRegime otherwise).
CorridorVerdict corridor_check(double A2, const PinchingInput& in);

// Max absolute residual of a and b plugged back into the quadratic, plus the
// Vieta residuals (relative).
double quadratic_consistency(const PinchingInput& in);

}  // namespace ektau
