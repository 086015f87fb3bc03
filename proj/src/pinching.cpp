#include "ektau/pinching.hpp"

#include <cmath>
#include <limits>

#include "ektau/errors.hpp"

namespace ektau {

double rho(const PinchingInput& in) {
  double ht = in.H * in.H + in.tau * in.tau;
  double K = in.kappa - 4.0 * in.tau * in.tau;
  double C2 = in.C * in.C;
  double q = 5.0 * C2 - 1.0;
  return 4.0 * ht * ht + 4.0 * ht * K * (1.0 - C2) + K * K * q * q;
}

PinchingInterval pinching_interval(const PinchingInput& in) {
  PinchingInterval out;
  out.rho = rho(in);
  double ht = in.H * in.H + in.tau * in.tau;
  double K = in.kappa - 4.0 * in.tau * in.tau;
  double mid = 2.0 * ht + K * (5.0 * in.C * in.C - 1.0);
  if (out.rho < 0.0) {
    out.negative_discriminant = true;
    out.a = out.b = std::numeric_limits<double>::quiet_NaN();
    return out;
  }
  double s = std::sqrt(out.rho);
  out.a = (mid - s) / 2.0;
  out.b = (mid + s) / 2.0;
  return out;
}

CorridorVerdict corridor_check(double A2, const PinchingInput& in) {
  if (!(in.kappa > 4.0 * in.tau * in.tau))
    throw WrongCurvatureRegime("corridor semantics require kappa > 4 tau^2");
  auto iv = pinching_interval(in);
  CorridorVerdict out;
  double h2 = 2.0 * in.H * in.H;
  out.general_lo = iv.a + h2;
  out.general_hi = iv.b + h2;
  out.special_lo = 3.0 * in.H * in.H + in.tau * in.tau;
  out.special_hi = 2.0 * (2.0 * in.H * in.H + in.tau * in.tau);
  constexpr double tol = 1e-12;
  out.in_general = A2 >= out.general_lo - tol && A2 <= out.general_hi + tol;
  out.in_special = A2 >= out.special_lo - tol && A2 <= out.special_hi + tol;
  out.special_inside_general = out.special_lo >= out.general_lo - tol &&
                               out.special_hi <= out.general_hi + tol;
  return out;
}

double quadratic_consistency(const PinchingInput& in) {
  auto iv = pinching_interval(in);
  if (iv.negative_discriminant)
    return std::numeric_limits<double>::quiet_NaN();
  double ht = in.H * in.H + in.tau * in.tau;
  double K = in.kappa - 4.0 * in.tau * in.tau;
  double mid = 2.0 * ht + K * (5.0 * in.C * in.C - 1.0);
  double cst = 2.0 * K * ht * (3.0 * in.C * in.C - 1.0);
  double scale = 1.0 + std::abs(mid) + std::abs(cst) + iv.a * iv.a + iv.b * iv.b;
  auto q = [&](double x) { return x * x - mid * x + cst; };
  double worst = std::max(std::abs(q(iv.a)), std::abs(q(iv.b)));
  // Vieta
  worst = std::max(worst, std::abs(iv.a + iv.b - mid));
  worst = std::max(worst, std::abs(iv.a * iv.b - cst));
  return worst / scale;
}

}  // namespace ektau
