#pragma once

// Exact replay of the cmc derivative chain on rational data. The tan-half-angle
// substitution t = tan(beta/2) makes every trigonometric quantity rational, so
// the Laplacian, |grad A|^2 and pointwise identities can be checked with zero
// tolerance. Free inputs are (t, beta1, H, tau, kappa); everything else is
// eliminated through the constraint equations, mirroring the derivation order.

#include <cstdint>
#include <boost/multiprecision/cpp_int.hpp>

namespace ektau {

using Rational = boost::multiprecision::cpp_rational;

struct FormalJetState {
  // free inputs
  Rational t, beta1, H, tau, kappa;
  // derived, exact
  Rational sin_b, cos_b, tan_b, sec2_b;
  Rational r;  // H/tau
  Rational D;  // 1 + (H/tau)^2
  Rational K;  // kappa - 4 tau^2
  Rational beta2, beta11, beta12, beta21, beta22, beta111, beta122;
};

// Throws ZeroTau if tau = 0, VerticalPoint if t^2 = 1 (cos beta = 0).
// corrupt_sign flips the sign of the curvature term in the beta11 constraint
// (mutation hook for the detection test).
FormalJetState build_state(const Rational& t, const Rational& beta1,
                           const Rational& H, const Rational& tau,
                           const Rational& kappa, bool corrupt_sign = false);

// Laplacian of |Phi|^2: jet-expansion form vs. the intermediate collapsed form
// vs. the fully substituted closed form; returns the sum of absolute
// differences (exactly 0 for a valid state).
Rational verify_laplacian_chain(const FormalJetState& s);

// |grad A|^2: componentwise assembly from the covariant-derivative components
// vs. the closed form; exactly 0.
Rational verify_grad_A_chain(const FormalJetState& s);

// The pointwise Laplacian identity with the vertical-drift term on the left;
// exactly 0.
Rational verify_pointwise_simons(const FormalJetState& s);

struct FormalRun {
  int count = 0;
  int failures = 0;
  // first failing state's inputs, for the report
  FormalJetState witness;
  bool has_witness = false;
};

// Runs all three checks on `count` random bounded rational states drawn from
// the seeded generator; |numerator| <= 1000, denominator <= 1000.
FormalRun run_formal(int count, std::uint64_t seed, bool corrupt_sign = false);

}  // namespace ektau
