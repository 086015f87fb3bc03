#include "ektau/formal.hpp"

#include <random>

#include "ektau/errors.hpp"

namespace ektau {

FormalJetState build_state(const Rational& t, const Rational& beta1,
                           const Rational& H, const Rational& tau,
                           const Rational& kappa, bool corrupt_sign) {
  if (tau == 0) throw ZeroTau("tau must be nonzero");
  if (t * t == 1) throw VerticalPoint("t^2 = 1 means cos(beta) = 0");

  FormalJetState s;
  s.t = t;
  s.beta1 = beta1;
  s.H = H;
  s.tau = tau;
  s.kappa = kappa;

  Rational t2 = t * t;
  s.sin_b = 2 * t / (1 + t2);
  s.cos_b = (1 - t2) / (1 + t2);
  s.tan_b = s.sin_b / s.cos_b;
  s.sec2_b = 1 / (s.cos_b * s.cos_b);
  s.r = H / tau;
  s.D = 1 + s.r * s.r;
  s.K = kappa - 4 * tau * tau;

  s.beta2 = s.r * beta1;

  Rational a = tau + beta1, b = 2 * tau + beta1;
  Rational curv = s.K * s.sin_b * s.cos_b;
  if (corrupt_sign) curv = -curv;
  // D beta11 = -2 D (tau+b1)(2tau+b1) tan(b) - K sin(b) cos(b)
  s.beta11 = (-2 * s.D * a * b * s.tan_b - curv) / s.D;

  s.beta12 = s.r * s.beta11;
  s.beta21 = s.beta12;
  s.beta22 = s.r * s.r * s.beta11;

  // D beta111 = -2 D [(3tau+2b1) b11 tan(b) + (tau+b1)(2tau+b1) sec^2(b) b1]
  //             - K cos(2b) b1
  Rational cos2b = s.cos_b * s.cos_b - s.sin_b * s.sin_b;
  s.beta111 = (-2 * s.D *
                   ((3 * tau + 2 * beta1) * s.beta11 * s.tan_b +
                    a * b * s.sec2_b * beta1) -
               s.K * cos2b * beta1) /
              s.D;
  s.beta122 = s.r * s.r * s.beta111;
  return s;
}

Rational verify_laplacian_chain(const FormalJetState& s) {
  Rational a = s.tau + s.beta1, b = 2 * s.tau + s.beta1;

  // collapsed jet form after the beta12/beta122 eliminations
  Rational jet = 4 * s.D * s.D *
                 (s.beta11 * s.beta11 + a * s.beta111 + b * a * s.tan_b * s.beta11);

  // intermediate form before collapsing the mixed-derivative terms
  Rational mid =
      4 * s.D *
      (s.beta11 * s.beta11 + a * s.beta111 + s.beta12 * s.beta12 + a * s.beta122 +
       (2 * s.H + s.beta2) * a * s.tan_b * s.beta12 + b * a * s.tan_b * s.beta11);

  // fully substituted closed form
  Rational closed =
      4 * s.D * s.D *
          (s.beta11 * s.beta11 +
           2 * a * a * b * (2 * b * s.tan_b * s.tan_b - s.beta1)) +
      4 * s.D * s.K * a *
          (4 * a * s.sin_b * s.sin_b - s.beta1 * s.cos_b * s.cos_b);

  return abs(jet - mid) + abs(jet - closed);
}

Rational verify_grad_A_chain(const FormalJetState& s) {
  Rational x = s.beta11;
  Rational y = 2 * (s.tau + s.beta1) * (2 * s.tau + s.beta1) * s.tan_b;
  Rational h111 = s.r * (x - y);   // h_{11|1}
  Rational h112 = s.r * s.r * x + y;
  Rational h121 = -x - s.r * s.r * y;
  Rational h122 = -h111;           // = -h_{11|1} = -h_{22|1}
  Rational h221 = -h111, h222 = -h112;
  Rational sum = h111 * h111 + h112 * h112 + h221 * h221 + h222 * h222 +
                 2 * (h121 * h121 + h122 * h122);
  Rational collapsed = 2 * (2 * h111 * h111 + h112 * h112 + h121 * h121);
  Rational closed = 2 * s.D * s.D * (x * x + y * y);
  return abs(sum - collapsed) + abs(sum - closed);
}

Rational verify_pointwise_simons(const FormalJetState& s) {
  Rational a = s.tau + s.beta1, b = 2 * s.tau + s.beta1;
  Rational phi2 = 2 * s.D * a * a;
  Rational grad2 =
      2 * s.D * s.D *
      (s.beta11 * s.beta11 + 4 * a * a * b * b * s.tan_b * s.tan_b);
  Rational lap = 4 * s.D * s.D *
                 (s.beta11 * s.beta11 + a * s.beta111 + b * a * s.tan_b * s.beta11);
  Rational t_term =
      2 * s.tau * (s.beta1 * s.cos_b * s.cos_b + 2 * s.tau * s.sin_b * s.sin_b);

  Rational ht = s.H * s.H + s.tau * s.tau;
  Rational C2 = s.sin_b * s.sin_b;
  Rational lhs = lap / 2 - s.K * s.D * t_term;
  Rational rhs = grad2 - phi2 * (phi2 - 2 * ht) +
                 s.K * (phi2 * (5 * C2 - 1) - 2 * ht * (3 * C2 - 1));
  return abs(lhs - rhs);
}

FormalRun run_formal(int count, std::uint64_t seed, bool corrupt_sign) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-1000, 1000);
  std::uniform_int_distribution<int> den(1, 1000);
  auto draw = [&] { return Rational(num(rng), den(rng)); };

  FormalRun out;
  while (out.count < count) {
    Rational t = draw(), beta1 = draw(), H = draw(), tau = draw(), kappa = draw();
    if (tau == 0 || t * t == 1) continue;
    FormalJetState s = build_state(t, beta1, H, tau, kappa, corrupt_sign);
    ++out.count;
    Rational res = verify_laplacian_chain(s) + verify_grad_A_chain(s) +
                   verify_pointwise_simons(s);
    if (res != 0) {
      ++out.failures;
      if (!out.has_witness) {
        out.witness = s;
        out.has_witness = true;
      }
    }
  }
  return out;
}

}  // namespace ektau
