#include <cmath>

#include "doctest.h"
#include "ektau/errors.hpp"
#include "ektau/hopf.hpp"

using namespace ektau;

TEST_CASE("torus constructor: domain, tag, and latitude law") {
  for (double s : {0.3, M_PI / 4, 1.1}) {
    auto imm = hopf_torus({{4.0, 1.0}, s});
    CHECK(imm.domain.periodic_u);
    CHECK(imm.domain.periodic_v);
    REQUIRE(imm.cmc_H.has_value());
    CHECK(*imm.cmc_H == doctest::Approx(hopf_torus_H({4.0, 1.0}, s)).epsilon(1e-10));
  }
  // s <-> pi/2 - s mirrors the latitude circle: H flips sign
  CHECK(hopf_torus_H({2.5, 0.8}, 0.5) ==
        doctest::Approx(-hopf_torus_H({2.5, 0.8}, M_PI / 2 - 0.5)).epsilon(1e-13));
  // the equatorial torus is minimal
  CHECK(std::abs(*hopf_torus({{4.0, 1.0}, M_PI / 4}).cmc_H) < 1e-10);
}

TEST_CASE("torus constructor guards") {
  CHECK_THROWS_AS((void)hopf_torus({{4.0, 1.0}, 0.0}), ConfigError);
  CHECK_THROWS_AS((void)hopf_torus({{4.0, 1.0}, M_PI / 2}), ConfigError);
  CHECK_THROWS_AS((void)hopf_torus({{-1.0, 1.0}, 0.5}), ChartDomainError);
  CHECK_THROWS_AS((void)hopf_torus({{4.0, 0.0}, 0.5}), ZeroTau);
}

TEST_CASE("cylinder over a circle in the flat-base chart has H = 1/(2r)") {
  double r = 0.7;
  auto imm = hopf_cylinder_disk({0.0, 0.6}, r);
  REQUIRE(imm.cmc_H.has_value());
  // independent oracle: half the Euclidean curvature of the base circle
  // (sign depends on the normal orientation, so compare magnitudes)
  CHECK(std::abs(*imm.cmc_H) == doctest::Approx(1.0 / (2.0 * r)).epsilon(1e-9));
  CHECK(imm.domain.periodic_u);
  CHECK(!imm.domain.periodic_v);
}

TEST_CASE("cylinder radius guard in the hyperbolic-base chart") {
  // kappa < 0: the disk chart ends at |x|^2 = -4/kappa
  CHECK_THROWS_AS((void)hopf_cylinder_disk({-1.0, 0.5}, 2.0), ChartDomainError);
  CHECK_THROWS_AS((void)hopf_cylinder_disk({0.0, 0.5}, -0.1), ChartDomainError);
  CHECK_NOTHROW((void)hopf_cylinder_disk({-1.0, 0.5}, 1.5));
}

TEST_CASE("perturbed torus stays inside the coordinate strip or throws") {
  auto imm = perturbed_torus({{4.0, 1.0}, 0.8, 0.04, 2, 3});
  CHECK(!imm.cmc_H.has_value());
  CHECK_THROWS_AS((void)perturbed_torus({{4.0, 1.0}, 0.1, 0.2, 2, 3}),
                  ImmersionError);
}

TEST_CASE("graph patch is a valid non-cmc immersion") {
  auto imm = graph_patch({{0.0, 0.7}, 0.3, -0.2, 0.1, 1.3, 0.9, 0.1, 0.0, 0.25});
  CHECK(!imm.cmc_H.has_value());
  CHECK(!imm.domain.periodic_u);
  auto tn = tangent_normal(imm, 0.1, 0.05);
  (void)tn;
}
