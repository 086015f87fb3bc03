#pragma once

// Constructors for the test-surface corpus: vertical tori over latitude
// circles in the Berger sphere (compact, cmc), vertical cylinders over
// circles in the disk chart, perturbed non-cmc tori, and graph patches.

#include "ektau/surface.hpp"

namespace ektau {

struct HopfTorusSpec {
  ModelParams params;  // kappa > 0
  double s = M_PI / 4;  // latitude in (0, pi/2)
};

// Doubly periodic, cmc-tagged; image {(cos s e^{i u}, sin s e^{i v})} in Hopf
// coordinates. The cmc tag carries the measured H.
ParametricImmersion hopf_torus(const HopfTorusSpec& spec);

// Mean curvature of the torus over the latitude-s circle: half the geodesic
// curvature of that circle in the base sphere of curvature kappa.
double hopf_torus_H(const ModelParams& mp, double s);

// Vertical cylinder over the circle of the given radius in the disk chart;
// periodic in u, cmc-tagged.
ParametricImmersion hopf_cylinder_disk(const ModelParams& mp, double radius);

struct PerturbedTorusSpec {
  ModelParams params;
  double s = M_PI / 4;
  double amplitude = 0.0;
  int freq_u = 2, freq_v = 3;
};

// s(u,v) = s0 + amplitude sin(m u + n v); not cmc-tagged. Throws
// ImmersionError if the perturbation breaks the immersion condition or
// leaves the chart.
ParametricImmersion perturbed_torus(const PerturbedTorusSpec& spec);

struct GraphPatchSpec {
  ModelParams params;
  double cx = 0.0, cy = 0.0;  // linear slope of the height function
  double amp = 0.0;            // amplitude of the sin*cos ripple
  double fx = 1.0, fy = 1.0;
  double x0 = 0.0, y0 = 0.0;   // patch center in the base disk
  double half = 0.3;           // patch half-width
};

// Graph z = cx x + cy y + amp sin(fx x) cos(fy y) over a square patch of the
// disk chart; not cmc-tagged.
ParametricImmersion graph_patch(const GraphPatchSpec& spec);

}  // namespace ektau
