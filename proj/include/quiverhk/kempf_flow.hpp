#pragma once

// Gradient flow along the GL(V)-orbit of a stable point to reach a prescribed
// mu3 level inside muC^-1(0). The gauge iterate stays in the positive
// Hermitian slice; the complex moment map is carried along by conjugation and
// stays at zero automatically.

#include "quiverhk/hk_geometry.hpp"
#include "quiverhk/quiver.hpp"

namespace qhk {

struct FlowResult {
  GaugeElement g;           // positive Hermitian blocks
  double residual = 0.0;    // || mu3(g.x) - i c Id ||, summed over vertices
  int iterations = 0;
  bool converged = false;
  double max_muC_drift = 0.0;   // worst ||muC|| seen along the flow
  int stable_side_sign = +1;    // sign of c attained by stable scalar data
};

// Hermitian per-vertex gradient of f(s) = ||mu3(exp(s).x) - i c Id||^2 at
// s = 0; exact, assembled from the quadratic moment map.
std::vector<CMat> mu3_gradient(const Representation& x, const LevelSpec& level);

// Directional derivative of f in a Hermitian direction, for cross-checks.
double mu3_directional_derivative(const Representation& x, const LevelSpec& level,
                                  const std::vector<CMat>& direction);

FlowResult flow_to_level(const Representation& x, const LevelSpec& level, double tol,
                         int max_iters);

// Empirical sign of the mu3 level reached by stable scalar data.
int probe_stable_side_sign();

}  // namespace qhk
