#pragma once

// Flat hyperkaehler structure on the representation space: hermitian metric,
// the three complex structures, the associated symplectic forms, and the
// moment maps mu1, mu2, mu3 together with the complex combination muC.

#include <vector>

#include "quiverhk/quiver.hpp"

namespace qhk {

struct MomentValues {
  std::vector<CMat> mu1, mu2, mu3, muC;  // per vertex, dimV[i] x dimV[i]
};

// mu3 target is the per-vertex matrix i*c*Id; mu1 and mu2 targets are zero.
struct LevelSpec {
  double c = 0.0;
};

// eta(X, Y) = sum over blocks of Re tr(block_X block_Y^*). Symmetric, real.
double metric(const Representation& x, const Representation& y);

// Gamma_1 = multiplication by i; Gamma_2 (A,B,I,J) -> (-B*, A*, -J*, I*);
// Gamma_3 = Gamma_1 Gamma_2.
Representation gamma(int k, const Representation& x);

// omega_k(X, Y) = eta(X, Gamma_k Y); antisymmetric.
double omega(int k, const Representation& x, const Representation& y);

MomentValues moment_maps(const Representation& x);

// Frobenius distance of mu3 from the level i*c*Id, accumulated over vertices.
double mu3_level_residual(const MomentValues& m, const LevelSpec& level);
double muC_norm(const MomentValues& m);

// Real flattening. Layout: A blocks in arrow order, then B, then I, then J;
// each block row-major; every complex entry contributes (re, im).
int real_dimension(const RepShape& shape);
RVec flatten(const Representation& x);
Representation unflatten(const RepShapePtr& shape, const RVec& v);

}  // namespace qhk
