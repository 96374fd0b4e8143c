#pragma once

// Tangent space to the hyperkaehler quotient at a regular on-level point,
// and the fixed subspace of a real-linear involution inside it. Moment-map
// differentials are evaluated exactly through the symmetric difference of the
// quadratic moment maps.

#include <string>

#include "quiverhk/hk_geometry.hpp"
#include "quiverhk/involutions.hpp"
#include "quiverhk/quiver.hpp"

namespace qhk {

struct TangentFrame {
  int ambient_dim = 0;     // real dimension of the representation space
  RMat horizontal_basis;   // ambient_dim x quotient_dim, eta-orthonormal
  int quotient_dim = 0;    // real dimension of the quotient tangent
};

// Orthonormal real basis of the infinitesimal U(V)-orbit directions
// ([xi, A], [xi, B], xi I, -J xi) at x.
RMat orbit_directions(const Representation& x);

// Exact differential of (mu1, mu2, mu3) at x applied to a tangent direction.
MomentValues moment_differential(const Representation& x, const Representation& t);

TangentFrame quotient_tangent(const Representation& x, const LevelSpec& level);

struct FixedSubspace {
  int real_dim = 0;
  std::string type_tag;  // brane type of the spec
  RMat basis;            // ambient_dim x real_dim, eta-orthonormal, horizontal
};

// Dimension of the +1 eigenspace of the involution restricted to the
// horizontal frame. Requires x to be an exact fixed point of the spec.
FixedSubspace fixed_subspace_dim(const InvolutionSpec& spec, const Representation& x,
                                 const TangentFrame& frame);

// max |omega_k(u, v)| over the columns of a flattened basis.
double omega_max_on_subspace(int k, const RepShapePtr& shape, const RMat& basis);

// Residual of Gamma_k-invariance of the span of the columns.
double gamma_invariance_residual(int k, const RepShapePtr& shape, const RMat& basis);

}  // namespace qhk
