#pragma once

// Intertwiners between representations, GL(V)-orbit membership witnesses, and
// fixed-point testing at the moduli level (orbit fixed by an involution).

#include <optional>

#include "quiverhk/involutions.hpp"
#include "quiverhk/quiver.hpp"

namespace qhk {

struct IntertwinerBasis {
  std::vector<std::vector<CMat>> basis;  // each element: per-vertex blocks k_i
  int dimension = 0;
};

// Solutions k of the A/B-conjugacy equations k_head A_a = Y_A_a k_tail and
// k_tail B_a = Y_B_a k_head, as an orthonormal basis.
IntertwinerBasis intertwiner_space(const Representation& x, const Representation& y);

// Invertible k with act(k, 1, x) = y, when one exists. Solved as one block
// linear system (conjugacy plus framing equations), then checked.
std::optional<GaugeElement> orbit_witness(const Representation& x, const Representation& y,
                                          double rel_tol = kRankTol);

// Witness that the GL(V)-orbit of x is fixed by the induced involution.
// Requires x stable (the moduli point is the orbit).
std::optional<GaugeElement> is_moduli_fixed(const InvolutionSpec& spec,
                                            const Representation& x);

bool is_exact_fixed_point(const InvolutionSpec& spec, const Representation& x,
                          double tol = 1e-8);

// For an orbit-fixed x, looks for a gauge move m with apply(spec, m.x) = m.x
// exactly, preferring unitary m. Returns the moved representation.
std::optional<Representation> move_to_exact_fixed(const InvolutionSpec& spec,
                                                  const Representation& x,
                                                  double tol = 1e-8);

}  // namespace qhk
