#pragma once

#include <doctest.h>

#include "quiverhk/quiver.hpp"

namespace qhk::testing {

inline CMat scalar(double re, double im = 0.0) {
  CMat m(1, 1);
  m(0, 0) = cplx(re, im);
  return m;
}

// Jordan n = r = 1, X0 = (0, 0, 1, 0): the charge-one ideal-sheaf datum.
inline Representation x0() {
  return jordan_rep(scalar(0), scalar(0), scalar(1), scalar(0));
}

// Three-vertex test quiver: a 3-cycle plus a loop at the first vertex.
inline RepShapePtr three_vertex_shape() {
  Quiver q = Quiver::make({"u", "v", "w"}, {{"loop", "u", "u"},
                                            {"uv", "u", "v"},
                                            {"vw", "v", "w"},
                                            {"wu", "w", "u"}});
  return make_shape(std::move(q), DimensionData{{2, 3, 2}, {1, 2, 1}});
}

}  // namespace qhk::testing
