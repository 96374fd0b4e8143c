#pragma once

// King-style stability, costability and regularity through invariant-subspace
// closure. The smallest A,B-closed collection containing im I decides
// stability; the complement of the smallest A*,B*-closed collection
// containing im J* decides costability.

#include <vector>

#include "quiverhk/quiver.hpp"

namespace qhk {

struct SubspaceCollection {
  std::vector<CMat> basis;  // per vertex, orthonormal columns

  std::vector<int> dims() const;
};

SubspaceCollection stable_closure(const Representation& x);
SubspaceCollection costable_closure(const Representation& x);  // the adjoint-side closure

bool is_stable(const Representation& x);
bool is_costable(const Representation& x);
bool is_regular(const Representation& x);

}  // namespace qhk
