#include "quiverhk/stability.hpp"

#include <numeric>

#include "quiverhk/linalg.hpp"

namespace qhk {

std::vector<int> SubspaceCollection::dims() const {
  std::vector<int> d;
  for (const CMat& m : basis) d.push_back(static_cast<int>(m.cols()));
  return d;
}

namespace {

// Iterated span-and-orthonormalize until the per-vertex ranks stabilize.
// `fwd(a)` maps vectors at tail(a) to head(a), `bwd(a)` the other way; ranks
// are nondecreasing, so at most sum(dimV) rounds are needed.
SubspaceCollection closure(const Representation& x,
                           const std::function<CMat(int)>& fwd,
                           const std::function<CMat(int)>& bwd,
                           const std::vector<CMat>& start) {
  const auto& s = *x.shape;
  const int nv = s.q.num_vertices();
  SubspaceCollection col;
  col.basis.resize(nv);
  for (int i = 0; i < nv; ++i) col.basis[i] = column_span(start[i]);

  const int budget = std::accumulate(s.d.dimV.begin(), s.d.dimV.end(), 0) + 1;
  for (int round = 0; round < budget; ++round) {
    bool grew = false;
    std::vector<std::vector<CMat>> pieces(nv);
    for (int i = 0; i < nv; ++i) pieces[i].push_back(col.basis[i]);
    for (int a = 0; a < s.q.num_arrows(); ++a) {
      const int t = s.q.tail_of(a), h = s.q.head_of(a);
      if (col.basis[t].cols() > 0) pieces[h].push_back(fwd(a) * col.basis[t]);
      if (col.basis[h].cols() > 0) pieces[t].push_back(bwd(a) * col.basis[h]);
    }
    for (int i = 0; i < nv; ++i) {
      Eigen::Index total = 0;
      for (const CMat& p : pieces[i]) total += p.cols();
      CMat stacked(s.dimV(i), total);
      Eigen::Index at = 0;
      for (const CMat& p : pieces[i]) {
        stacked.middleCols(at, p.cols()) = p;
        at += p.cols();
      }
      CMat next = column_span(stacked);
      if (next.cols() > col.basis[i].cols()) grew = true;
      col.basis[i] = std::move(next);
    }
    if (!grew) break;
  }
  return col;
}

}  // namespace

SubspaceCollection stable_closure(const Representation& x) {
  return closure(
      x, [&x](int a) { return x.A[a]; }, [&x](int a) { return x.B[a]; }, x.I);
}

SubspaceCollection costable_closure(const Representation& x) {
  // A* runs head -> tail and B* tail -> head; seeds are im J_i^*.
  std::vector<CMat> start;
  for (const CMat& j : x.J) start.push_back(j.adjoint());
  return closure(
      x, [&x](int a) { return x.B[a].adjoint(); }, [&x](int a) { return x.A[a].adjoint(); },
      start);
}

bool is_stable(const Representation& x) {
  const SubspaceCollection c = stable_closure(x);
  for (int i = 0; i < x.shape->q.num_vertices(); ++i)
    if (c.basis[i].cols() < x.shape->dimV(i)) return false;
  return true;
}

bool is_costable(const Representation& x) {
  // The largest invariant collection inside ker J is the orthogonal
  // complement of the adjoint-side closure; costable means it vanishes.
  const SubspaceCollection c = costable_closure(x);
  for (int i = 0; i < x.shape->q.num_vertices(); ++i)
    if (c.basis[i].cols() < x.shape->dimV(i)) return false;
  return true;
}

bool is_regular(const Representation& x) { return is_stable(x) && is_costable(x); }

}  // namespace qhk
