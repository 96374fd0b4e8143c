#include "quiverhk/orbits.hpp"

#include <cmath>

#include "quiverhk/linalg.hpp"
#include "quiverhk/rng.hpp"
#include "quiverhk/stability.hpp"

namespace qhk {

namespace {

struct VecLayout {
  std::vector<int> offset;  // complex offset of vec(k_i)
  int total = 0;

  explicit VecLayout(const RepShape& s) {
    offset.resize(s.q.num_vertices());
    for (int i = 0; i < s.q.num_vertices(); ++i) {
      offset[i] = total;
      total += s.dimV(i) * s.dimV(i);
    }
  }
};

// Rows of the homogeneous conjugacy system k_head A_a = Y_A_a k_tail,
// k_tail B_a = Y_B_a k_head, in vectorized unknowns.
CMat conjugacy_system(const Representation& x, const Representation& y,
                      const VecLayout& lay) {
  const auto& s = *x.shape;
  int rows = 0;
  for (int a = 0; a < s.q.num_arrows(); ++a) {
    rows += s.dimV(s.q.head_of(a)) * s.dimV(s.q.tail_of(a)) * 2;
  }
  CMat L = CMat::Zero(rows, lay.total);
  int at = 0;
  for (int a = 0; a < s.q.num_arrows(); ++a) {
    const int t = s.q.tail_of(a), h = s.q.head_of(a);
    const int nt = s.dimV(t), nh = s.dimV(h);
    // k_h A_a - Y_A k_t = 0
    {
      const CMat lhs = kron(x.A[a].transpose(), CMat::Identity(nh, nh));
      const CMat rhs = kron(CMat::Identity(nt, nt), y.A[a]);
      L.block(at, lay.offset[h], nh * nt, nh * nh) += lhs;
      L.block(at, lay.offset[t], nh * nt, nt * nt) -= rhs;
      at += nh * nt;
    }
    // k_t B_a - Y_B k_h = 0
    {
      const CMat lhs = kron(x.B[a].transpose(), CMat::Identity(nt, nt));
      const CMat rhs = kron(CMat::Identity(nh, nh), y.B[a]);
      L.block(at, lay.offset[t], nt * nh, nt * nt) += lhs;
      L.block(at, lay.offset[h], nt * nh, nh * nh) -= rhs;
      at += nt * nh;
    }
  }
  return L;
}

std::vector<CMat> split_blocks(const CVec& v, const RepShape& s, const VecLayout& lay) {
  std::vector<CMat> blocks;
  for (int i = 0; i < s.q.num_vertices(); ++i) {
    const int n = s.dimV(i);
    blocks.push_back(unvec(v.segment(lay.offset[i], n * n), n, n));
  }
  return blocks;
}

}  // namespace

IntertwinerBasis intertwiner_space(const Representation& x, const Representation& y) {
  if (!x.shape->same_as(*y.shape)) throw ShapeError("mismatched dimension data");
  const VecLayout lay(*x.shape);
  const CMat L = conjugacy_system(x, y, lay);
  const CMat null = nullspace(L);
  IntertwinerBasis out;
  out.dimension = static_cast<int>(null.cols());
  for (int c = 0; c < null.cols(); ++c)
    out.basis.push_back(split_blocks(null.col(c), *x.shape, lay));
  return out;
}

std::optional<GaugeElement> orbit_witness(const Representation& x, const Representation& y,
                                          double rel_tol) {
  if (!x.shape->same_as(*y.shape)) return std::nullopt;
  const auto& s = *x.shape;
  const VecLayout lay(s);
  const CMat Lc = conjugacy_system(x, y, lay);

  int frows = 0;
  for (int i = 0; i < s.q.num_vertices(); ++i) frows += 2 * s.dimV(i) * s.dimW(i);
  CMat Lf = CMat::Zero(frows, lay.total);
  CVec rhs_f = CVec::Zero(frows);
  int at = 0;
  for (int i = 0; i < s.q.num_vertices(); ++i) {
    const int n = s.dimV(i), r = s.dimW(i);
    // k_i I_i = Y_I_i
    Lf.block(at, lay.offset[i], n * r, n * n) = kron(x.I[i].transpose(), CMat::Identity(n, n));
    rhs_f.segment(at, n * r) = vec(y.I[i]);
    at += n * r;
    // Y_J_i k_i = J_i
    Lf.block(at, lay.offset[i], r * n, n * n) = kron(CMat::Identity(n, n), y.J[i]);
    rhs_f.segment(at, r * n) = vec(x.J[i]);
    at += r * n;
  }

  CMat L(Lc.rows() + Lf.rows(), lay.total);
  L << Lc, Lf;
  CVec rhs = CVec::Zero(L.rows());
  rhs.tail(frows) = rhs_f;

  const double scale = std::max({1.0, x.norm(), y.norm()});
  const CVec k0 = lstsq(L, rhs);

  auto accept = [&](const CVec& kv) -> std::optional<GaugeElement> {
    if ((L * kv - rhs).norm() > rel_tol * scale) return std::nullopt;
    std::vector<CMat> blocks = split_blocks(kv, s, lay);
    for (const CMat& b : blocks)
      if (!is_invertible(b, 1e-10)) return std::nullopt;
    // exactness of the action, not just of the linear system
    GaugeElement g = GaugeElement::from_blocks(blocks);
    if (distance(act(g, x), y) > rel_tol * scale * 10) return std::nullopt;
    return g;
  };

  if (auto g = accept(k0)) return g;

  // The min-norm solution may be singular while invertible solutions exist in
  // its affine family; probe a few combinations with the nullspace.
  const CMat null = nullspace(L);
  if (null.cols() > 0) {
    Rng rng(12345);
    for (int trial = 0; trial < 8; ++trial) {
      CVec kv = k0;
      for (int c = 0; c < null.cols(); ++c) kv += (0.5 + rng.uniform()) * scale * null.col(c);
      if (auto g = accept(kv)) return g;
    }
  }
  return std::nullopt;
}

std::optional<GaugeElement> is_moduli_fixed(const InvolutionSpec& spec,
                                            const Representation& x) {
  if (!is_stable(x)) throw PreconditionError("is_moduli_fixed requires a stable point");
  return orbit_witness(x, apply(spec, x));
}

bool is_exact_fixed_point(const InvolutionSpec& spec, const Representation& x, double tol) {
  return distance(apply(spec, x), x) <= tol * std::max(1.0, x.norm());
}

std::optional<Representation> move_to_exact_fixed(const InvolutionSpec& spec,
                                                  const Representation& x, double tol) {
  if (is_exact_fixed_point(spec, x, tol)) return x;
  const auto witness = is_moduli_fixed(spec, x);
  if (!witness) return std::nullopt;

  const auto& s = *x.shape;
  int parity = 0;
  for (const WordLetter& w : spec.word)
    if (w.kind == Letter::b || w.kind == Letter::e) ++parity;
  const bool conj_twist = (parity % 2) == 1;

  // A gauge move m makes m.x exactly fixed iff m = g sigma(m) g^-1 k per
  // vertex, with sigma = conj for words of odd b/e parity and the identity
  // otherwise. That is a (real-)linear fixed-point equation in m.
  std::vector<CMat> mblocks;
  for (int i = 0; i < s.q.num_vertices(); ++i) {
    const int n = s.dimV(i);
    const CMat& g = spec.g.g[i];
    const CMat gk = g.rows() == 0 ? g : CMat(g.inverse() * witness->g[i]);
    CMat sol;
    if (!conj_twist) {
      const CMat T = kron(gk.transpose(), g);
      const CMat null = nullspace(CMat(T - CMat::Identity(T.rows(), T.cols())), 1e-8);
      if (null.cols() == 0) return std::nullopt;
      sol = unvec(null.col(0), n, n);
    } else {
      // real-linearize m -> g conj(m) (g^-1 k)
      const int N = n * n;
      RMat T(2 * N, 2 * N);
      for (int part = 0; part < 2; ++part)
        for (int idx = 0; idx < N; ++idx) {
          CVec basis = CVec::Zero(N);
          basis(idx) = part == 0 ? cplx(1, 0) : cplx(0, 1);
          const CMat img = g * unvec(basis, n, n).conjugate() * gk;
          const CVec iv = vec(img);
          for (int rdx = 0; rdx < N; ++rdx) {
            T(rdx, part * N + idx) = iv(rdx).real();
            T(N + rdx, part * N + idx) = iv(rdx).imag();
          }
        }
      const RMat null = nullspace(RMat(T - RMat::Identity(2 * N, 2 * N)), 1e-8);
      if (null.cols() == 0) return std::nullopt;
      CVec mv(N);
      for (int idx = 0; idx < N; ++idx) mv(idx) = cplx(null(idx, 0), null(N + idx, 0));
      sol = unvec(mv, n, n);
    }
    mblocks.push_back(sol);
  }

  auto try_move = [&](const std::vector<CMat>& blocks) -> std::optional<Representation> {
    for (const CMat& b : blocks)
      if (!is_invertible(b, 1e-8)) return std::nullopt;
    const Representation moved = act(GaugeElement::from_blocks(blocks), x);
    if (is_exact_fixed_point(spec, moved, tol)) return moved;
    return std::nullopt;
  };

  // prefer the unitary polar factor: it preserves moment-map levels
  std::vector<CMat> unitary;
  for (const CMat& b : mblocks) unitary.push_back(polar_unitary(b));
  if (auto moved = try_move(unitary)) return moved;
  return try_move(mblocks);
}

}  // namespace qhk
