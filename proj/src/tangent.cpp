#include "quiverhk/tangent.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "quiverhk/linalg.hpp"
#include "quiverhk/orbits.hpp"
#include "quiverhk/stability.hpp"

namespace qhk {

namespace {

// Real basis of the anti-Hermitian matrices u(n): i E_kk, (E_jk - E_kj),
// i (E_jk + E_kj).
std::vector<CMat> antihermitian_basis(int n) {
  std::vector<CMat> out;
  for (int k = 0; k < n; ++k) {
    CMat m = CMat::Zero(n, n);
    m(k, k) = kImag;
    out.push_back(m);
  }
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) {
      CMat m = CMat::Zero(n, n);
      m(j, k) = 1;
      m(k, j) = -1;
      out.push_back(m);
      CMat mi = CMat::Zero(n, n);
      mi(j, k) = kImag;
      mi(k, j) = kImag;
      out.push_back(mi);
    }
  return out;
}

Representation infinitesimal_action(const Representation& x, const std::vector<CMat>& xi) {
  const auto& s = *x.shape;
  Representation t = Representation::zero(x.shape);
  for (int a = 0; a < s.q.num_arrows(); ++a) {
    const int tl = s.q.tail_of(a), hd = s.q.head_of(a);
    t.A[a] = xi[hd] * x.A[a] - x.A[a] * xi[tl];
    t.B[a] = xi[tl] * x.B[a] - x.B[a] * xi[hd];
  }
  for (int i = 0; i < s.q.num_vertices(); ++i) {
    t.I[i] = xi[i] * x.I[i];
    t.J[i] = -x.J[i] * xi[i];
  }
  return t;
}

// Orthonormalize the columns of a real matrix, dropping rank deficiency.
RMat orthonormal_columns(const RMat& m, double rel_tol = kRankTol) {
  if (m.cols() == 0 || m.rows() == 0) return RMat(m.rows(), 0);
  Eigen::JacobiSVD<RMat> svd(m, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return RMat(m.rows(), 0);
  const double cut = rel_tol * s(0);
  int r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > cut) ++r;
  return svd.matrixU().leftCols(r);
}

// Real coordinates of a per-vertex anti-Hermitian collection.
RVec flatten_antihermitian(const std::vector<CMat>& blocks) {
  int total = 0;
  for (const CMat& b : blocks) total += static_cast<int>(b.rows() * b.rows());
  RVec v(total);
  int at = 0;
  for (const CMat& b : blocks) {
    const int n = static_cast<int>(b.rows());
    for (int k = 0; k < n; ++k) v(at++) = b(k, k).imag();
    for (int j = 0; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        v(at++) = b(j, k).real();
        v(at++) = b(j, k).imag();
      }
  }
  return v;
}

}  // namespace

RMat orbit_directions(const Representation& x) {
  const auto& s = *x.shape;
  const int D = real_dimension(s);
  std::vector<RVec> cols;
  for (int i = 0; i < s.q.num_vertices(); ++i) {
    for (const CMat& gen : antihermitian_basis(s.dimV(i))) {
      std::vector<CMat> xi;
      for (int j = 0; j < s.q.num_vertices(); ++j)
        xi.push_back(j == i ? gen : CMat::Zero(s.dimV(j), s.dimV(j)));
      cols.push_back(flatten(infinitesimal_action(x, xi)));
    }
  }
  RMat m(D, static_cast<Eigen::Index>(cols.size()));
  for (size_t c = 0; c < cols.size(); ++c) m.col(static_cast<Eigen::Index>(c)) = cols[c];
  return orthonormal_columns(m);
}

MomentValues moment_differential(const Representation& x, const Representation& t) {
  // mu is homogeneous quadratic, so the symmetric difference is exact.
  const MomentValues plus = moment_maps(x + t);
  const MomentValues minus = moment_maps(x - t);
  MomentValues d;
  const size_t nv = plus.mu1.size();
  d.mu1.resize(nv);
  d.mu2.resize(nv);
  d.mu3.resize(nv);
  d.muC.resize(nv);
  for (size_t i = 0; i < nv; ++i) {
    d.mu1[i] = 0.5 * (plus.mu1[i] - minus.mu1[i]);
    d.mu2[i] = 0.5 * (plus.mu2[i] - minus.mu2[i]);
    d.mu3[i] = 0.5 * (plus.mu3[i] - minus.mu3[i]);
    d.muC[i] = 0.5 * (plus.muC[i] - minus.muC[i]);
  }
  return d;
}

TangentFrame quotient_tangent(const Representation& x, const LevelSpec& level) {
  if (!is_regular(x)) throw PreconditionError("quotient_tangent requires a regular point");
  const MomentValues m = moment_maps(x);
  if (muC_norm(m) > 1e-8) throw PreconditionError("point does not satisfy muC = 0");
  if (mu3_level_residual(m, level) > 1e-6)
    throw PreconditionError("point is not on the requested mu3 level; flow first");

  const auto& s = *x.shape;
  const int D = real_dimension(s);
  int mu_dim = 0;
  for (int i = 0; i < s.q.num_vertices(); ++i) mu_dim += s.dimV(i) * s.dimV(i);

  RMat dmu(3 * mu_dim, D);
  for (int c = 0; c < D; ++c) {
    RVec e = RVec::Zero(D);
    e(c) = 1.0;
    const MomentValues diff = moment_differential(x, unflatten(x.shape, e));
    dmu.block(0, c, mu_dim, 1) = flatten_antihermitian(diff.mu1);
    dmu.block(mu_dim, c, mu_dim, 1) = flatten_antihermitian(diff.mu2);
    dmu.block(2 * mu_dim, c, mu_dim, 1) = flatten_antihermitian(diff.mu3);
  }

  const RMat level_kernel = nullspace(dmu);
  const RMat orbit = orbit_directions(x);
  RMat horizontal = level_kernel;
  if (orbit.cols() > 0)
    horizontal -= orbit * (orbit.transpose() * level_kernel);

  TangentFrame frame;
  frame.ambient_dim = D;
  frame.horizontal_basis = orthonormal_columns(horizontal);
  frame.quotient_dim = static_cast<int>(frame.horizontal_basis.cols());
  return frame;
}

FixedSubspace fixed_subspace_dim(const InvolutionSpec& spec, const Representation& x,
                                 const TangentFrame& frame) {
  if (!is_exact_fixed_point(spec, x))
    throw PreconditionError(
        "fixed_subspace_dim requires an exact fixed point; move_to_exact_fixed first");

  const RMat& H = frame.horizontal_basis;
  RMat image(H.rows(), H.cols());
  for (Eigen::Index c = 0; c < H.cols(); ++c)
    image.col(c) = flatten(apply(spec, unflatten(x.shape, RVec(H.col(c)))));

  // Matrix of the involution compressed to the horizontal frame; it is an
  // eta-orthogonal involution there, so its symmetrization has +-1 spectrum.
  RMat T = H.transpose() * image;
  if (T.cols() > 0 && (T * T - RMat::Identity(T.rows(), T.cols())).norm() >
                          1e-6 * std::max<double>(1, T.cols()))
    throw PreconditionError("involution does not preserve the horizontal frame");
  T = 0.5 * (T + RMat(T.transpose()));
  Eigen::SelfAdjointEigenSolver<RMat> es(T);
  const RVec lam = es.eigenvalues();

  FixedSubspace out;
  out.type_tag = brane_type(spec, x.shape);
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < lam.size(); ++i)
    if ((1.0 + lam(i)) / 2.0 > 0.5) keep.push_back(i);
  out.real_dim = static_cast<int>(keep.size());
  out.basis = RMat(H.rows(), out.real_dim);
  for (size_t k = 0; k < keep.size(); ++k)
    out.basis.col(static_cast<Eigen::Index>(k)) = H * es.eigenvectors().col(keep[k]);
  return out;
}

double omega_max_on_subspace(int k, const RepShapePtr& shape, const RMat& basis) {
  double worst = 0.0;
  std::vector<Representation> reps;
  for (Eigen::Index c = 0; c < basis.cols(); ++c)
    reps.push_back(unflatten(shape, RVec(basis.col(c))));
  for (size_t i = 0; i < reps.size(); ++i)
    for (size_t j = i; j < reps.size(); ++j)
      worst = std::max(worst, std::abs(omega(k, reps[i], reps[j])));
  return worst;
}

double gamma_invariance_residual(int k, const RepShapePtr& shape, const RMat& basis) {
  if (basis.cols() == 0) return 0.0;
  RMat image(basis.rows(), basis.cols());
  for (Eigen::Index c = 0; c < basis.cols(); ++c)
    image.col(c) = flatten(gamma(k, unflatten(shape, RVec(basis.col(c)))));
  const RMat proj = basis * (basis.transpose() * image);
  return (image - proj).norm() / std::max(1.0, image.norm());
}

}  // namespace qhk
