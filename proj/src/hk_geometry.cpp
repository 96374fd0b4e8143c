#include "quiverhk/hk_geometry.hpp"

#include <cmath>

namespace qhk {

namespace {

void require_same_shape(const Representation& x, const Representation& y) {
  if (!x.shape->same_as(*y.shape)) throw ShapeError("representations live on different shapes");
}

}  // namespace

double metric(const Representation& x, const Representation& y) {
  require_same_shape(x, y);
  double s = 0;
  for (size_t k = 0; k < x.A.size(); ++k) s += (x.A[k].array() * y.A[k].array().conjugate()).sum().real();
  for (size_t k = 0; k < x.B.size(); ++k) s += (x.B[k].array() * y.B[k].array().conjugate()).sum().real();
  for (size_t k = 0; k < x.I.size(); ++k) s += (x.I[k].array() * y.I[k].array().conjugate()).sum().real();
  for (size_t k = 0; k < x.J.size(); ++k) s += (x.J[k].array() * y.J[k].array().conjugate()).sum().real();
  return s;
}

Representation gamma(int k, const Representation& x) {
  switch (k) {
    case 1:
      return x * kImag;
    case 2: {
      Representation y = x;
      for (size_t a = 0; a < x.A.size(); ++a) {
        y.A[a] = -x.B[a].adjoint();
        y.B[a] = x.A[a].adjoint();
      }
      for (size_t i = 0; i < x.I.size(); ++i) {
        y.I[i] = -x.J[i].adjoint();
        y.J[i] = x.I[i].adjoint();
      }
      return y;
    }
    case 3:
      return gamma(2, x) * kImag;  // Gamma_3 = Gamma_1 Gamma_2
    default:
      throw PreconditionError("gamma index must be 1, 2 or 3");
  }
}

double omega(int k, const Representation& x, const Representation& y) {
  return metric(x, gamma(k, y));
}

MomentValues moment_maps(const Representation& x) {
  const auto& s = *x.shape;
  const int nv = s.q.num_vertices();
  MomentValues m;
  std::vector<CMat> commAB(nv), commAsBs(nv), commAAs(nv), commBBs(nv);
  for (int i = 0; i < nv; ++i) {
    const int n = s.dimV(i);
    commAB[i] = commAsBs[i] = commAAs[i] = commBBs[i] = CMat::Zero(n, n);
  }
  // Per-vertex products: a sum A_a B_a sits at head(a), a sum B_a A_a at
  // tail(a); adjoints swap the roles.
  for (int a = 0; a < s.q.num_arrows(); ++a) {
    const int t = s.q.tail_of(a), h = s.q.head_of(a);
    commAB[h] += x.A[a] * x.B[a];
    commAB[t] -= x.B[a] * x.A[a];
    commAsBs[t] += x.A[a].adjoint() * x.B[a].adjoint();
    commAsBs[h] -= x.B[a].adjoint() * x.A[a].adjoint();
    commAAs[h] += x.A[a] * x.A[a].adjoint();
    commAAs[t] -= x.A[a].adjoint() * x.A[a];
    commBBs[t] += x.B[a] * x.B[a].adjoint();
    commBBs[h] -= x.B[a].adjoint() * x.B[a];
  }
  m.mu1.resize(nv);
  m.mu2.resize(nv);
  m.mu3.resize(nv);
  m.muC.resize(nv);
  for (int i = 0; i < nv; ++i) {
    const CMat ij = x.I[i] * x.J[i];
    const CMat jsis = x.J[i].adjoint() * x.I[i].adjoint();
    const CMat iis = x.I[i] * x.I[i].adjoint();
    const CMat jsj = x.J[i].adjoint() * x.J[i];
    m.mu1[i] = -0.5 * (commAB[i] + commAsBs[i] + ij - jsis);
    m.mu2[i] = 0.5 * kImag * (commAB[i] - commAsBs[i] + ij + jsis);
    m.mu3[i] = 0.5 * kImag * (commAAs[i] + commBBs[i] + iis - jsj);
    m.muC[i] = commAB[i] + ij;
  }
  return m;
}

double mu3_level_residual(const MomentValues& m, const LevelSpec& level) {
  double s = 0;
  for (const CMat& b : m.mu3) {
    const CMat target = kImag * level.c * CMat::Identity(b.rows(), b.cols());
    s += (b - target).squaredNorm();
  }
  return std::sqrt(s);
}

double muC_norm(const MomentValues& m) {
  double s = 0;
  for (const CMat& b : m.muC) s += b.squaredNorm();
  return std::sqrt(s);
}

int real_dimension(const RepShape& shape) {
  int n = 0;
  for (int a = 0; a < shape.q.num_arrows(); ++a)
    n += 4 * shape.dimV(shape.q.tail_of(a)) * shape.dimV(shape.q.head_of(a));
  for (int i = 0; i < shape.q.num_vertices(); ++i) n += 4 * shape.dimV(i) * shape.dimW(i);
  return n;
}

namespace {

void push_block(RVec& v, int& k, const CMat& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      v(k++) = m(i, j).real();
      v(k++) = m(i, j).imag();
    }
}

void pop_block(const RVec& v, int& k, CMat& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      m(i, j) = cplx(v(k), v(k + 1));
      k += 2;
    }
}

}  // namespace

RVec flatten(const Representation& x) {
  RVec v(real_dimension(*x.shape));
  int k = 0;
  for (const CMat& m : x.A) push_block(v, k, m);
  for (const CMat& m : x.B) push_block(v, k, m);
  for (const CMat& m : x.I) push_block(v, k, m);
  for (const CMat& m : x.J) push_block(v, k, m);
  return v;
}

Representation unflatten(const RepShapePtr& shape, const RVec& v) {
  if (v.size() != real_dimension(*shape)) throw ShapeError("flattened vector has wrong length");
  Representation x = Representation::zero(shape);
  int k = 0;
  for (CMat& m : x.A) pop_block(v, k, m);
  for (CMat& m : x.B) pop_block(v, k, m);
  for (CMat& m : x.I) pop_block(v, k, m);
  for (CMat& m : x.J) pop_block(v, k, m);
  return x;
}

}  // namespace qhk
