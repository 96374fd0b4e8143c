#include "quiverhk/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>
#include <limits>

#include "quiverhk/rng.hpp"

namespace qhk {

namespace {

template <typename Mat>
int rank_impl(const Mat& m, double rel_tol) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Eigen::JacobiSVD<Mat> svd(m);
  const auto& s = svd.singularValues();
  const double cut = rel_tol * s(0);
  int r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > cut) ++r;
  return s(0) == 0.0 ? 0 : r;
}

}  // namespace

int rank_of(const CMat& m, double rel_tol) { return rank_impl(m, rel_tol); }
int rank_of(const RMat& m, double rel_tol) { return rank_impl(m, rel_tol); }

CMat column_span(const CMat& m, double rel_tol) {
  if (m.rows() == 0 || m.cols() == 0) return CMat(m.rows(), 0);
  Eigen::JacobiSVD<CMat> svd(m, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return CMat(m.rows(), 0);
  const double cut = rel_tol * s(0);
  int r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > cut) ++r;
  return svd.matrixU().leftCols(r);
}

CMat nullspace(const CMat& m, double rel_tol) {
  if (m.cols() == 0) return CMat(0, 0);
  if (m.rows() == 0) return CMat::Identity(m.cols(), m.cols());
  Eigen::JacobiSVD<CMat> svd(m, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double cut = (s.size() > 0 && s(0) > 0.0) ? rel_tol * s(0) : 0.0;
  int r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > cut) ++r;
  return svd.matrixV().rightCols(m.cols() - r);
}

RMat nullspace(const RMat& m, double rel_tol) {
  if (m.cols() == 0) return RMat(0, 0);
  if (m.rows() == 0) return RMat::Identity(m.cols(), m.cols());
  Eigen::JacobiSVD<RMat> svd(m, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double cut = (s.size() > 0 && s(0) > 0.0) ? rel_tol * s(0) : 0.0;
  int r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > cut) ++r;
  return svd.matrixV().rightCols(m.cols() - r);
}

CVec lstsq(const CMat& a, const CVec& b, double rel_tol) {
  if (a.cols() == 0) return CVec(0);
  Eigen::JacobiSVD<CMat> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  svd.setThreshold(rel_tol);
  return svd.solve(b);
}

double condition_number(const CMat& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  Eigen::JacobiSVD<CMat> svd(m);
  const auto& s = svd.singularValues();
  const double smin = s(s.size() - 1);
  if (smin <= 0.0 || s(0) / smin > 1.0 / std::numeric_limits<double>::epsilon())
    return std::numeric_limits<double>::infinity();
  return s(0) / smin;
}

bool is_invertible(const CMat& m, double rel_tol) {
  if (m.rows() != m.cols()) return false;
  if (m.rows() == 0) return true;  // empty block acts invertibly
  Eigen::JacobiSVD<CMat> svd(m);
  const auto& s = svd.singularValues();
  return s(0) > 0.0 && s(s.size() - 1) > rel_tol * s(0);
}

CMat exp_hermitian(const CMat& s) {
  if (s.rows() == 0) return s;
  Eigen::SelfAdjointEigenSolver<CMat> es(s);
  const RVec lam = es.eigenvalues();
  CVec e(lam.size());
  for (Eigen::Index i = 0; i < lam.size(); ++i) e(i) = std::exp(lam(i));
  return es.eigenvectors() * e.asDiagonal() * es.eigenvectors().adjoint();
}

CMat polar_positive(const CMat& m) {
  if (m.rows() == 0) return m;
  Eigen::JacobiSVD<CMat> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixV() * svd.singularValues().asDiagonal().toDenseMatrix().cast<cplx>() *
         svd.matrixV().adjoint();
}

CMat polar_unitary(const CMat& m) {
  if (m.rows() == 0) return m;
  Eigen::JacobiSVD<CMat> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

CMat random_unitary(int n, Rng& rng) {
  if (n == 0) return CMat(0, 0);
  const CMat g = rng.cgaussian_matrix(n, n);
  Eigen::HouseholderQR<CMat> qr(g);
  CMat q = qr.householderQ();
  const CMat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    const cplx d = r(j, j);
    if (std::abs(d) > 0) q.col(j) *= d / std::abs(d);
  }
  return q;
}

CMat kron(const CMat& a, const CMat& b) {
  CMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

CVec vec(const CMat& m) {
  CVec v(m.size());
  Eigen::Index k = 0;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) v(k++) = m(i, j);
  return v;
}

CMat unvec(const CVec& v, Eigen::Index rows, Eigen::Index cols) {
  CMat m(rows, cols);
  Eigen::Index k = 0;
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = v(k++);
  return m;
}

}  // namespace qhk
