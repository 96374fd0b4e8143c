#pragma once

// Small dense linear-algebra helpers shared across modules: rank and
// nullspace via SVD, orthonormalization, least squares, Hermitian matrix
// functions, polar decomposition, Kronecker products.

#include <optional>
#include <vector>

#include "quiverhk/types.hpp"

namespace qhk {

// Numerical rank with a relative singular-value threshold.
int rank_of(const CMat& m, double rel_tol = kRankTol);
int rank_of(const RMat& m, double rel_tol = kRankTol);

// Orthonormal basis of the column span. Returns an n x rank matrix.
CMat column_span(const CMat& m, double rel_tol = kRankTol);

// Orthonormal basis of the (right) nullspace, n x nullity.
CMat nullspace(const CMat& m, double rel_tol = kRankTol);
RMat nullspace(const RMat& m, double rel_tol = kRankTol);

// Minimum-norm least-squares solution of a x = b.
CVec lstsq(const CMat& a, const CVec& b, double rel_tol = kRankTol);

// sigma_max / sigma_min; infinity when singular to working precision.
double condition_number(const CMat& m);

bool is_invertible(const CMat& m, double rel_tol = 1e-12);

// exp(s) for Hermitian s, through the spectral decomposition.
CMat exp_hermitian(const CMat& s);

// Positive factor p = (m* m)^{1/2} of the polar decomposition m = u p.
CMat polar_positive(const CMat& m);
// Unitary factor u of m = u p.
CMat polar_unitary(const CMat& m);

// Haar-ish random unitary (QR of a Gaussian matrix with phase-fixed R).
class Rng;
CMat random_unitary(int n, Rng& rng);

CMat kron(const CMat& a, const CMat& b);

// Column-major vectorization and its inverse.
CVec vec(const CMat& m);
CMat unvec(const CVec& v, Eigen::Index rows, Eigen::Index cols);

}  // namespace qhk
