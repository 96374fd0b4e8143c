#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace qhk {

using cplx = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;

// Default tolerance for structural predicates (unitarity, involutivity,
// level membership). Overridable per call where it matters.
inline constexpr double kStructTol = 1e-10;

// Relative singular-value threshold for rank decisions.
inline constexpr double kRankTol = 1e-8;

inline constexpr cplx kImag{0.0, 1.0};

struct ShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace qhk
