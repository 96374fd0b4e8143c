#pragma once

// Deterministic random numbers. std::normal_distribution is
// implementation-defined, so Gaussians are produced by Box-Muller from raw
// mt19937_64 output; identical seeds give identical streams on every platform.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "quiverhk/types.hpp"

namespace qhk {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  // uniform in [0, 1)
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double m = std::sqrt(-2.0 * std::log(u1));
    spare_ = m * std::sin(2.0 * std::numbers::pi * u2);
    have_spare_ = true;
    return m * std::cos(2.0 * std::numbers::pi * u2);
  }

  // standard complex Gaussian, E|z|^2 = 1
  cplx cgaussian() {
    const double s = std::numbers::sqrt2;
    return {gaussian() / s, gaussian() / s};
  }

  CMat cgaussian_matrix(Eigen::Index rows, Eigen::Index cols) {
    CMat m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
      for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = cgaussian();
    return m;
  }

 private:
  std::mt19937_64 eng_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace qhk
