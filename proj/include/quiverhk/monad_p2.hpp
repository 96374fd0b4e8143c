#pragma once

// Jordan-quiver specialization: the ADHM equation, the two-step monad on the
// projective plane, fiberwise evaluation and framing at the line at infinity
// {x0 = 0}, the unitary involutions of the plane, and the commuting-square
// checks tying plane involutions to representation involutions.

#include <optional>
#include <vector>

#include "quiverhk/involutions.hpp"
#include "quiverhk/quiver.hpp"

namespace qhk {

struct P2Point {
  cplx x0, x1, x2;

  double norm() const;
  P2Point normalized() const;
};

// Projective distance; zero iff the points agree up to scale.
double projective_distance(const P2Point& p, const P2Point& q);

enum class P2InvolutionKind { sigma1, sigma2, tau0, tau1, tau2 };

struct P2Involution {
  P2InvolutionKind kind;
  double t = 1.0;  // sigma2 / tau2 parameters, t^2 + |z|^2 = 1
  cplx z = 0.0;

  static P2Involution sigma1();
  static P2Involution sigma2(double t, cplx z);
  static P2Involution tau0();
  static P2Involution tau1();
  static P2Involution tau2(double t, cplx z);

  bool antiholomorphic() const;
  P2Point operator()(const P2Point& p) const;
};

struct MonadEvaluation {
  CMat alpha;  // (2n+r) x n
  CMat beta;   // n x (2n+r)
  P2Point point;
};

// [A,B] + IJ for the Jordan quiver.
CMat adhm_residual(const Representation& x);

MonadEvaluation monad_at(const Representation& x, const P2Point& p);

// dim ker beta(p) - rank alpha(p); requires the ADHM equation to hold.
int fiber_dim(const Representation& x, const P2Point& p);

// Condition number of the W-block identification of ker beta / im alpha at a
// point of the line at infinity; finite iff the framing map exists there.
double framing_check(const Representation& x, const P2Point& p);

// The representation-side involution word matching the pullback by a plane
// involution (untwisted letter part; the caller supplies the twist).
InvolutionSpec pullback_spec(const P2Involution& inv, const RepShapePtr& shape);

// Max normalized residual of the alpha/beta commuting squares over sampled
// points. Zero (to rounding) for every X when the spec's letters match the
// involution and the twist is attached.
double verify_monad_square(const InvolutionSpec& spec, const P2Involution& inv,
                           const Representation& x, int sample_count, std::uint64_t seed);

// Deterministic point sample: seeded uniform points on the unit sphere of C^3
// plus the six coordinate points and the two marked points of the line at
// infinity.
std::vector<P2Point> sample_points(int count, std::uint64_t seed,
                                   bool include_special = true);

// Scan kernels (OpenMP-parallel with serial references kept for testing).
std::vector<int> scan_beta_ranks(const Representation& x, const std::vector<P2Point>& pts);
std::vector<int> scan_beta_ranks_serial(const Representation& x,
                                        const std::vector<P2Point>& pts);
std::vector<int> scan_fiber_dims(const Representation& x, const std::vector<P2Point>& pts);
std::vector<int> scan_fiber_dims_serial(const Representation& x,
                                        const std::vector<P2Point>& pts);

// True iff beta(p) has full row rank at every sampled point.
bool beta_surjective_on_sample(const Representation& x, const std::vector<P2Point>& pts);

}  // namespace qhk
