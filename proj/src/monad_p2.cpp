#include "quiverhk/monad_p2.hpp"

#include <cmath>

#include "quiverhk/linalg.hpp"
#include "quiverhk/parallel.hpp"
#include "quiverhk/rng.hpp"

namespace qhk {

double P2Point::norm() const {
  return std::sqrt(std::norm(x0) + std::norm(x1) + std::norm(x2));
}

P2Point P2Point::normalized() const {
  const double n = norm();
  if (n == 0) throw PreconditionError("zero point is not projective");
  return {x0 / n, x1 / n, x2 / n};
}

double projective_distance(const P2Point& p, const P2Point& q) {
  // sine of the angle, computed as an orthogonal residual: stable near zero
  const P2Point a = p.normalized(), b = q.normalized();
  const cplx ip = std::conj(b.x0) * a.x0 + std::conj(b.x1) * a.x1 + std::conj(b.x2) * a.x2;
  const P2Point r{a.x0 - ip * b.x0, a.x1 - ip * b.x1, a.x2 - ip * b.x2};
  return r.norm();
}

P2Involution P2Involution::sigma1() { return {P2InvolutionKind::sigma1}; }
P2Involution P2Involution::sigma2(double t, cplx z) {
  if (std::abs(t * t + std::norm(z) - 1.0) > 1e-12)
    throw PreconditionError("sigma2 needs t^2 + |z|^2 = 1");
  return {P2InvolutionKind::sigma2, t, z};
}
P2Involution P2Involution::tau0() { return {P2InvolutionKind::tau0}; }
P2Involution P2Involution::tau1() { return {P2InvolutionKind::tau1}; }
P2Involution P2Involution::tau2(double t, cplx z) {
  if (std::abs(t * t + std::norm(z) - 1.0) > 1e-12)
    throw PreconditionError("tau2 needs t^2 + |z|^2 = 1");
  // the two factors commute exactly when z is real, and only then is the
  // composite involutive
  if (std::abs(z.imag()) > 1e-12)
    throw PreconditionError("tau2 needs a real mixing parameter z");
  return {P2InvolutionKind::tau2, t, z};
}

bool P2Involution::antiholomorphic() const {
  return kind == P2InvolutionKind::tau0 || kind == P2InvolutionKind::tau1 ||
         kind == P2InvolutionKind::tau2;
}

P2Point P2Involution::operator()(const P2Point& p) const {
  switch (kind) {
    case P2InvolutionKind::sigma1:
      return {-p.x0, p.x1, p.x2};
    case P2InvolutionKind::sigma2:
      return {p.x0, t * p.x1 + z * p.x2, std::conj(z) * p.x1 - t * p.x2};
    case P2InvolutionKind::tau0:
      return {std::conj(p.x0), std::conj(p.x1), std::conj(p.x2)};
    case P2InvolutionKind::tau1:
      return {-std::conj(p.x0), std::conj(p.x1), std::conj(p.x2)};
    case P2InvolutionKind::tau2:
      return {std::conj(p.x0), t * std::conj(p.x1) + z * std::conj(p.x2),
              std::conj(z) * std::conj(p.x1) - t * std::conj(p.x2)};
  }
  throw PreconditionError("unknown plane involution");
}

namespace {

void require_jordan(const Representation& x) {
  const Quiver& q = x.shape->q;
  if (q.num_vertices() != 1 || q.num_arrows() != 1 || !q.is_loop(0))
    throw PreconditionError("operation is specific to the Jordan quiver");
}

}  // namespace

CMat adhm_residual(const Representation& x) {
  require_jordan(x);
  return x.A[0] * x.B[0] - x.B[0] * x.A[0] + x.I[0] * x.J[0];
}

MonadEvaluation monad_at(const Representation& x, const P2Point& p) {
  require_jordan(x);
  if (p.norm() == 0) throw PreconditionError("zero point");
  const int n = x.shape->dimV(0), r = x.shape->dimW(0);
  const CMat id = CMat::Identity(n, n);
  MonadEvaluation ev;
  ev.point = p;
  ev.alpha = CMat(2 * n + r, n);
  ev.alpha.topRows(n) = p.x0 * x.A[0] - p.x1 * id;
  ev.alpha.middleRows(n, n) = p.x0 * x.B[0] - p.x2 * id;
  ev.alpha.bottomRows(r) = p.x0 * x.J[0];
  ev.beta = CMat(n, 2 * n + r);
  ev.beta.leftCols(n) = -p.x0 * x.B[0] + p.x2 * id;
  ev.beta.middleCols(n, n) = p.x0 * x.A[0] - p.x1 * id;
  ev.beta.rightCols(r) = p.x0 * x.I[0];
  return ev;
}

int fiber_dim(const Representation& x, const P2Point& p) {
  const double scale = std::max(1.0, x.norm() * x.norm());
  if (adhm_residual(x).norm() > 1e-8 * scale)
    throw PreconditionError("fiber_dim requires the ADHM equation");
  const MonadEvaluation ev = monad_at(x, p.normalized());
  const int n = x.shape->dimV(0), r = x.shape->dimW(0);
  const int ker_beta = 2 * n + r - rank_of(ev.beta);
  return ker_beta - rank_of(ev.alpha);
}

double framing_check(const Representation& x, const P2Point& p) {
  const P2Point q = p.normalized();
  if (std::abs(q.x0) > 1e-12) throw PreconditionError("point is not on the line x0 = 0");
  const MonadEvaluation ev = monad_at(x, q);
  const int r = x.shape->dimW(0);
  const CMat ker = nullspace(ev.beta);
  const CMat im = column_span(ev.alpha);
  CMat rem = ker;
  if (im.cols() > 0) rem -= im * (im.adjoint() * ker);
  const CMat basis = column_span(rem);
  if (basis.cols() != r) return std::numeric_limits<double>::infinity();
  const CMat wblock = basis.bottomRows(r);
  return condition_number(wblock);
}

InvolutionSpec pullback_spec(const P2Involution& inv, const RepShapePtr& shape) {
  InvolutionSpec spec;
  spec.g = GaugeElement::identity(shape);
  spec.h = FrameElement::identity(shape);
  const Quiver& q = shape->q;
  switch (inv.kind) {
    case P2InvolutionKind::sigma1:
      spec.word = {{Letter::c, GammaAssignment::all_minus(q), std::nullopt}};
      break;
    case P2InvolutionKind::sigma2:
      spec.word = {{Letter::d, std::nullopt, DeltaAssignment::diagonal(q, inv.t, inv.z)}};
      break;
    case P2InvolutionKind::tau0:
      spec.word = {{Letter::e, std::nullopt, std::nullopt}};
      break;
    case P2InvolutionKind::tau1:
      spec.word = {{Letter::e, std::nullopt, std::nullopt},
                   {Letter::c, GammaAssignment::all_minus(q), std::nullopt}};
      break;
    case P2InvolutionKind::tau2:
      spec.word = {{Letter::e, std::nullopt, std::nullopt},
                   {Letter::d, std::nullopt, DeltaAssignment::diagonal(q, inv.t, inv.z)}};
      break;
  }
  return spec;
}

namespace {

bool letters_match(const InvolutionSpec& spec, const P2Involution& inv) {
  std::vector<Letter> want;
  switch (inv.kind) {
    case P2InvolutionKind::sigma1: want = {Letter::c}; break;
    case P2InvolutionKind::sigma2: want = {Letter::d}; break;
    case P2InvolutionKind::tau0: want = {Letter::e}; break;
    case P2InvolutionKind::tau1: want = {Letter::e, Letter::c}; break;
    case P2InvolutionKind::tau2: want = {Letter::e, Letter::d}; break;
  }
  if (spec.word.size() != want.size()) return false;
  for (size_t i = 0; i < spec.word.size(); ++i) {
    if (spec.word[i].kind != want[i]) return false;
    if (spec.word[i].kind == Letter::d) {
      const DeltaParam& p = spec.word[i].delta->arrow_param[0];
      if (std::abs(p.t - inv.t) > 1e-12 || std::abs(p.z - inv.z) > 1e-12) return false;
    }
  }
  return true;
}

}  // namespace

double verify_monad_square(const InvolutionSpec& spec, const P2Involution& inv,
                           const Representation& x, int sample_count, std::uint64_t seed) {
  require_jordan(x);
  if (!letters_match(spec, inv))
    throw PreconditionError("involution spec does not match the plane involution");

  const int n = x.shape->dimV(0), r = x.shape->dimW(0);
  const CMat& g = spec.g.g[0];
  const CMat hinv = spec.h.h[0].rows() == 0 ? spec.h.h[0] : CMat(spec.h.h[0].inverse());

  // Middle map of the monad square. For sigma1/tau0/tau1 it is
  // diag(g, g, h^-1); for sigma2/tau2 the two V-summands mix through the
  // involution's 2x2 unitary and the W-block carries -h^-1.
  CMat f = CMat::Zero(2 * n + r, 2 * n + r);
  const bool mixing =
      inv.kind == P2InvolutionKind::sigma2 || inv.kind == P2InvolutionKind::tau2;
  if (mixing) {
    f.block(0, 0, n, n) = inv.t * g;
    f.block(0, n, n, n) = inv.z * g;
    f.block(n, 0, n, n) = std::conj(inv.z) * g;
    f.block(n, n, n, n) = -inv.t * g;
    f.block(2 * n, 2 * n, r, r) = -hinv;
  } else {
    f.block(0, 0, n, n) = g;
    f.block(n, n, n, n) = g;
    f.block(2 * n, 2 * n, r, r) = hinv;
  }
  const double beta_sign = mixing ? -1.0 : 1.0;

  const Representation tx = apply(spec, x);
  const std::vector<P2Point> pts = sample_points(sample_count, seed);

  double worst = 0.0;
  for (const P2Point& p : pts) {
    const MonadEvaluation at_p = monad_at(x, p);
    const double scale = std::max({1.0, at_p.alpha.norm(), at_p.beta.norm()});
    double ra, rb;
    if (!inv.antiholomorphic()) {
      const MonadEvaluation tx_at_ip = monad_at(tx, inv(p));
      ra = (f * at_p.alpha - tx_at_ip.alpha * g).norm();
      rb = (tx_at_ip.beta * f - beta_sign * g * at_p.beta).norm();
    } else {
      const MonadEvaluation at_ip = monad_at(x, inv(p));
      const MonadEvaluation tx_at_p = monad_at(tx, p);
      ra = (f * at_ip.alpha.conjugate() - tx_at_p.alpha * g).norm();
      rb = (tx_at_p.beta * f - beta_sign * g * at_ip.beta.conjugate()).norm();
    }
    worst = std::max(worst, std::max(ra, rb) / scale);
  }
  return worst;
}

std::vector<P2Point> sample_points(int count, std::uint64_t seed, bool include_special) {
  std::vector<P2Point> pts;
  Rng rng(seed);
  for (int i = 0; i < count; ++i)
    pts.push_back(P2Point{rng.cgaussian(), rng.cgaussian(), rng.cgaussian()}.normalized());
  if (include_special) {
    const cplx o(0, 0), l(1, 0);
    for (const P2Point& p : {P2Point{l, o, o}, P2Point{o, l, o}, P2Point{o, o, l},
                             P2Point{l, l, o}, P2Point{l, o, l}, P2Point{o, l, l},
                             P2Point{o, l, o}, P2Point{o, o, l}})
      pts.push_back(p.normalized());
  }
  return pts;
}

std::vector<int> scan_beta_ranks_serial(const Representation& x,
                                        const std::vector<P2Point>& pts) {
  std::vector<int> ranks(pts.size());
  for (size_t i = 0; i < pts.size(); ++i) ranks[i] = rank_of(monad_at(x, pts[i]).beta);
  return ranks;
}

std::vector<int> scan_beta_ranks(const Representation& x, const std::vector<P2Point>& pts) {
  std::vector<int> ranks(pts.size());
  parallel_for(static_cast<std::ptrdiff_t>(pts.size()),
               [&](std::ptrdiff_t i) { ranks[i] = rank_of(monad_at(x, pts[i]).beta); });
  return ranks;
}

std::vector<int> scan_fiber_dims_serial(const Representation& x,
                                        const std::vector<P2Point>& pts) {
  std::vector<int> dims(pts.size());
  for (size_t i = 0; i < pts.size(); ++i) dims[i] = fiber_dim(x, pts[i]);
  return dims;
}

std::vector<int> scan_fiber_dims(const Representation& x, const std::vector<P2Point>& pts) {
  std::vector<int> dims(pts.size());
  parallel_for(static_cast<std::ptrdiff_t>(pts.size()),
               [&](std::ptrdiff_t i) { dims[i] = fiber_dim(x, pts[i]); });
  return dims;
}

bool beta_surjective_on_sample(const Representation& x, const std::vector<P2Point>& pts) {
  const int n = x.shape->dimV(0);
  const std::vector<int> ranks = scan_beta_ranks(x, pts);
  for (int r : ranks)
    if (r < n) return false;
  return true;
}

}  // namespace qhk
