#include "quiverhk/kempf_flow.hpp"

#include <cmath>

#include "quiverhk/linalg.hpp"
#include "quiverhk/stability.hpp"

namespace qhk {

namespace {

double objective(const MomentValues& m, const LevelSpec& level) {
  const double r = mu3_level_residual(m, level);
  return r * r;
}

}  // namespace

std::vector<CMat> mu3_gradient(const Representation& x, const LevelSpec& level) {
  const auto& s = *x.shape;
  const int nv = s.q.num_vertices();
  const MomentValues m = moment_maps(x);

  // S_i = -i (mu3_i - i c Id) is Hermitian; the chain rule through the
  // quadratic moment map gives per-block gradients G and the vertex
  // assembly below.
  std::vector<CMat> S(nv);
  for (int i = 0; i < nv; ++i) {
    const int n = s.dimV(i);
    S[i] = -kImag * (m.mu3[i] - kImag * level.c * CMat::Identity(n, n));
  }

  std::vector<CMat> M(nv);
  for (int i = 0; i < nv; ++i) M[i] = CMat::Zero(s.dimV(i), s.dimV(i));
  for (int a = 0; a < s.q.num_arrows(); ++a) {
    const int t = s.q.tail_of(a), h = s.q.head_of(a);
    const CMat GA = S[h] * x.A[a] - x.A[a] * S[t];
    const CMat GB = S[t] * x.B[a] - x.B[a] * S[h];
    M[h] += x.A[a] * GA.adjoint();
    M[t] -= GA.adjoint() * x.A[a];
    M[t] += x.B[a] * GB.adjoint();
    M[h] -= GB.adjoint() * x.B[a];
  }
  for (int i = 0; i < nv; ++i) {
    const CMat GI = S[i] * x.I[i];
    const CMat GJ = -x.J[i] * S[i];
    M[i] += x.I[i] * GI.adjoint();
    M[i] -= GJ.adjoint() * x.J[i];
  }
  for (int i = 0; i < nv; ++i) M[i] = CMat(M[i] + M[i].adjoint().eval());
  return M;
}

double mu3_directional_derivative(const Representation& x, const LevelSpec& level,
                                  const std::vector<CMat>& direction) {
  const std::vector<CMat> grad = mu3_gradient(x, level);
  double d = 0;
  for (size_t i = 0; i < grad.size(); ++i)
    d += (grad[i].array() * direction[i].array().conjugate()).sum().real();
  return d;
}

int probe_stable_side_sign() {
  // Jordan n = r = 1, X = (0, 0, 1, 0) is stable; the sign of Im mu3 on its
  // orbit is the stable-side sign.
  const Representation probe =
      jordan_rep(CMat::Zero(1, 1), CMat::Zero(1, 1), CMat::Ones(1, 1), CMat::Zero(1, 1));
  const MomentValues m = moment_maps(probe);
  return m.mu3[0](0, 0).imag() > 0 ? +1 : -1;
}

FlowResult flow_to_level(const Representation& x, const LevelSpec& level, double tol,
                         int max_iters) {
  const MomentValues m0 = moment_maps(x);
  if (muC_norm(m0) > 1e-8)
    throw PreconditionError("flow_to_level requires muC(x) = 0");
  if (!is_stable(x)) throw PreconditionError("flow_to_level requires a stable point");

  const auto& s = *x.shape;
  const int nv = s.q.num_vertices();

  FlowResult out;
  out.stable_side_sign = probe_stable_side_sign();
  std::vector<CMat> p(nv);
  for (int i = 0; i < nv; ++i) p[i] = CMat::Identity(s.dimV(i), s.dimV(i));

  Representation y = x;
  MomentValues m = m0;
  double f = objective(m, level);
  out.max_muC_drift = muC_norm(m);
  double step = 0.1;

  int it = 0;
  for (; it < max_iters; ++it) {
    out.residual = std::sqrt(f);
    if (out.residual <= tol) {
      out.converged = true;
      break;
    }
    const std::vector<CMat> grad = mu3_gradient(y, level);
    double gnorm2 = 0;
    for (const CMat& g : grad) gnorm2 += g.squaredNorm();
    if (gnorm2 == 0) break;  // stationary away from the level: report best iterate

    bool accepted = false;
    for (int bt = 0; bt < 60 && !accepted; ++bt) {
      std::vector<CMat> trial_p(nv);
      for (int i = 0; i < nv; ++i) {
        const CMat q = exp_hermitian(CMat(-step * grad[i])) * p[i];
        // The objective only sees the positive polar factor, so the iterate
        // can be kept in the positive slice exactly.
        trial_p[i] = polar_positive(q);
      }
      std::vector<CMat> blocks = trial_p;
      GaugeElement ge;
      ge.g = std::move(blocks);
      ge.unitary_flag = false;
      Representation ty = act(ge, FrameElement::identity(x.shape), x);
      const MomentValues tm = moment_maps(ty);
      const double tf = objective(tm, level);
      if (tf < f - 1e-4 * step * gnorm2) {
        p = std::move(trial_p);
        y = std::move(ty);
        m = tm;
        f = tf;
        out.max_muC_drift = std::max(out.max_muC_drift, muC_norm(m));
        step *= 1.8;
        accepted = true;
      } else {
        step *= 0.5;
      }
    }
    if (!accepted) break;  // line search exhausted; report best iterate
  }
  out.iterations = it;
  out.residual = std::sqrt(f);
  out.converged = out.residual <= tol;
  out.g.g = p;
  out.g.unitary_flag = false;
  return out;
}

}  // namespace qhk
