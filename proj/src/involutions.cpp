#include "quiverhk/involutions.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "quiverhk/linalg.hpp"
#include "quiverhk/rng.hpp"

namespace qhk {

GammaAssignment GammaAssignment::all_minus(const Quiver& q) {
  GammaAssignment g;
  g.arrow_sign.assign(q.num_arrows(), -1);
  g.vertex_sign.assign(q.num_vertices(), -1);
  return g;
}

void GammaAssignment::validate(const Quiver& q) const {
  if (arrow_sign.size() != static_cast<size_t>(q.num_arrows()) ||
      vertex_sign.size() != static_cast<size_t>(q.num_vertices()))
    throw ShapeError("gamma assignment is not total");
  bool nontrivial = false;
  for (int s : arrow_sign) {
    if (s != 1 && s != -1) throw PreconditionError("gamma signs must be +-1");
    nontrivial = nontrivial || s == -1;
  }
  for (int s : vertex_sign) {
    if (s != 1 && s != -1) throw PreconditionError("gamma signs must be +-1");
    nontrivial = nontrivial || s == -1;
  }
  if (!nontrivial) throw PreconditionError("gamma must not be identically +1");
}

DeltaAssignment DeltaAssignment::diagonal(const Quiver& q, double loop_t, cplx loop_z) {
  DeltaAssignment d;
  for (int a = 0; a < q.num_arrows(); ++a)
    d.arrow_param.push_back(q.is_loop(a) ? DeltaParam{loop_t, loop_z} : DeltaParam{1.0, 0.0});
  d.vertex_t.assign(q.num_vertices(), 1.0);
  return d;
}

void DeltaAssignment::validate(const Quiver& q) const {
  if (arrow_param.size() != static_cast<size_t>(q.num_arrows()) ||
      vertex_t.size() != static_cast<size_t>(q.num_vertices()))
    throw ShapeError("delta assignment is not total");
  for (int a = 0; a < q.num_arrows(); ++a) {
    const DeltaParam& p = arrow_param[a];
    if (std::abs(p.t * p.t + std::norm(p.z) - 1.0) > 1e-12)
      throw PreconditionError("delta parameters must satisfy t^2 + |z|^2 = 1");
    if (!q.is_loop(a) && std::abs(p.z) > 0)
      throw PreconditionError("delta must be diagonal off loops");
  }
  for (double t : vertex_t)
    if (std::abs(std::abs(t) - 1.0) > 1e-12)
      throw PreconditionError("framing delta must have t = +-1");
}

bool DeltaAssignment::all_z_real() const {
  for (const DeltaParam& p : arrow_param)
    if (std::abs(p.z.imag()) > 1e-12) return false;
  return true;
}

std::string letter_name(Letter l) {
  switch (l) {
    case Letter::b: return "b";
    case Letter::c: return "c";
    case Letter::d: return "d";
    case Letter::e: return "e";
  }
  return "?";
}

bool InvolutionSpec::contains(Letter l) const {
  return std::any_of(word.begin(), word.end(),
                     [l](const WordLetter& w) { return w.kind == l; });
}

std::string InvolutionSpec::word_string() const {
  std::string s;
  for (const WordLetter& w : word) s += letter_name(w.kind);
  return s;
}

void InvolutionSpec::validate(const Quiver& q) const {
  int counts[4] = {0, 0, 0, 0};
  for (const WordLetter& w : word) {
    counts[static_cast<int>(w.kind)]++;
    if (w.kind == Letter::c) {
      if (!w.gamma) throw PreconditionError("c letter without gamma assignment");
      w.gamma->validate(q);
    }
    if (w.kind == Letter::d) {
      if (!w.delta) throw PreconditionError("d letter without delta assignment");
      w.delta->validate(q);
    }
  }
  for (int c : counts)
    if (c > 1) throw PreconditionError("each letter kind may appear at most once");
  // d only commutes with b and e when every loop z is real
  if (counts[static_cast<int>(Letter::d)] == 1 &&
      (counts[static_cast<int>(Letter::b)] == 1 || counts[static_cast<int>(Letter::e)] == 1)) {
    for (const WordLetter& w : word)
      if (w.kind == Letter::d && !w.delta->all_z_real())
        throw PreconditionError("d combined with b or e requires real z parameters");
  }
  if (word.empty()) throw PreconditionError("empty involution word");
}

namespace {

Representation letter_b(const Representation& x) {
  const auto& s = *x.shape;
  Representation y = x;
  for (int a = 0; a < s.q.num_arrows(); ++a) {
    if (s.dimV(s.q.tail_of(a)) != s.dimV(s.q.head_of(a)))
      throw ShapeError("b letter needs equal endpoint dimensions on every arrow");
    y.A[a] = x.A[a].transpose();
    y.B[a] = x.B[a].transpose();
  }
  for (int i = 0; i < s.q.num_vertices(); ++i) {
    y.I[i] = x.J[i].transpose();
    y.J[i] = -x.I[i].transpose();
  }
  return y;
}

Representation letter_c(const GammaAssignment& gam, const Representation& x) {
  Representation y = x;
  for (size_t a = 0; a < x.A.size(); ++a) {
    y.A[a] = static_cast<double>(gam.arrow_sign[a]) * x.A[a];
    y.B[a] = static_cast<double>(gam.arrow_sign[a]) * x.B[a];
  }
  for (size_t i = 0; i < x.I.size(); ++i) {
    y.I[i] = static_cast<double>(gam.vertex_sign[i]) * x.I[i];
    y.J[i] = static_cast<double>(gam.vertex_sign[i]) * x.J[i];
  }
  return y;
}

Representation letter_d(const DeltaAssignment& del, const Representation& x) {
  Representation y = x;
  for (size_t a = 0; a < x.A.size(); ++a) {
    const DeltaParam& p = del.arrow_param[a];
    if (p.z == cplx(0, 0)) {
      // diagonal case; off loops A and B have different shapes, so the
      // mixing terms must not be formed at all
      y.A[a] = p.t * x.A[a];
      y.B[a] = -p.t * x.B[a];
    } else {
      y.A[a] = p.t * x.A[a] + p.z * x.B[a];
      y.B[a] = std::conj(p.z) * x.A[a] - p.t * x.B[a];
    }
  }
  for (size_t i = 0; i < x.I.size(); ++i) {
    y.I[i] = del.vertex_t[i] * x.I[i];
    y.J[i] = -del.vertex_t[i] * x.J[i];
  }
  return y;
}

Representation letter_e(const Representation& x) {
  Representation y = x;
  for (auto& m : y.A) m = m.conjugate();
  for (auto& m : y.B) m = m.conjugate();
  for (auto& m : y.I) m = m.conjugate();
  for (auto& m : y.J) m = m.conjugate();
  return y;
}

}  // namespace

Representation apply_word(const InvolutionSpec& spec, const Representation& x) {
  Representation y = x;
  for (auto it = spec.word.rbegin(); it != spec.word.rend(); ++it) {
    switch (it->kind) {
      case Letter::b: y = letter_b(y); break;
      case Letter::c: y = letter_c(*it->gamma, y); break;
      case Letter::d: y = letter_d(*it->delta, y); break;
      case Letter::e: y = letter_e(y); break;
    }
  }
  return y;
}

Representation apply(const InvolutionSpec& spec, const Representation& x) {
  spec.validate(x.shape->q);
  return act(spec.g, spec.h, apply_word(spec, x));
}

namespace {

// Fits m ~ phase * Id; returns the phase and the fit residual.
std::pair<cplx, double> scalar_fit(const CMat& m) {
  if (m.rows() == 0) return {cplx(1, 0), 0.0};
  const cplx phase = m.trace() / static_cast<double>(m.rows());
  const double res = (m - phase * CMat::Identity(m.rows(), m.cols())).norm();
  return {phase, res};
}

// Fits m ~ c * m^T with c = +-1; returns "+1", "-1", "phase", or "none".
std::string transpose_symmetry(const CMat& m) {
  if (m.rows() == 0) return "+1";
  const double n = m.norm();
  if (n == 0) return "+1";
  if ((m - m.transpose()).norm() < 1e-8 * n) return "+1";
  if ((m + m.transpose()).norm() < 1e-8 * n) return "-1";
  // general phase e^{i xi} m^T
  const cplx num = (m.array() * m.array()).sum();  // tr(m m^T-bar)-ish fit
  if (std::abs(num) > 1e-8 * n * n) return "phase";
  return "none";
}

}  // namespace

InvolutionReport is_involution(const InvolutionSpec& spec, const RepShapePtr& shape,
                               int trials, std::uint64_t seed, double tol) {
  if (trials < 1) throw PreconditionError("trials must be >= 1");
  spec.validate(shape->q);
  InvolutionReport rep;

  Rng rng(seed);
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const Representation x = random_representation(shape, rng);
    const Representation xx = apply(spec, apply(spec, x));
    worst = std::max(worst, distance(xx, x) / std::max(1.0, x.norm()));
  }
  rep.max_residual = worst;
  rep.involutive = worst <= tol;

  // Structural diagnostics from the twist-condition table. Words with an odd
  // number of b/e letters constrain g against g^T; the others constrain g^2.
  int transposey = 0;
  for (const WordLetter& w : spec.word)
    if (w.kind == Letter::b || w.kind == Letter::e) ++transposey;
  const bool odd = (transposey % 2) == 1;
  rep.parity = odd ? "transpose-like" : "plain";

  const Quiver& q = shape->q;
  std::vector<cplx> gphase(q.num_vertices(), cplx(1, 0));
  if (odd) {
    auto classify = [](const std::vector<CMat>& blocks) {
      std::string out;
      for (const CMat& m : blocks) {
        const std::string s = transpose_symmetry(m);
        if (out.empty()) out = s;
        else if (out != s) out = "mixed";
      }
      return out.empty() ? "+1" : out;
    };
    rep.g_condition = "g ~ " + classify(spec.g.g) + " * g^T";
    rep.h_condition = "h ~ " + classify(spec.h.h) + " * h^T";
    rep.phase_pattern_ok = true;  // the +-1 cases carry no arrow phases
  } else {
    bool ok = true;
    std::ostringstream gs, hs;
    for (int i = 0; i < q.num_vertices(); ++i) {
      const auto [pg, rg] = scalar_fit(spec.g.g[i] * spec.g.g[i]);
      const auto [ph, rh] = scalar_fit(spec.h.h[i] * spec.h.h[i]);
      gphase[i] = pg;
      ok = ok && rg < 1e-8 && rh < 1e-8 && std::abs(pg * ph - cplx(1, 0)) < 1e-8;
      if (i) { gs << ","; hs << ","; }
      gs << "e^{i xi}=" << pg;
      hs << "e^{-i xi}=" << ph;
    }
    rep.g_condition = (ok ? "g^2 scalar: " : "g^2 not scalar/paired: ") + gs.str();
    rep.h_condition = "h^2: " + hs.str();
    // xi_tail = xi_head for c/d/e-type words, xi_tail = -xi_head when b enters
    const bool b_in_word = spec.contains(Letter::b);
    bool pattern = ok;
    for (int a = 0; a < q.num_arrows(); ++a) {
      const cplx pt = gphase[q.tail_of(a)], ph2 = gphase[q.head_of(a)];
      pattern = pattern && (b_in_word ? std::abs(pt * ph2 - cplx(1, 0)) < 1e-8
                                      : std::abs(pt - ph2) < 1e-8);
    }
    rep.phase_pattern_ok = pattern;
  }
  return rep;
}

Signature signature(const InvolutionSpec& spec, const RepShapePtr& shape,
                    std::uint64_t seed, double tol) {
  spec.validate(shape->q);
  Rng rng(seed);
  Signature sig;
  int* out[3] = {&sig.delta1, &sig.delta2, &sig.delta3};
  constexpr int kTrials = 3;
  for (int k = 1; k <= 3; ++k) {
    int sign = 0;
    for (int t = 0; t < kTrials; ++t) {
      const Representation x = random_representation(shape, rng);
      const Representation lhs = apply(spec, gamma(k, x));
      const Representation rhs = gamma(k, apply(spec, x));
      const double scale = std::max(1.0, x.norm());
      const double rp = distance(lhs, rhs) / scale;
      const double rm = (lhs + rhs).norm() / scale;
      int s = 0;
      if (rp <= tol && rm > tol) s = 1;
      if (rm <= tol && rp > tol) s = -1;
      if (s == 0 || (sign != 0 && s != sign))
        throw PreconditionError("involution has no consistent commutation sign with Gamma_" +
                                std::to_string(k));
      sign = s;
    }
    *out[k - 1] = sign;
  }
  return sig;
}

std::string brane_type(const Signature& sig) {
  auto tag = [](int s) { return s > 0 ? "B" : "A"; };
  std::ostringstream os;
  os << "(" << tag(sig.delta1) << "," << tag(sig.delta2) << "," << tag(sig.delta3) << ")";
  return os.str();
}

std::string brane_type(const InvolutionSpec& spec, const RepShapePtr& shape,
                       std::uint64_t seed) {
  return brane_type(signature(spec, shape, seed));
}

namespace {

struct Law {
  std::string name;
  std::function<CMat(const CMat&)> f;
};

std::pair<std::string, double> best_law(const std::vector<CMat>& before,
                                        const std::vector<CMat>& after,
                                        const std::vector<Law>& laws) {
  std::string best = "unrecognized";
  double best_res = std::numeric_limits<double>::infinity();
  double scale = 1.0;
  for (const CMat& m : before) scale = std::max(scale, m.norm());
  for (const Law& law : laws) {
    double res = 0;
    for (size_t i = 0; i < before.size(); ++i) res += (after[i] - law.f(before[i])).squaredNorm();
    res = std::sqrt(res) / scale;
    if (res < best_res) {
      best_res = res;
      best = law.name;
    }
  }
  return {best, best_res};
}

}  // namespace

DescentReport descent_report(const InvolutionSpec& spec, const Representation& x) {
  const MomentValues before = moment_maps(x);
  const MomentValues after = moment_maps(apply(spec, x));

  // The twist conjugates every mu_k by g; undo it so the letter law shows.
  std::vector<CMat> afterC, after3;
  for (size_t i = 0; i < after.muC.size(); ++i) {
    const CMat& gi = spec.g.g[i];
    const CMat ginv = gi.rows() == 0 ? gi : CMat(gi.inverse());
    afterC.push_back(ginv * after.muC[i] * gi);
    after3.push_back(ginv * after.mu3[i] * gi);
  }

  const std::vector<Law> lawsC = {
      {"muC", [](const CMat& m) { return m; }},
      {"-muC", [](const CMat& m) { return CMat(-m); }},
      {"conj(muC)", [](const CMat& m) { return CMat(m.conjugate()); }},
      {"-conj(muC)", [](const CMat& m) { return CMat(-m.conjugate()); }},
      {"-muC^T", [](const CMat& m) { return CMat(-m.transpose()); }},
      {"muC^T", [](const CMat& m) { return CMat(m.transpose()); }},
      {"-muC^*", [](const CMat& m) { return CMat(-m.adjoint()); }},
      {"muC^*", [](const CMat& m) { return CMat(m.adjoint()); }},
  };
  // On anti-Hermitian values -m^T = conj(m), so four laws exhaust this
  // family; the alias names keep both readings visible.
  const std::vector<Law> laws3 = {
      {"mu3", [](const CMat& m) { return m; }},
      {"-mu3", [](const CMat& m) { return CMat(-m); }},
      {"-conj(mu3) (= mu3^T)", [](const CMat& m) { return CMat(-m.conjugate()); }},
      {"conj(mu3) (= -mu3^T)", [](const CMat& m) { return CMat(m.conjugate()); }},
  };

  DescentReport rep;
  std::tie(rep.muC_law, rep.muC_residual) = best_law(before.muC, afterC, lawsC);
  std::tie(rep.mu3_law, rep.mu3_residual) = best_law(before.mu3, after3, laws3);

  // A law preserves the scalar levels i*c*Id iff it fixes i*c*Id; of the
  // candidates that is the identity and -conj.
  rep.mu3_scalar_levels_preserved =
      rep.mu3_law == "mu3" || rep.mu3_law == "-conj(mu3) (= mu3^T)";

  // Words containing b or e descend to the affine and regular quotients; pure
  // c/d words preserve every mu3 level and descend to all four.
  if (spec.contains(Letter::b) || spec.contains(Letter::e))
    rep.descends_to = {"N0", "Nreg"};
  else
    rep.descends_to = {"N0", "N1", "N-1", "Nreg"};
  return rep;
}

}  // namespace qhk
