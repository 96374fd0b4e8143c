#pragma once

// The four involution letters on the representation space and their
// (g,h)-twisted composition words:
//   b: (A, B, I, J) -> (A^t, B^t, J^t, -I^t)
//   c: per-arrow / per-vertex sign flips by a {+-1}-assignment gamma
//   d: 2x2 recombination of (A_a, B_a) by an involutive unitary, framing
//      blocks scaled by (t_i, -t_i)
//   e: entrywise complex conjugation
// A spec applies its untwisted letters right-to-left and then the (g,h)
// action. Validity is decided empirically; the structural twist conditions
// are reported as diagnostics.

#include <optional>
#include <string>
#include <vector>

#include "quiverhk/hk_geometry.hpp"
#include "quiverhk/quiver.hpp"

namespace qhk {

struct GammaAssignment {
  std::vector<int> arrow_sign;   // +-1 per arrow
  std::vector<int> vertex_sign;  // +-1 per vertex (framing blocks)

  static GammaAssignment all_minus(const Quiver& q);
  void validate(const Quiver& q) const;  // total, not identically +1
};

struct DeltaParam {
  double t = 1.0;
  cplx z = 0.0;  // must vanish off loops
};

struct DeltaAssignment {
  std::vector<DeltaParam> arrow_param;  // per arrow; t^2 + |z|^2 = 1
  std::vector<double> vertex_t;         // +-1 per vertex

  static DeltaAssignment diagonal(const Quiver& q, double loop_t = 1.0, cplx loop_z = 0.0);
  void validate(const Quiver& q) const;
  bool all_z_real() const;
};

enum class Letter { b, c, d, e };

std::string letter_name(Letter l);

struct WordLetter {
  Letter kind;
  std::optional<GammaAssignment> gamma;  // for c
  std::optional<DeltaAssignment> delta;  // for d
};

struct InvolutionSpec {
  std::vector<WordLetter> word;  // applied right-to-left
  GaugeElement g;
  FrameElement h;

  bool contains(Letter l) const;
  void validate(const Quiver& q) const;
  std::string word_string() const;  // e.g. "ebd"
};

struct Signature {
  int delta1 = 0, delta2 = 0, delta3 = 0;  // +-1 commutation signs with Gamma_k
};

// Untwisted word action; exposed for the monad-square identities.
Representation apply_word(const InvolutionSpec& spec, const Representation& x);
// Full twisted action (g,h) . word(x).
Representation apply(const InvolutionSpec& spec, const Representation& x);

struct InvolutionReport {
  bool involutive = false;      // empirical verdict
  double max_residual = 0.0;    // worst ||a(a(X)) - X|| / ||X|| over trials
  std::string parity;           // "transpose-like" (odd #b+#e) or "plain"
  std::string g_condition;      // which structural condition g satisfies
  std::string h_condition;
  bool phase_pattern_ok = false;  // per-arrow phase constraint from the word
};

InvolutionReport is_involution(const InvolutionSpec& spec, const RepShapePtr& shape,
                               int trials, std::uint64_t seed, double tol = kStructTol);

Signature signature(const InvolutionSpec& spec, const RepShapePtr& shape,
                    std::uint64_t seed, double tol = kStructTol);

// Maps the signature to one of (B,B,B), (B,A,A), (A,B,A), (A,A,B).
std::string brane_type(const Signature& sig);
std::string brane_type(const InvolutionSpec& spec, const RepShapePtr& shape,
                       std::uint64_t seed = 0);

struct DescentReport {
  std::string muC_law;   // best-fitting transformation of muC, e.g. "-muC^T"
  double muC_residual = 0.0;
  std::string mu3_law;
  double mu3_residual = 0.0;
  bool mu3_scalar_levels_preserved = false;  // law fixes i*c*Id levels
  std::vector<std::string> descends_to;      // quotients per the letter content
};

DescentReport descent_report(const InvolutionSpec& spec, const Representation& x);

}  // namespace qhk
