#include "quiverhk/catalog.hpp"

#include <cmath>

#include "quiverhk/linalg.hpp"
#include "quiverhk/rng.hpp"
#include "quiverhk/stability.hpp"

namespace qhk {

CMat inflate(const CMat& m, int k) { return kron(m, CMat::Identity(k, k)); }

namespace {

CMat real_matrix(std::initializer_list<std::initializer_list<double>> rows) {
  const int nr = static_cast<int>(rows.size());
  const int nc = static_cast<int>(rows.begin()->size());
  CMat m(nr, nc);
  int i = 0;
  for (const auto& row : rows) {
    int j = 0;
    for (double v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

// Standard antisymmetric form, [[0, Id], [-Id, 0]] in half-blocks.
CMat standard_symplectic(int n) {
  CMat w = CMat::Zero(n, n);
  const int half = n / 2;
  w.block(0, half, half, half) = CMat::Identity(half, half);
  w.block(half, 0, half, half) = -CMat::Identity(half, half);
  return w;
}

}  // namespace

CatalogEntry build_c_example(int k) {
  if (k < 1) throw PreconditionError("k must be >= 1");
  const CMat a = real_matrix({{1, 2}, {2, -1}});
  const CMat b = real_matrix({{1, 1}, {1, -1}});
  const CMat i = CMat::Identity(2, 2);
  const CMat j = real_matrix({{0, 2}, {-2, 0}});
  const CMat rot = real_matrix({{0, -1}, {1, 0}});

  CatalogEntry entry;
  entry.name = "c-example";
  entry.x = jordan_rep(inflate(a, k), inflate(b, k), inflate(i, k), inflate(j, k));
  const Quiver& q = entry.x.shape->q;
  entry.spec.word = {{Letter::c, GammaAssignment::all_minus(q), std::nullopt}};
  entry.spec.g = GaugeElement::from_blocks({inflate(rot, k)});
  entry.spec.h = FrameElement::from_blocks({inflate(rot, k)});
  entry.expected = {true, true, "(B,B,B)", true, std::nullopt};
  return entry;
}

InvolutionSpec c_example_ec_spec(int k) {
  CatalogEntry entry = build_c_example(k);
  InvolutionSpec spec = entry.spec;
  spec.word.insert(spec.word.begin(), WordLetter{Letter::e, std::nullopt, std::nullopt});
  return spec;
}

CatalogEntry build_bd_example(int k, double a, double b1, double b2, double b3, double b4) {
  if (k < 1) throw PreconditionError("k must be >= 1");
  const CMat A = real_matrix({{a, 0, 0, 1},  //
                              {0, a, -1, 0},
                              {0, 1, a, 0},
                              {-1, 0, 0, a}});
  const CMat B = real_matrix({{b1, b2, b3, 1},
                              {0, -b1, 1, b4},
                              {b4, 1, -b1, 0},
                              {1, b3, -b2, b1}});
  // The fixed slice of the [b,d] word forces J = I for this block pattern,
  // so I I = -[A,B] pins the top-right block signs: (1,3) must multiply
  // against (3,1) to -2 and (2,4) against (4,2) to +2.
  const CMat I = real_matrix({{0, 0, -2, 0},  //
                              {0, 0, 0, 2},
                              {1, 0, 0, 0},
                              {0, 1, 0, 0}});
  const CMat g = real_matrix({{0, 0, -1, 0},
                              {0, 0, 0, -1},
                              {1, 0, 0, 0},
                              {0, 1, 0, 0}});
  const CMat h = real_matrix({{0, 0, 1, 0},  //
                              {0, 0, 0, 1},
                              {-1, 0, 0, 0},
                              {0, -1, 0, 0}});

  CatalogEntry entry;
  entry.name = "bd-example";
  entry.x = jordan_rep(inflate(A, k), inflate(B, k), inflate(I, k), inflate(I, k));
  const Quiver& q = entry.x.shape->q;
  entry.spec.word = {{Letter::b, std::nullopt, std::nullopt},
                     {Letter::d, std::nullopt, DeltaAssignment::diagonal(q)}};
  entry.spec.g = GaugeElement::from_blocks({inflate(g, k)});
  entry.spec.h = FrameElement::from_blocks({inflate(h, k)});
  entry.expected = {true, true, "(B,A,A)", true, 16 * k * k};
  return entry;
}

InvolutionSpec bd_example_ebd_spec(int k) {
  CatalogEntry entry = build_bd_example(k);
  InvolutionSpec spec = entry.spec;
  spec.word.insert(spec.word.begin(), WordLetter{Letter::e, std::nullopt, std::nullopt});
  return spec;
}

CatalogEntry build_symplectic(int n, int r, std::uint64_t seed) {
  if (r % 2 != 0) throw PreconditionError("symplectic data needs even r");
  if (n < 1) throw PreconditionError("n must be >= 1");
  const CMat h = standard_symplectic(r);
  const CMat hinv = h.inverse();

  Rng rng(seed);
  CatalogEntry entry;
  entry.name = "symplectic";
  constexpr int kRetries = 100;
  for (int attempt = 0; attempt < kRetries; ++attempt) {
    CMat A, B, I;
    if (n == 1) {
      A = rng.cgaussian_matrix(1, 1);
      B = rng.cgaussian_matrix(1, 1);
      I = rng.cgaussian_matrix(1, r);
    } else {
      // Symmetric A, B = polynomial in A (stays symmetric and commutes), and
      // rank-one I; then [A,B] = 0 and I h^-1 I^T = 0 hold identically.
      const CMat M = rng.cgaussian_matrix(n, n);
      A = 0.5 * (M + M.transpose());
      B = rng.cgaussian() * CMat::Identity(n, n) + rng.cgaussian() * A +
          rng.cgaussian() * A * A;
      I = rng.cgaussian_matrix(n, 1) * rng.cgaussian_matrix(1, r);
    }
    const CMat J = -hinv * I.transpose();
    Representation x = jordan_rep(A, B, I, J);
    if (!is_regular(x)) continue;
    entry.x = std::move(x);
    entry.spec.word = {{Letter::b, std::nullopt, std::nullopt}};
    entry.spec.g = GaugeElement::identity(entry.x.shape);
    entry.spec.h = FrameElement::from_blocks({h});
    entry.expected = {true, true, "(B,B,B)", true,
                      n == 1 ? std::optional<int>(n * (r + 2)) : std::nullopt};
    return entry;
  }
  throw PreconditionError("symplectic builder found no regular point in the retry budget");
}

std::optional<CatalogEntry> build_orthogonal(int n, int r, std::uint64_t seed, int budget) {
  if (n % 2 != 0 || n < 4)
    throw PreconditionError("orthogonal data needs n even and larger than 2");
  if (r < 1) throw PreconditionError("r must be >= 1");
  const CMat g = standard_symplectic(n);
  const CMat ginv = g.inverse();

  Rng rng(seed);
  // Basis of a maximal isotropic subspace for the symmetric bilinear form.
  CMat U = CMat::Zero(n, n / 2);
  for (int j = 0; j < n / 2; ++j) {
    U(j, j) = 1.0 / std::numbers::sqrt2;
    U(j + n / 2, j) = -kImag / std::numbers::sqrt2;
  }

  const int tries = std::max(1, budget / 100);
  for (int attempt = 0; attempt < tries; ++attempt) {
    const CMat M = rng.cgaussian_matrix(n, n);
    const CMat A = 0.5 * (M + g * M.transpose() * ginv);  // slice: A = g A^T g^-1
    const CMat B = rng.cgaussian() * CMat::Identity(n, n) + rng.cgaussian() * A +
                   rng.cgaussian() * A * A;
    // I = U [D, iD, 0]: columns stay isotropic, so I I^T = 0 and the ADHM
    // equation holds with [A,B] = 0.
    const CMat D = rng.cgaussian_matrix(n / 2, r / 2);
    CMat C = CMat::Zero(n / 2, r);
    C.leftCols(r / 2) = D;
    C.middleCols(r / 2, r / 2) = kImag * D;
    const CMat I = U * C;
    const CMat J = -I.transpose() * ginv;  // h = Id
    Representation x = jordan_rep(A, B, I, J);
    if (!is_regular(x)) continue;

    CatalogEntry entry;
    entry.name = "orthogonal";
    entry.x = std::move(x);
    entry.spec.word = {{Letter::b, std::nullopt, std::nullopt}};
    entry.spec.g = GaugeElement::from_blocks({g});
    entry.spec.h = FrameElement::identity(entry.x.shape);
    // No dimension is pinned here: on this slice Omega([A,B] + IJ) is
    // symmetric, so the ADHM equation cuts n(n+1)/2 conditions and the
    // count at the found points comes out n(r-2); see the tests.
    entry.expected = {true, true, "(B,B,B)", true, std::nullopt};
    return entry;
  }
  return std::nullopt;
}

}  // namespace qhk
