#pragma once

// Constructors for the explicit fixed-point examples: the rank-2 sign-twist
// point, the rank-4 transpose/recombination point, and randomized builders
// for symplectic and orthogonal autodual data. Entries inflate entrywise to
// k x k identity blocks.

#include <optional>
#include <string>

#include "quiverhk/involutions.hpp"
#include "quiverhk/quiver.hpp"

namespace qhk {

struct Expected {
  bool adhm_zero = false;
  bool regular = false;
  std::string brane_type;
  bool fixed = false;
  std::optional<int> complex_dim;  // of the brane, when the source pins it
};

struct CatalogEntry {
  std::string name;
  Representation x;
  InvolutionSpec spec;
  Expected expected;
};

// Entry x -> x tensor Id_k on every block (and on the twist).
CMat inflate(const CMat& m, int k);

// r = n = 2k; the sign involution twisted by the rank-2 rotation pair.
CatalogEntry build_c_example(int k);

// The [e,c] word on the same (real) matrices; an (A,B,A) point.
InvolutionSpec c_example_ec_spec(int k);

// r = n = 4k; the transpose-recombination word [b,d] with the displayed
// twist. All five real parameters default to 1.
CatalogEntry build_bd_example(int k, double a = 1.0, double b1 = 1.0, double b2 = 1.0,
                              double b3 = 1.0, double b4 = 1.0);

// The [e,b,d] word on the same matrices (real parameters); (A,A,B).
InvolutionSpec bd_example_ebd_spec(int k);

// Symplectic autodual data: g = Id, h the standard antisymmetric form,
// J = -h^-1 I^T. Requires r even. Retries seeds until regular.
CatalogEntry build_symplectic(int n, int r, std::uint64_t seed);

// Orthogonal autodual data: g the standard symplectic form on V, h = Id.
// Randomized search in the fixed slice; absence within the budget is a
// legitimate outcome. Requires n even, n >= 4.
std::optional<CatalogEntry> build_orthogonal(int n, int r, std::uint64_t seed,
                                             int budget = 10000);

}  // namespace qhk
