#include <doctest.h>

#include "helpers.hpp"
#include "quiverhk/catalog.hpp"
#include "quiverhk/linalg.hpp"
#include "quiverhk/orbits.hpp"
#include "quiverhk/rng.hpp"
#include "quiverhk/stability.hpp"

using namespace qhk;
using testing::scalar;
using testing::x0;

TEST_CASE("intertwiners of the scalar datum with itself are the scalars") {
  const IntertwinerBasis basis = intertwiner_space(x0(), x0());
  CHECK(basis.dimension == 1);
}

TEST_CASE("intertwiners contain the conjugating gauge") {
  const auto shape = jordan_shape(2, 2);
  Rng rng(5);
  const Representation x = random_representation(shape, rng);
  const GaugeElement g = random_unitary_gauge(shape, rng);
  const Representation y = act(g, x);
  const IntertwinerBasis basis = intertwiner_space(x, y);
  REQUIRE(basis.dimension >= 1);
  // projection of g onto the basis recovers g
  CVec gv = vec(g.g[0]);
  CVec proj = CVec::Zero(gv.size());
  for (const auto& elem : basis.basis) {
    const CVec bv = vec(elem[0]);
    proj += (bv.adjoint() * gv)(0) * bv;
  }
  CHECK((proj - gv).norm() < 1e-9 * gv.norm());
}

TEST_CASE("independent representations admit no intertwiner") {
  const auto shape = jordan_shape(2, 2);
  Rng rng(7);
  const Representation x = random_representation(shape, rng);
  const Representation y = random_representation(shape, rng);
  CHECK(intertwiner_space(x, y).dimension == 0);
}

TEST_CASE("orbit witness on scalar data") {
  const Representation x = x0();
  SUBCASE("recovers the acting scalar") {
    const GaugeElement three = GaugeElement::from_blocks({scalar(3)});
    const auto w = orbit_witness(x, act(three, x));
    REQUIRE(w.has_value());
    CHECK(std::abs(w->g[0](0, 0) - cplx(3, 0)) < 1e-9);
  }
  SUBCASE("identity for the point itself") {
    const auto w = orbit_witness(x, x);
    REQUIRE(w.has_value());
    CHECK(std::abs(w->g[0](0, 0) - cplx(1, 0)) < 1e-10);
  }
  SUBCASE("no witness across stable/costable types") {
    const Representation y = jordan_rep(scalar(0), scalar(0), scalar(0), scalar(1));
    CHECK_FALSE(orbit_witness(x, y).has_value());
  }
}

TEST_CASE("witness recovery is unique on stable data") {
  const auto shape = jordan_shape(3, 2);
  Rng rng(11);
  const Representation x = random_representation(shape, rng);
  REQUIRE(is_stable(x));
  const GaugeElement g = random_unitary_gauge(shape, rng);
  const auto w = orbit_witness(x, act(g, x));
  REQUIRE(w.has_value());
  CHECK((w->g[0] - g.g[0]).norm() < 1e-8);
}

TEST_CASE("moduli-level fixedness") {
  SUBCASE("real scalar datum is fixed under conjugation") {
    InvolutionSpec e;
    e.word = {{Letter::e, std::nullopt, std::nullopt}};
    e.g = GaugeElement::identity(x0().shape);
    e.h = FrameElement::identity(x0().shape);
    const auto w = is_moduli_fixed(e, x0());
    REQUIRE(w.has_value());
    CHECK(std::abs(w->g[0](0, 0) - cplx(1, 0)) < 1e-10);
  }
  SUBCASE("generic complex data is not orbit-equivalent to its conjugate") {
    const auto shape = jordan_shape(2, 2);
    const Representation x = random_representation(shape, 13);
    REQUIRE(is_stable(x));
    InvolutionSpec e;
    e.word = {{Letter::e, std::nullopt, std::nullopt}};
    e.g = GaugeElement::identity(shape);
    e.h = FrameElement::identity(shape);
    CHECK_FALSE(is_moduli_fixed(e, x).has_value());
  }
  SUBCASE("requires stability") {
    InvolutionSpec e;
    e.word = {{Letter::e, std::nullopt, std::nullopt}};
    const Representation z = Representation::zero(jordan_shape(1, 1));
    e.g = GaugeElement::identity(z.shape);
    e.h = FrameElement::identity(z.shape);
    CHECK_THROWS_AS(is_moduli_fixed(e, z), PreconditionError);
  }
}

TEST_CASE("orbit-fixed points move to exact fixed points") {
  const CatalogEntry entry = build_c_example(1);
  REQUIRE(is_exact_fixed_point(entry.spec, entry.x));

  Rng rng(17);
  const GaugeElement u = random_unitary_gauge(entry.x.shape, rng);
  const Representation moved = act(u, entry.x);
  CHECK_FALSE(is_exact_fixed_point(entry.spec, moved));
  const auto w = is_moduli_fixed(entry.spec, moved);
  CHECK(w.has_value());  // still fixed at the moduli level

  const auto back = move_to_exact_fixed(entry.spec, moved);
  REQUIRE(back.has_value());
  CHECK(is_exact_fixed_point(entry.spec, *back));
}

TEST_CASE("witness consistency with involutivity") {
  // act(k, 1, x) = apply(spec, x) and involutivity force g sigma(k) g^-1 k = 1
  // at stable points; sigma is conjugation for the e-word.
  const CatalogEntry entry = build_c_example(1);
  Rng rng(23);
  const Representation x = act(random_unitary_gauge(entry.x.shape, rng), entry.x);
  const auto witness = is_moduli_fixed(entry.spec, x);
  REQUIRE(witness.has_value());
  const CMat& k = witness->g[0];
  const CMat& g = entry.spec.g.g[0];
  // the c-word has trivial group twist: the consistency condition is
  // (g k g^-1) k = 1
  CHECK((g * k * g.inverse() * k - CMat::Identity(2, 2)).norm() < 1e-7);
}

TEST_CASE("fixedness at the moduli level is orbit invariant") {
  const CatalogEntry entry = build_c_example(1);
  Rng rng(19);
  const GaugeElement m = random_unitary_gauge(entry.x.shape, rng);
  const Representation moved = act(m, entry.x);
  CHECK(is_moduli_fixed(entry.spec, entry.x).has_value());
  CHECK(is_moduli_fixed(entry.spec, moved).has_value());
}
