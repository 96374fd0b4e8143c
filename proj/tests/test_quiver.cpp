#include <doctest.h>

#include "helpers.hpp"
#include "quiverhk/rng.hpp"

using namespace qhk;
using testing::scalar;
using testing::x0;

TEST_CASE("validate accepts the scalar datum and flags bad shapes") {
  const Representation x = x0();
  CHECK(validate_representation(x.shape->q, x.shape->d, x).empty());

  // loop blocks must be square
  Representation bad = Representation::zero(jordan_shape(2, 1));
  bad.A[0] = CMat::Zero(2, 1);
  const auto v = validate_representation(bad.shape->q, bad.shape->d, bad);
  REQUIRE(v.size() == 1);
  CHECK(v[0].where == "arrow a (A)");

  Representation nan = x0();
  nan.I[0](0, 0) = cplx(std::nan(""), 0);
  CHECK(validate_representation(nan.shape->q, nan.shape->d, nan).size() == 1);
}

TEST_CASE("loop partition covers the arrow set") {
  const auto shape = testing::three_vertex_shape();
  CHECK(shape->q.num_loops() == 1);
  CHECK(shape->q.num_arrows() - shape->q.num_loops() == 3);
}

TEST_CASE("identity and scalar action") {
  const Representation x = x0();
  const Representation same =
      act(GaugeElement::identity(x.shape), FrameElement::identity(x.shape), x);
  CHECK(distance(same, x) == 0.0);

  const GaugeElement two = GaugeElement::from_blocks({scalar(2)});
  const Representation y = act(two, FrameElement::identity(x.shape), x);
  CHECK(y.I[0](0, 0) == cplx(2, 0));
  CHECK(y.J[0](0, 0) == cplx(0, 0));
}

TEST_CASE("action composes as a left action and inverts") {
  const auto shape = testing::three_vertex_shape();
  Rng rng(3);
  const Representation x = random_representation(shape, rng);
  const GaugeElement g1 = random_unitary_gauge(shape, rng);
  const GaugeElement g2 = random_unitary_gauge(shape, rng);
  const FrameElement h1 = random_unitary_frame(shape, rng);
  const FrameElement h2 = random_unitary_frame(shape, rng);

  const Representation lhs = act(g2, h2, act(g1, h1, x));
  std::vector<CMat> g21, h12;
  for (size_t i = 0; i < g1.g.size(); ++i) g21.push_back(g2.g[i] * g1.g[i]);
  for (size_t i = 0; i < h1.h.size(); ++i) h12.push_back(h1.h[i] * h2.h[i]);
  const Representation rhs =
      act(GaugeElement::from_blocks(g21), FrameElement::from_blocks(h12), x);
  CHECK(distance(lhs, rhs) < 1e-10 * x.norm());

  const Representation back = act(g1.inverse(), h1.inverse(), act(g1, h1, x));
  CHECK(distance(back, x) < 1e-12 * std::max(1.0, x.norm()));
}

TEST_CASE("non-invertible gauge blocks are rejected") {
  const Representation x = x0();
  CHECK_THROWS_AS(act(GaugeElement::from_blocks({scalar(0)}),
                      FrameElement::identity(x.shape), x),
                  PreconditionError);
}

TEST_CASE("random representations are deterministic by seed") {
  const auto shape = jordan_shape(2, 2);
  const Representation a = random_representation(shape, 7);
  const Representation b = random_representation(shape, 7);
  const Representation c = random_representation(shape, 8);
  CHECK(distance(a, b) == 0.0);
  CHECK(distance(a, c) > 0.0);
  CHECK(a.A[0].rows() == 2);
  CHECK(a.I[0].cols() == 2);
}

TEST_CASE("unitary flag tracks the blocks") {
  const auto shape = jordan_shape(2, 2);
  Rng rng(1);
  CHECK(random_unitary_gauge(shape, rng).unitary_flag);
  CHECK_FALSE(GaugeElement::from_blocks({2 * CMat::Identity(2, 2)}).unitary_flag);
}
