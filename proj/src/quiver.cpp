#include "quiverhk/quiver.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "quiverhk/linalg.hpp"
#include "quiverhk/rng.hpp"

namespace qhk {

int Quiver::vertex_index(const std::string& id) const {
  for (int i = 0; i < num_vertices(); ++i)
    if (vertices[i] == id) return i;
  return -1;
}

int Quiver::arrow_index(const std::string& id) const {
  for (int i = 0; i < num_arrows(); ++i)
    if (arrows[i].id == id) return i;
  return -1;
}

int Quiver::num_loops() const {
  int n = 0;
  for (int a = 0; a < num_arrows(); ++a)
    if (is_loop(a)) ++n;
  return n;
}

void Quiver::finalize() {
  std::set<std::string> vseen(vertices.begin(), vertices.end());
  if (vseen.size() != vertices.size()) throw ShapeError("duplicate vertex id");
  std::set<std::string> aseen;
  tail_idx_.clear();
  head_idx_.clear();
  for (const Arrow& a : arrows) {
    if (!aseen.insert(a.id).second) throw ShapeError("duplicate arrow id: " + a.id);
    const int t = vertex_index(a.tail);
    const int h = vertex_index(a.head);
    if (t < 0 || h < 0)
      throw ShapeError("arrow " + a.id + " references undeclared vertex");
    tail_idx_.push_back(t);
    head_idx_.push_back(h);
  }
}

Quiver Quiver::jordan() { return make({"v"}, {{"a", "v", "v"}}); }

Quiver Quiver::make(std::vector<std::string> vertices, std::vector<Arrow> arrows) {
  Quiver q;
  q.vertices = std::move(vertices);
  q.arrows = std::move(arrows);
  q.finalize();
  return q;
}

bool RepShape::same_as(const RepShape& other) const {
  return q.vertices == other.q.vertices && d.dimV == other.d.dimV &&
         d.dimW == other.d.dimW && q.num_arrows() == other.q.num_arrows();
}

RepShapePtr make_shape(Quiver q, DimensionData d) {
  if (d.dimV.size() != q.vertices.size() || d.dimW.size() != q.vertices.size())
    throw ShapeError("dimension data does not cover the vertex set");
  bool any = false;
  for (int n : d.dimV) {
    if (n < 0) throw ShapeError("negative dimension");
    any = any || n > 0;
  }
  for (int n : d.dimW)
    if (n < 0) throw ShapeError("negative dimension");
  if (!any) throw ShapeError("at least one vertex must have dimV > 0");
  return std::make_shared<const RepShape>(RepShape{std::move(q), std::move(d)});
}

RepShapePtr jordan_shape(int n, int r) {
  return make_shape(Quiver::jordan(), DimensionData{{n}, {r}});
}

Representation Representation::zero(RepShapePtr shape) {
  Representation x;
  x.shape = std::move(shape);
  const auto& s = *x.shape;
  for (int a = 0; a < s.q.num_arrows(); ++a) {
    x.A.push_back(CMat::Zero(s.dimV(s.q.head_of(a)), s.dimV(s.q.tail_of(a))));
    x.B.push_back(CMat::Zero(s.dimV(s.q.tail_of(a)), s.dimV(s.q.head_of(a))));
  }
  for (int i = 0; i < s.q.num_vertices(); ++i) {
    x.I.push_back(CMat::Zero(s.dimV(i), s.dimW(i)));
    x.J.push_back(CMat::Zero(s.dimW(i), s.dimV(i)));
  }
  return x;
}

double Representation::norm() const {
  double s = 0;
  for (const auto& m : A) s += m.squaredNorm();
  for (const auto& m : B) s += m.squaredNorm();
  for (const auto& m : I) s += m.squaredNorm();
  for (const auto& m : J) s += m.squaredNorm();
  return std::sqrt(s);
}

namespace {
Representation zip(const Representation& x, const Representation& y,
                   const std::function<CMat(const CMat&, const CMat&)>& f) {
  Representation out = x;
  for (size_t k = 0; k < x.A.size(); ++k) out.A[k] = f(x.A[k], y.A[k]);
  for (size_t k = 0; k < x.B.size(); ++k) out.B[k] = f(x.B[k], y.B[k]);
  for (size_t k = 0; k < x.I.size(); ++k) out.I[k] = f(x.I[k], y.I[k]);
  for (size_t k = 0; k < x.J.size(); ++k) out.J[k] = f(x.J[k], y.J[k]);
  return out;
}
}  // namespace

Representation Representation::operator+(const Representation& o) const {
  return zip(*this, o, [](const CMat& a, const CMat& b) { return CMat(a + b); });
}

Representation Representation::operator-(const Representation& o) const {
  return zip(*this, o, [](const CMat& a, const CMat& b) { return CMat(a - b); });
}

Representation Representation::operator*(cplx s) const {
  Representation out = *this;
  for (auto& m : out.A) m *= s;
  for (auto& m : out.B) m *= s;
  for (auto& m : out.I) m *= s;
  for (auto& m : out.J) m *= s;
  return out;
}

double distance(const Representation& x, const Representation& y) {
  return (x - y).norm();
}

Representation jordan_rep(CMat a, CMat b, CMat i, CMat j) {
  const int n = static_cast<int>(a.rows());
  const int r = static_cast<int>(i.cols());
  Representation x;
  x.shape = jordan_shape(n, r);
  x.A = {std::move(a)};
  x.B = {std::move(b)};
  x.I = {std::move(i)};
  x.J = {std::move(j)};
  return x;
}

namespace {

bool finite(const CMat& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const cplx v = m(i, j);
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    }
  return true;
}

void check_block(std::vector<Violation>& out, const std::string& where, const CMat& m,
                 Eigen::Index rows, Eigen::Index cols) {
  if (m.rows() != rows || m.cols() != cols) {
    std::ostringstream os;
    os << "expected shape " << rows << "x" << cols << ", found " << m.rows() << "x"
       << m.cols();
    out.push_back({where, os.str()});
  } else if (!finite(m)) {
    out.push_back({where, "non-finite entry"});
  }
}

}  // namespace

std::vector<Violation> validate_representation(const Quiver& q, const DimensionData& d,
                                               const Representation& x) {
  std::vector<Violation> out;
  if (d.dimV.size() != q.vertices.size() || d.dimW.size() != q.vertices.size()) {
    out.push_back({"global", "dimension data does not cover the vertex set"});
    return out;
  }
  if (x.A.size() != static_cast<size_t>(q.num_arrows()) ||
      x.B.size() != static_cast<size_t>(q.num_arrows())) {
    out.push_back({"global", "A/B block count differs from arrow count"});
    return out;
  }
  if (x.I.size() != static_cast<size_t>(q.num_vertices()) ||
      x.J.size() != static_cast<size_t>(q.num_vertices())) {
    out.push_back({"global", "I/J block count differs from vertex count"});
    return out;
  }
  for (int a = 0; a < q.num_arrows(); ++a) {
    const int t = d.dimV[q.tail_of(a)], h = d.dimV[q.head_of(a)];
    check_block(out, "arrow " + q.arrows[a].id + " (A)", x.A[a], h, t);
    check_block(out, "arrow " + q.arrows[a].id + " (B)", x.B[a], t, h);
  }
  for (int i = 0; i < q.num_vertices(); ++i) {
    check_block(out, "vertex " + q.vertices[i] + " (I)", x.I[i], d.dimV[i], d.dimW[i]);
    check_block(out, "vertex " + q.vertices[i] + " (J)", x.J[i], d.dimW[i], d.dimV[i]);
  }
  return out;
}

namespace {

bool blocks_unitary(const std::vector<CMat>& blocks, double tol) {
  for (const CMat& m : blocks) {
    if (m.rows() != m.cols()) return false;
    if (m.rows() == 0) continue;
    if ((m.adjoint() * m - CMat::Identity(m.rows(), m.cols())).norm() > tol) return false;
  }
  return true;
}

std::vector<CMat> invert_blocks(const std::vector<CMat>& blocks) {
  std::vector<CMat> out;
  out.reserve(blocks.size());
  for (const CMat& m : blocks) {
    if (!is_invertible(m))
      throw PreconditionError("invalid group element: non-invertible block");
    out.push_back(m.rows() == 0 ? m : CMat(m.inverse()));
  }
  return out;
}

}  // namespace

GaugeElement GaugeElement::identity(const RepShapePtr& shape) {
  GaugeElement e;
  for (int i = 0; i < shape->q.num_vertices(); ++i)
    e.g.push_back(CMat::Identity(shape->dimV(i), shape->dimV(i)));
  e.unitary_flag = true;
  return e;
}

GaugeElement GaugeElement::from_blocks(std::vector<CMat> blocks, double tol) {
  GaugeElement e;
  e.g = std::move(blocks);
  for (const CMat& m : e.g)
    if (!is_invertible(m))
      throw PreconditionError("invalid group element: non-invertible block");
  e.unitary_flag = blocks_unitary(e.g, tol);
  return e;
}

GaugeElement GaugeElement::inverse() const {
  GaugeElement e;
  e.g = invert_blocks(g);
  e.unitary_flag = unitary_flag;
  return e;
}

FrameElement FrameElement::identity(const RepShapePtr& shape) {
  FrameElement e;
  for (int i = 0; i < shape->q.num_vertices(); ++i)
    e.h.push_back(CMat::Identity(shape->dimW(i), shape->dimW(i)));
  e.unitary_flag = true;
  return e;
}

FrameElement FrameElement::from_blocks(std::vector<CMat> blocks, double tol) {
  FrameElement e;
  e.h = std::move(blocks);
  for (const CMat& m : e.h)
    if (!is_invertible(m))
      throw PreconditionError("invalid group element: non-invertible block");
  e.unitary_flag = blocks_unitary(e.h, tol);
  return e;
}

FrameElement FrameElement::inverse() const {
  FrameElement e;
  e.h = invert_blocks(h);
  e.unitary_flag = unitary_flag;
  return e;
}

Representation act(const GaugeElement& g, const FrameElement& h, const Representation& x) {
  const auto& s = *x.shape;
  if (g.g.size() != static_cast<size_t>(s.q.num_vertices()) ||
      h.h.size() != static_cast<size_t>(s.q.num_vertices()))
    throw ShapeError("group element block count differs from vertex count");
  std::vector<CMat> ginv;
  std::vector<CMat> hinv;
  for (const CMat& m : g.g) {
    if (!is_invertible(m))
      throw PreconditionError("invalid group element: non-invertible block");
    ginv.push_back(m.rows() == 0 ? m : CMat(m.inverse()));
  }
  for (const CMat& m : h.h) {
    if (!is_invertible(m))
      throw PreconditionError("invalid group element: non-invertible block");
    hinv.push_back(m.rows() == 0 ? m : CMat(m.inverse()));
  }
  Representation y = x;
  for (int a = 0; a < s.q.num_arrows(); ++a) {
    const int t = s.q.tail_of(a), hd = s.q.head_of(a);
    y.A[a] = g.g[hd] * x.A[a] * ginv[t];
    y.B[a] = g.g[t] * x.B[a] * ginv[hd];
  }
  for (int i = 0; i < s.q.num_vertices(); ++i) {
    y.I[i] = g.g[i] * x.I[i] * h.h[i];
    y.J[i] = hinv[i] * x.J[i] * ginv[i];
  }
  return y;
}

Representation act(const GaugeElement& g, const Representation& x) {
  return act(g, FrameElement::identity(x.shape), x);
}

Representation random_representation(RepShapePtr shape, Rng& rng) {
  Representation x = Representation::zero(shape);
  for (auto& m : x.A) m = rng.cgaussian_matrix(m.rows(), m.cols());
  for (auto& m : x.B) m = rng.cgaussian_matrix(m.rows(), m.cols());
  for (auto& m : x.I) m = rng.cgaussian_matrix(m.rows(), m.cols());
  for (auto& m : x.J) m = rng.cgaussian_matrix(m.rows(), m.cols());
  return x;
}

Representation random_representation(RepShapePtr shape, std::uint64_t seed) {
  Rng rng(seed);
  return random_representation(std::move(shape), rng);
}

GaugeElement random_unitary_gauge(const RepShapePtr& shape, Rng& rng) {
  std::vector<CMat> blocks;
  for (int i = 0; i < shape->q.num_vertices(); ++i)
    blocks.push_back(random_unitary(shape->dimV(i), rng));
  return GaugeElement::from_blocks(std::move(blocks));
}

FrameElement random_unitary_frame(const RepShapePtr& shape, Rng& rng) {
  std::vector<CMat> blocks;
  for (int i = 0; i < shape->q.num_vertices(); ++i)
    blocks.push_back(random_unitary(shape->dimW(i), rng));
  return FrameElement::from_blocks(std::move(blocks));
}

}  // namespace qhk
