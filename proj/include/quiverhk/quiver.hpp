#pragma once

// Quiver combinatorics, per-vertex dimension data, representation storage,
// gauge/frame group elements and their joint action on representations.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "quiverhk/types.hpp"

namespace qhk {

class Rng;

struct Arrow {
  std::string id;
  std::string tail;
  std::string head;
};

// Vertices and arrows keep their declared order; that order fixes block
// layout everywhere (flattening, serialization, random sampling).
struct Quiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  int vertex_index(const std::string& id) const;      // -1 if absent
  int arrow_index(const std::string& id) const;       // -1 if absent
  int tail_of(int arrow) const { return tail_idx_[arrow]; }
  int head_of(int arrow) const { return head_idx_[arrow]; }
  bool is_loop(int arrow) const { return tail_idx_[arrow] == head_idx_[arrow]; }

  int num_vertices() const { return static_cast<int>(vertices.size()); }
  int num_arrows() const { return static_cast<int>(arrows.size()); }
  int num_loops() const;

  // Validates ids and endpoints, caches index tables. Must be called after
  // building by hand; the named constructors below already do it.
  void finalize();

  static Quiver jordan();  // one vertex "v", one loop "a"
  static Quiver make(std::vector<std::string> vertices, std::vector<Arrow> arrows);

 private:
  std::vector<int> tail_idx_, head_idx_;
};

struct DimensionData {
  std::vector<int> dimV;  // aligned with Quiver::vertices
  std::vector<int> dimW;
};

// Quiver plus dimensions; representations hold a shared immutable pointer to
// one of these so every operation can reach the combinatorics.
struct RepShape {
  Quiver q;
  DimensionData d;

  int dimV(int v) const { return d.dimV[v]; }
  int dimW(int v) const { return d.dimW[v]; }
  bool same_as(const RepShape& other) const;
};

using RepShapePtr = std::shared_ptr<const RepShape>;

RepShapePtr make_shape(Quiver q, DimensionData d);
RepShapePtr jordan_shape(int n, int r);

// The quadruple X = (A, B, I, J). A_a is dimV[head] x dimV[tail]; the
// reversed-arrow component B_a is dimV[tail] x dimV[head], keyed by the
// original arrow. I_i is dimV[i] x dimW[i], J_i is dimW[i] x dimV[i].
struct Representation {
  RepShapePtr shape;
  std::vector<CMat> A, B;  // per arrow
  std::vector<CMat> I, J;  // per vertex

  static Representation zero(RepShapePtr shape);
  double norm() const;  // Frobenius over all blocks

  Representation operator+(const Representation& o) const;
  Representation operator-(const Representation& o) const;
  Representation operator*(cplx s) const;
};

double distance(const Representation& x, const Representation& y);

// Convenience for the Jordan quiver.
Representation jordan_rep(CMat a, CMat b, CMat i, CMat j);

struct Violation {
  std::string where;    // arrow or vertex id, or "global"
  std::string message;  // expected vs found
};

std::vector<Violation> validate_representation(const Quiver& q, const DimensionData& d,
                                               const Representation& x);

struct GaugeElement {
  std::vector<CMat> g;  // per vertex, dimV[i] x dimV[i]
  bool unitary_flag = false;

  static GaugeElement identity(const RepShapePtr& shape);
  static GaugeElement from_blocks(std::vector<CMat> blocks, double tol = kStructTol);
  GaugeElement inverse() const;
};

struct FrameElement {
  std::vector<CMat> h;  // per vertex, dimW[i] x dimW[i]
  bool unitary_flag = false;

  static FrameElement identity(const RepShapePtr& shape);
  static FrameElement from_blocks(std::vector<CMat> blocks, double tol = kStructTol);
  FrameElement inverse() const;
};

// (g,h) . X = (g A g^-1, g B g^-1, g I h, h^-1 J g^-1)
Representation act(const GaugeElement& g, const FrameElement& h, const Representation& x);
Representation act(const GaugeElement& g, const Representation& x);  // h = 1

Representation random_representation(RepShapePtr shape, std::uint64_t seed);
Representation random_representation(RepShapePtr shape, Rng& rng);

GaugeElement random_unitary_gauge(const RepShapePtr& shape, Rng& rng);
FrameElement random_unitary_frame(const RepShapePtr& shape, Rng& rng);

}  // namespace qhk
