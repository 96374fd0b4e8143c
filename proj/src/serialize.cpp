#include "quiverhk/serialize.hpp"

namespace qhk {

json matrix_to_json(const CMat& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

CMat matrix_from_json(const json& j, Eigen::Index rows, Eigen::Index cols) {
  if (!j.is_array()) throw ShapeError("matrix must be an array of rows");
  CMat m(rows, cols);
  if (static_cast<Eigen::Index>(j.size()) != rows)
    throw ShapeError("matrix has wrong row count");
  for (Eigen::Index i = 0; i < rows; ++i) {
    const json& row = j[static_cast<size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
      throw ShapeError("matrix has wrong column count");
    for (Eigen::Index c = 0; c < cols; ++c) {
      const json& e = row[static_cast<size_t>(c)];
      if (!e.is_array() || e.size() != 2) throw ShapeError("complex entry must be [re, im]");
      m(i, c) = cplx(e[0].get<double>(), e[1].get<double>());
    }
  }
  return m;
}

json quiver_to_json(const Quiver& q) {
  json arrows = json::array();
  for (const Arrow& a : q.arrows)
    arrows.push_back({{"id", a.id}, {"tail", a.tail}, {"head", a.head}});
  return {{"vertices", q.vertices}, {"arrows", std::move(arrows)}};
}

Quiver quiver_from_json(const json& j) {
  Quiver q;
  q.vertices = j.at("vertices").get<std::vector<std::string>>();
  for (const json& a : j.at("arrows"))
    q.arrows.push_back({a.at("id").get<std::string>(), a.at("tail").get<std::string>(),
                        a.at("head").get<std::string>()});
  q.finalize();
  return q;
}

json dims_to_json(const Quiver& q, const DimensionData& d) {
  json v = json::object(), w = json::object();
  for (int i = 0; i < q.num_vertices(); ++i) {
    v[q.vertices[i]] = d.dimV[i];
    w[q.vertices[i]] = d.dimW[i];
  }
  return {{"V", std::move(v)}, {"W", std::move(w)}};
}

DimensionData dims_from_json(const Quiver& q, const json& j) {
  DimensionData d;
  for (int i = 0; i < q.num_vertices(); ++i) {
    d.dimV.push_back(j.at("V").at(q.vertices[i]).get<int>());
    d.dimW.push_back(j.at("W").at(q.vertices[i]).get<int>());
  }
  return d;
}

json rep_to_json(const Representation& x) {
  const auto& s = *x.shape;
  json a = json::object(), b = json::object(), i = json::object(), jj = json::object();
  for (int k = 0; k < s.q.num_arrows(); ++k) {
    a[s.q.arrows[k].id] = matrix_to_json(x.A[k]);
    b[s.q.arrows[k].id] = matrix_to_json(x.B[k]);
  }
  for (int k = 0; k < s.q.num_vertices(); ++k) {
    i[s.q.vertices[k]] = matrix_to_json(x.I[k]);
    jj[s.q.vertices[k]] = matrix_to_json(x.J[k]);
  }
  return {{"A", std::move(a)}, {"B", std::move(b)}, {"I", std::move(i)}, {"J", std::move(jj)}};
}

Representation rep_from_json(const RepShapePtr& shape, const json& j) {
  const auto& s = *shape;
  Representation x = Representation::zero(shape);
  for (int k = 0; k < s.q.num_arrows(); ++k) {
    const std::string& id = s.q.arrows[k].id;
    x.A[k] = matrix_from_json(j.at("A").at(id), s.dimV(s.q.head_of(k)), s.dimV(s.q.tail_of(k)));
    x.B[k] = matrix_from_json(j.at("B").at(id), s.dimV(s.q.tail_of(k)), s.dimV(s.q.head_of(k)));
  }
  for (int k = 0; k < s.q.num_vertices(); ++k) {
    const std::string& id = s.q.vertices[k];
    x.I[k] = matrix_from_json(j.at("I").at(id), s.dimV(k), s.dimW(k));
    x.J[k] = matrix_from_json(j.at("J").at(id), s.dimW(k), s.dimV(k));
  }
  return x;
}

namespace {

json blocks_to_json(const Quiver& q, const std::vector<CMat>& blocks) {
  json out = json::object();
  for (int i = 0; i < q.num_vertices(); ++i) out[q.vertices[i]] = matrix_to_json(blocks[i]);
  return out;
}

std::vector<CMat> blocks_from_json(const Quiver& q, const json& j,
                                   const std::vector<int>& dims) {
  std::vector<CMat> out;
  for (int i = 0; i < q.num_vertices(); ++i)
    out.push_back(matrix_from_json(j.at(q.vertices[i]), dims[i], dims[i]));
  return out;
}

}  // namespace

json gauge_to_json(const Quiver& q, const GaugeElement& g) { return blocks_to_json(q, g.g); }

GaugeElement gauge_from_json(const RepShapePtr& shape, const json& j) {
  return GaugeElement::from_blocks(blocks_from_json(shape->q, j, shape->d.dimV));
}

json frame_to_json(const Quiver& q, const FrameElement& h) { return blocks_to_json(q, h.h); }

FrameElement frame_from_json(const RepShapePtr& shape, const json& j) {
  return FrameElement::from_blocks(blocks_from_json(shape->q, j, shape->d.dimW));
}

json spec_to_json(const Quiver& q, const InvolutionSpec& spec) {
  json word = json::array();
  for (const WordLetter& w : spec.word) {
    json entry = {{"letter", letter_name(w.kind)}};
    if (w.kind == Letter::c) {
      json gam = json::object();
      for (int a = 0; a < q.num_arrows(); ++a) gam[q.arrows[a].id] = w.gamma->arrow_sign[a];
      for (int i = 0; i < q.num_vertices(); ++i) gam[q.vertices[i]] = w.gamma->vertex_sign[i];
      entry["gamma"] = std::move(gam);
    }
    if (w.kind == Letter::d) {
      json del = json::object();
      for (int a = 0; a < q.num_arrows(); ++a) {
        const DeltaParam& p = w.delta->arrow_param[a];
        del[q.arrows[a].id] = {{"t", p.t}, {"z", json::array({p.z.real(), p.z.imag()})}};
      }
      for (int i = 0; i < q.num_vertices(); ++i)
        del[q.vertices[i]] = {{"t", w.delta->vertex_t[i]}};
      entry["delta"] = std::move(del);
    }
    word.push_back(std::move(entry));
  }
  return {{"word", std::move(word)},
          {"g", gauge_to_json(q, spec.g)},
          {"h", frame_to_json(q, spec.h)}};
}

InvolutionSpec spec_from_json(const RepShapePtr& shape, const json& j) {
  const Quiver& q = shape->q;
  InvolutionSpec spec;
  for (const json& entry : j.at("word")) {
    const std::string letter = entry.at("letter").get<std::string>();
    WordLetter w{};
    if (letter == "b") {
      w.kind = Letter::b;
    } else if (letter == "c") {
      w.kind = Letter::c;
      GammaAssignment gam;
      const json& g = entry.at("gamma");
      for (int a = 0; a < q.num_arrows(); ++a)
        gam.arrow_sign.push_back(g.at(q.arrows[a].id).get<int>());
      for (int i = 0; i < q.num_vertices(); ++i)
        gam.vertex_sign.push_back(g.at(q.vertices[i]).get<int>());
      w.gamma = std::move(gam);
    } else if (letter == "d") {
      w.kind = Letter::d;
      DeltaAssignment del;
      const json& dd = entry.at("delta");
      for (int a = 0; a < q.num_arrows(); ++a) {
        const json& p = dd.at(q.arrows[a].id);
        DeltaParam param;
        param.t = p.at("t").get<double>();
        if (p.contains("z"))
          param.z = cplx(p.at("z")[0].get<double>(), p.at("z")[1].get<double>());
        del.arrow_param.push_back(param);
      }
      for (int i = 0; i < q.num_vertices(); ++i)
        del.vertex_t.push_back(dd.at(q.vertices[i]).at("t").get<double>());
      w.delta = std::move(del);
    } else if (letter == "e") {
      w.kind = Letter::e;
    } else {
      throw ShapeError("unknown involution letter: " + letter);
    }
    spec.word.push_back(std::move(w));
  }
  spec.g = gauge_from_json(shape, j.at("g"));
  spec.h = frame_from_json(shape, j.at("h"));
  spec.validate(q);
  return spec;
}

json moment_values_to_json(const Quiver& q, const MomentValues& m) {
  return {{"mu1", blocks_to_json(q, m.mu1)},
          {"mu2", blocks_to_json(q, m.mu2)},
          {"mu3", blocks_to_json(q, m.mu3)},
          {"muC", blocks_to_json(q, m.muC)}};
}

json bundle_to_json(const Bundle& b) {
  const auto& s = *b.shape;
  json j = {{"quiver", quiver_to_json(s.q)},
            {"dims", dims_to_json(s.q, s.d)},
            {"rep", rep_to_json(b.x)}};
  if (b.spec) j["spec"] = spec_to_json(s.q, *b.spec);
  if (b.name) j["name"] = *b.name;
  if (b.expected) {
    json e = {{"adhm_zero", b.expected->adhm_zero},
              {"regular", b.expected->regular},
              {"brane_type", b.expected->brane_type},
              {"fixed", b.expected->fixed}};
    if (b.expected->complex_dim) e["complex_dim"] = *b.expected->complex_dim;
    j["expected"] = std::move(e);
  }
  return j;
}

Bundle bundle_from_json(const json& j) {
  Bundle b;
  Quiver q = quiver_from_json(j.at("quiver"));
  DimensionData d = dims_from_json(q, j.at("dims"));
  b.shape = make_shape(std::move(q), std::move(d));
  b.x = rep_from_json(b.shape, j.at("rep"));
  if (j.contains("spec")) b.spec = spec_from_json(b.shape, j.at("spec"));
  if (j.contains("name")) b.name = j.at("name").get<std::string>();
  if (j.contains("expected")) {
    Expected e;
    const json& je = j.at("expected");
    e.adhm_zero = je.at("adhm_zero").get<bool>();
    e.regular = je.at("regular").get<bool>();
    e.brane_type = je.at("brane_type").get<std::string>();
    e.fixed = je.at("fixed").get<bool>();
    if (je.contains("complex_dim")) e.complex_dim = je.at("complex_dim").get<int>();
    b.expected = std::move(e);
  }
  return b;
}

json entry_to_json(const CatalogEntry& e) {
  Bundle b;
  b.shape = e.x.shape;
  b.x = e.x;
  b.spec = e.spec;
  b.expected = e.expected;
  b.name = e.name;
  return bundle_to_json(b);
}

}  // namespace qhk
