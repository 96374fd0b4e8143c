#pragma once

// JSON encoding of quivers, dimension data, representations, group elements,
// involution specs and catalog bundles. A complex entry is a two-element
// array [re, im]; a matrix is an array of rows. Representations are keyed by
// arrow and vertex ids.

#include <optional>
#include <string>

#include <json.hpp>

#include "quiverhk/catalog.hpp"
#include "quiverhk/hk_geometry.hpp"
#include "quiverhk/involutions.hpp"
#include "quiverhk/quiver.hpp"

namespace qhk {

using json = nlohmann::json;

json matrix_to_json(const CMat& m);
CMat matrix_from_json(const json& j, Eigen::Index rows, Eigen::Index cols);

json quiver_to_json(const Quiver& q);
Quiver quiver_from_json(const json& j);

json dims_to_json(const Quiver& q, const DimensionData& d);
DimensionData dims_from_json(const Quiver& q, const json& j);

json rep_to_json(const Representation& x);
Representation rep_from_json(const RepShapePtr& shape, const json& j);

json gauge_to_json(const Quiver& q, const GaugeElement& g);
GaugeElement gauge_from_json(const RepShapePtr& shape, const json& j);
json frame_to_json(const Quiver& q, const FrameElement& h);
FrameElement frame_from_json(const RepShapePtr& shape, const json& j);

json spec_to_json(const Quiver& q, const InvolutionSpec& spec);
InvolutionSpec spec_from_json(const RepShapePtr& shape, const json& j);

json moment_values_to_json(const Quiver& q, const MomentValues& m);

// A self-contained document: quiver + dims + rep, optionally spec, expected
// record and name. This is what the catalog writes and the CLI reads.
struct Bundle {
  RepShapePtr shape;
  Representation x;
  std::optional<InvolutionSpec> spec;
  std::optional<Expected> expected;
  std::optional<std::string> name;
};

json bundle_to_json(const Bundle& b);
Bundle bundle_from_json(const json& j);

json entry_to_json(const CatalogEntry& e);

}  // namespace qhk
