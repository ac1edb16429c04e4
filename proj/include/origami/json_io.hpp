// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <json.hpp>

#include "origami/axioms.hpp"
#include "origami/constructions.hpp"
#include "origami/flatfold.hpp"
#include "origami/fold_algebra.hpp"
#include "origami/treemaker.hpp"

namespace origami::io {

using Json = nlohmann::ordered_json;

// Numbers are written with 12 digits after the leading one, so a value
// read back differs by at most 5e-13 relative.
double round_json(double v);

Json to_json(Point p);
Json to_json(const Line& l);
Json to_json(AxiomId id, const FoldSet& folds);
Json to_json(const CubicSolution& sol);
Json to_json(const ConstructionTrace& trace);
Json to_json(const FlatFoldVerdict& verdict);
Json to_json(const Layout& layout, const ActivePathSet& paths, const std::vector<Polygon>& polygons);

// Readers throw InvalidInput on schema violations.
Point point_from_json(const Json& j);
Line line_from_json(const Json& j);  // canonicalized on read
AxiomInput axiom_input_from_json(AxiomId id, const Json& j);
CubicSolution cubic_solution_from_json(const Json& j);
CreaseVertex vertex_from_json(const Json& j);
WeightedTree tree_from_json(const Json& j);
Layout layout_from_json(const Json& j);
ActivePathSet active_paths_from_json(const Json& j);

}  // namespace origami::io
