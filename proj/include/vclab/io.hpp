#pragma once

#include <string>

#include <json.hpp>

#include "vclab/density.hpp"
#include "vclab/relation.hpp"
#include "vclab/rooted_graph.hpp"
#include "vclab/set_system.hpp"
#include "vclab/ultrametric.hpp"

namespace vclab {

using Json = nlohmann::ordered_json;

Json to_json(const SetSystem& system);
Json to_json(const BiRelation& rel);
Json to_json(const FormulaSet& delta);
Json to_json(const RootedGraph& g);
Json to_json(const UltrametricSpace& space);
Json to_json(const UltrametricSpace& space, const Ball& ball);

SetSystem set_system_from_json(const Json& j);
BiRelation relation_from_json(const Json& j);
FormulaSet formula_set_from_json(const Json& j);
RootedGraph rooted_graph_from_json(const Json& j);
UltrametricSpace space_from_json(const Json& j);
Ball ball_from_json(const UltrametricSpace& space, const Json& j);

enum class InputKind { set_system, relation, formula_set, rooted_graph, space };

/// Decides the document type from its keys.
InputKind detect_kind(const Json& j);

/// {"slope", "intercept", "r2", "t_range", "classification"} plus a label
/// marking the slope as a finite-range proxy.
Json fit_report(const FitResult& fit, const GrowthClass& growth);

Json parse_json(const std::string& text);
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace vclab
