#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "dtlab/coreset.hpp"
#include "dtlab/dtree.hpp"
#include "dtlab/gadget.hpp"
#include "dtlab/graph.hpp"
#include "dtlab/harness.hpp"
#include "dtlab/minimize.hpp"
#include "dtlab/reduction.hpp"

namespace dtlab {

using Json = nlohmann::json;

// Graphs: "n m" followed by m lines "u v", or a JSON object {n, edges}.
// parse_graph accepts either form.
Graph parse_graph(const std::string& text);
std::string format_graph(const Graph& g);
Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

// Trees: {"leaf": b} | {"var": i, "zero": ..., "one": ...}.
Json tree_to_json(const DecisionTree& t);
DecisionTree tree_from_json(const Json& j);
// Internal nodes are coloured by role; with a layout, labels read v_i^(j).
std::string tree_to_dot(const DecisionTree& t, const std::optional<GadgetIndex>& layout = std::nullopt);

// Point sets: "N count", then "bits label tag" per point.
LabeledPointSet parse_point_set(const std::string& text);
std::string format_point_set(const LabeledPointSet& d);
// Distributions add a rational mass column: "bits label tag p/q".
Distribution parse_distribution(const std::string& text);
std::string format_distribution(const Distribution& d);

Json rational_to_json(const Rational& r);  // "p/q" string
std::string format_vertex_set(const VertexSet& s);
Json vertex_set_to_json(const VertexSet& s);

Json to_json(const ConstructionReport& r);
Json to_json(const MinimizeResult& r);
Json to_json(const ParetoFront& f);
Json to_json(const ReductionParams& p);
Json to_json(const DeciderReport& r);
Json to_json(const DtminReport& r);
Json to_json(const CoresetClaimsReport& r);
Json to_json(const ConstantErrorReport& r);
Json to_json(const DistillationWitness& w);

std::string read_file(const std::string& path);  // "-" reads stdin

}  // namespace dtlab
