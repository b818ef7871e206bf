#pragma once

#include "urysohn/check_report.hpp"
#include "urysohn/construction.hpp"
#include "urysohn/distance_set.hpp"
#include "urysohn/metric_space.hpp"
#include "urysohn/rgraph.hpp"
#include "urysohn/spaces.hpp"

#include <json.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace urysohn {

/// Insertion-ordered, so emitted documents keep a fixed field order.
using Json = nlohmann::ordered_json;

// Every reader throws ParseError on a malformed document. Validation of the
// decoded value (metric axioms, membership) is left to the constructors.

Json to_json(const Rational& value);
/// Accepts "p/q" strings and JSON integers.
Rational rational_from_json(const Json& j);

/// {"intervals": [["lo", "hi"], ...]}
Json to_json(const RSet& set);
RSet rset_from_json(const Json& j);

/// {"verdict", "samples", "witness": {name: value}, "points", "lhs", "rhs",
///  "method", "notes"}; lhs and rhs are omitted when absent.
Json to_json(const CheckReport& report);
CheckReport report_from_json(const Json& j);

/// {"set", "vertices", "edges": [["u", "v", "w"], ...]}
Json to_json(const RGraph& graph);
RGraph graph_from_json(const Json& j);

/// {"set", "points", "dist": [["0", "1"], ...]}
Json to_json(const FiniteMetricSpace& space);
FiniteMetricSpace space_from_json(const Json& j);

struct BridgeDocument {
  BridgeInput input;
  std::size_t depth = 0;
};

/// {"set", "U", "V", "I", "r", "depth"}; the depth defaults to 0 when absent.
Json to_json(const BridgeDocument& doc);
BridgeDocument bridge_from_json(const Json& j);

/// {"parts": {"p0": 0, ...}}, one entry per point of the space.
Json coloring_to_json(const FiniteMetricSpace& space, const Coloring& coloring);
Coloring coloring_from_json(const Json& j, const FiniteMetricSpace& space);

/// {"values": {"p0": "p/q", ...}}, one entry per point of the space.
Json function_to_json(const FiniteMetricSpace& space, const std::vector<Rational>& values);
std::vector<Rational> function_from_json(const Json& j, const FiniteMetricSpace& space);

/// Reads and parses a file; throws ParseError when it cannot.
Json read_json_file(const std::string& path);

}  // namespace urysohn
