#pragma once

#include "qp/flip_graph.hpp"
#include "qp/lab.hpp"
#include "qp/potential.hpp"
#include "qp/toric.hpp"

#include <json.hpp>

#include <string>

namespace qp {

using Json = nlohmann::json;

Json to_json(const Quiver& q);
Quiver quiver_from_json(const Json& j);

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const Potential& w);
Potential potential_from_json(const Json& j);

// {"quiver": ..., "potential": ...}
Json to_json(const QwP& p);
QwP qwp_from_json(const Json& j);

Json to_json(const Triangulation& t);
Triangulation triangulation_from_json(const Json& j);

Json to_json(const LabelledQuiver& lq);
LabelledQuiver labelled_quiver_from_json(const Json& j);

Json to_json(const FlipGraph& fg);
std::string to_dot(const FlipGraph& fg);

Json to_json(const QuiverSet& qs);
Json to_json(const SearchReport& r);
Json to_json(const SamplingStats& s);
std::string to_csv(const SamplingStats& s);

Json error_json(const std::string& code, const std::string& detail);

// Throws InvalidJson with the parse or shape error.
Json parse_json(const std::string& text);

} // namespace qp
