#pragma once

#include "clusterwalk/basis.hpp"
#include "clusterwalk/expansion.hpp"

#include <json.hpp>

namespace clusterwalk {

// JSON wire formats. A polynomial is {numVars, terms:[{exponents, coeff}]}
// with terms sorted lexicographically and coefficients as decimal strings.

nlohmann::json poly_to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const nlohmann::json& j);

nlohmann::json triangulation_to_json(const Triangulation& t);
Triangulation triangulation_from_json(const nlohmann::json& j);

nlohmann::json walks_to_json(const Triangulation& t, const std::vector<ColouredWalk>& walks);

nlohmann::json collection_to_json(const Collection& c);
nlohmann::json decomposition_to_json(const Decomposition& d);

nlohmann::json report_to_json(const Report& r);

nlohmann::json graph_to_json(const ExchangeGraph& g);

/// Named triangulation specs: "fan", "standard", "wrap:<r>", or a path to
/// a triangulation JSON file.
Triangulation resolve_triangulation(const MarkedSurface& s, const std::string& spec);

}  // namespace clusterwalk
