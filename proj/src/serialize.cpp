#include "clusterwalk/serialize.hpp"

#include <fstream>

namespace clusterwalk {

using nlohmann::json;

json poly_to_json(const LaurentPoly& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) {
        terms.push_back({{"exponents", e}, {"coeff", c.str()}});
    }
    return json{{"numVars", p.num_vars()}, {"terms", terms}};
}

LaurentPoly poly_from_json(const json& j) {
    LaurentPoly p(j.at("numVars").get<int>());
    for (const auto& t : j.at("terms")) {
        const auto exps = t.at("exponents").get<std::vector<int>>();
        p.add_term(exps, Int(t.at("coeff").get<std::string>()));
    }
    return p;
}

json triangulation_to_json(const Triangulation& t) {
    json arcs = json::array();
    for (const Curve& g : t.arcs) arcs.push_back(g.to_string());
    return json{{"surface", t.surface.to_string()}, {"arcs", arcs}};
}

Triangulation triangulation_from_json(const json& j) {
    Triangulation t;
    t.surface = MarkedSurface::parse(j.at("surface").get<std::string>());
    for (const auto& a : j.at("arcs")) t.arcs.push_back(Curve::parse(a.get<std::string>()));
    return t;
}

json walks_to_json(const Triangulation& t, const std::vector<ColouredWalk>& walks) {
    json arr = json::array();
    for (const ColouredWalk& w : walks) {
        arr.push_back({{"walk", walk_to_string(w)},
                       {"monomial", poly_to_json(walk_monomial(t, w))}});
    }
    return json{{"count", walks.size()}, {"walks", arr}};
}

json collection_to_json(const Collection& c) {
    json members = json::array();
    for (const Curve& g : c.arcs) members.push_back(g.to_string());
    if (c.has_loop()) members.push_back("z" + std::to_string(c.loop_m));
    return json{{"surface", c.surface.to_string()}, {"members", members}};
}

json decomposition_to_json(const Decomposition& d) {
    json coeffs = json::array();
    for (const auto& [c, v] : d.coefficients)
        coeffs.push_back({{"collection", c.to_string()}, {"coeff", v.str()}});
    return json{{"coefficients", coeffs},
                {"residual", poly_to_json(d.residual)},
                {"exact", d.exact()}};
}

json report_to_json(const Report& r) {
    return json{{"suite", r.suite},
                {"surface", r.surface},
                {"parameters", r.parameters},
                {"checks", {{"total", r.total}, {"passed", r.passed}}},
                {"failures", r.failures}};
}

json graph_to_json(const ExchangeGraph& g) {
    json verts = json::array();
    for (const Triangulation& t : g.vertices) verts.push_back(triangulation_to_json(t));
    json edges = json::array();
    for (const auto& [a, b] : g.edges) edges.push_back({a, b});
    return json{{"vertexCount", g.vertices.size()},
                {"edgeCount", g.edges.size()},
                {"vertices", verts},
                {"edges", edges}};
}

Triangulation resolve_triangulation(const MarkedSurface& s, const std::string& spec) {
    if (spec.empty() || spec == "standard" || spec == "fan")
        return s.is_polygon() ? fan_triangulation(s) : standard_annulus_triangulation(s);
    if (spec.rfind("wrap:", 0) == 0) {
        const int r = std::stoi(spec.substr(5));
        return wrap_triangulation(s, {}, r).t;
    }
    std::ifstream in(spec);
    if (!in) throw std::invalid_argument("cannot open triangulation file: " + spec);
    json j;
    in >> j;
    Triangulation t = triangulation_from_json(j);
    if (!(t.surface == s))
        throw std::invalid_argument("triangulation surface mismatch: " + spec);
    return t;
}

}  // namespace clusterwalk
