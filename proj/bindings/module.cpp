#include "clusterwalk/basis.hpp"
#include "clusterwalk/expansion.hpp"
#include "clusterwalk/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace clusterwalk;

namespace {

Triangulation named_triangulation(const MarkedSurface& s, const std::string& spec) {
    if (spec.empty() || spec == "standard" || spec == "fan")
        return s.is_polygon() ? fan_triangulation(s) : standard_annulus_triangulation(s);
    if (spec.rfind("wrap:", 0) == 0) return wrap_triangulation(s, {}, std::stoi(spec.substr(5))).t;
    throw std::invalid_argument("unknown triangulation spec: " + spec);
}

py::dict poly_to_dict(const LaurentPoly& p) {
    py::list terms;
    for (const auto& [e, c] : p.terms()) {
        py::dict term;
        term["exponents"] = e;
        term["coeff"] = c.str();
        terms.append(term);
    }
    py::dict out;
    out["num_vars"] = p.num_vars();
    out["terms"] = terms;
    out["text"] = to_text(p);
    return out;
}

LaurentPoly expand_spec(const std::string& surface, const std::string& curve,
                        const std::string& triangulation) {
    const MarkedSurface s = MarkedSurface::parse(surface);
    const Triangulation t = named_triangulation(s, triangulation);
    const Curve g = Curve::parse(curve);
    return g.is_loop() ? expand_loop(t, g.m) : expand_curve(t, g);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact cluster-algebra computations on polygons and annuli";

    m.def(
        "expand",
        [](const std::string& surface, const std::string& curve,
           const std::string& triangulation) {
            return poly_to_dict(expand_spec(surface, curve, triangulation));
        },
        py::arg("surface"), py::arg("curve"), py::arg("triangulation") = "standard",
        "Laurent expansion of a curve (or loop z<m>) in the chosen cluster.");

    m.def(
        "expand_text",
        [](const std::string& surface, const std::string& curve,
           const std::string& triangulation) {
            return to_text(expand_spec(surface, curve, triangulation));
        },
        py::arg("surface"), py::arg("curve"), py::arg("triangulation") = "standard");

    m.def(
        "expand_collection",
        [](const std::string& surface, const std::string& collection,
           const std::string& triangulation) {
            const MarkedSurface s = MarkedSurface::parse(surface);
            const Triangulation t = named_triangulation(s, triangulation);
            return poly_to_dict(expand_collection(t, Collection::parse(s, collection)));
        },
        py::arg("surface"), py::arg("collection"), py::arg("triangulation") = "standard");

    m.def(
        "walks",
        [](const std::string& surface, const std::string& curve,
           const std::string& triangulation) {
            const MarkedSurface s = MarkedSurface::parse(surface);
            const Triangulation t = named_triangulation(s, triangulation);
            const Curve g = Curve::parse(curve);
            std::vector<std::string> out;
            for (const auto& w : g.is_loop() ? enumerate_loop_walks(t, g.m)
                                             : enumerate_arc_walks(t, g))
                out.push_back(walk_to_string(w));
            return out;
        },
        py::arg("surface"), py::arg("curve"), py::arg("triangulation") = "standard",
        "Coloured walks in the paper-style inline notation.");

    m.def(
        "triangulation_arcs",
        [](const std::string& surface, const std::string& triangulation) {
            const MarkedSurface s = MarkedSurface::parse(surface);
            std::vector<std::string> out;
            for (const Curve& g : named_triangulation(s, triangulation).arcs)
                out.push_back(g.to_string());
            return out;
        },
        py::arg("surface"), py::arg("triangulation") = "standard");

    m.def(
        "flip",
        [](const std::string& surface, const std::vector<std::string>& arcs, int k) {
            Triangulation t;
            t.surface = MarkedSurface::parse(surface);
            for (const auto& a : arcs) t.arcs.push_back(Curve::parse(a));
            if (k < 1 || k > t.rank()) throw std::out_of_range("flip: 1-based index k");
            std::vector<std::string> out;
            for (const Curve& g : flip(t, k - 1).arcs) out.push_back(g.to_string());
            return out;
        },
        py::arg("surface"), py::arg("arcs"), py::arg("k"),
        "Flip the k-th arc (1-based) of the given triangulation.");

    m.def(
        "exchange_matrix",
        [](const std::string& surface, const std::string& triangulation) {
            const MarkedSurface s = MarkedSurface::parse(surface);
            return exchange_matrix(named_triangulation(s, triangulation));
        },
        py::arg("surface"), py::arg("triangulation") = "standard");

    m.def(
        "exchange_graph_size",
        [](const std::string& surface, int radius) {
            const ExchangeGraph g = exchange_graph(MarkedSurface::parse(surface), radius);
            return py::make_tuple(g.vertices.size(), g.edges.size());
        },
        py::arg("surface"), py::arg("radius") = 3,
        "(vertex count, edge count) of the flip graph.");

    m.def(
        "collections",
        [](const std::string& surface, long max_weight, int max_size, bool allow_loops) {
            std::vector<std::string> out;
            for (const Collection& c :
                 enumerate_collections(MarkedSurface::parse(surface), max_weight, max_size,
                                       allow_loops))
                out.push_back(c.to_string());
            return out;
        },
        py::arg("surface"), py::arg("max_weight"), py::arg("max_size"),
        py::arg("allow_loops") = true);

    m.def(
        "decompose_product",
        [](const std::string& surface, const std::vector<std::string>& factors,
           const std::string& triangulation) {
            const MarkedSurface s = MarkedSurface::parse(surface);
            const Triangulation t = named_triangulation(s, triangulation);
            LaurentPoly y = LaurentPoly::constant(t.rank(), 1);
            for (const auto& f : factors) y *= expand_collection(t, Collection::parse(s, f));
            const Decomposition d = decompose(y, t, default_candidates(y, t));
            py::list coeffs;
            for (const auto& [c, v] : d.coefficients)
                coeffs.append(py::make_tuple(c.to_string(), v.str()));
            py::dict out;
            out["coefficients"] = coeffs;
            out["exact"] = d.exact();
            return out;
        },
        py::arg("surface"), py::arg("factors"), py::arg("triangulation") = "standard",
        "Decompose a product of collection expansions in the basis.");

    m.def(
        "chebyshev",
        [](int m) {
            std::vector<std::string> out;
            for (const Int& c : chebyshev(m).coeffs) out.push_back(c.str());
            return out;
        },
        py::arg("m"), "Coefficients of F_m, constant term first.");

    m.def(
        "verify",
        [](const std::string& suite) {
            py::list out;
            for (const Report& r : run_suites(suite)) {
                py::dict d;
                d["suite"] = r.suite;
                d["total"] = r.total;
                d["passed"] = r.passed;
                d["ok"] = r.ok();
                d["failures"] = r.failures;
                out.append(d);
            }
            return out;
        },
        py::arg("suite") = "all", "Run verification suites by name.");
}
