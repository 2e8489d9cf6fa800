#include "clusterwalk/serialize.hpp"
#include "clusterwalk/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace clusterwalk;
using nlohmann::json;

namespace {

struct CommonOpts {
    std::string surface;
    std::string triangulation = "standard";
    std::string format = "text";
    std::string output;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_triangulation = true) {
    cmd->add_option("--surface", opts.surface, "Surface spec, e.g. polygon:2 or annulus:1,3")
        ->required();
    if (with_triangulation)
        cmd->add_option("--triangulation", opts.triangulation,
                        "fan | standard | wrap:<r> | path to JSON");
    cmd->add_option("--format", opts.format, "json | text")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--output", opts.output, "Write output to FILE instead of stdout");
}

void emit(const CommonOpts& opts, const std::string& text) {
    if (opts.output.empty()) {
        std::cout << text << '\n';
    } else {
        std::ofstream out(opts.output);
        out << text << '\n';
    }
}

std::string render(const CommonOpts& opts, const json& j, const std::string& text) {
    return opts.format == "json" ? j.dump(2) : text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact cluster-algebra computations on polygons and annuli"};
    app.require_subcommand(1);

    CommonOpts expand_opts, flip_opts, walks_opts, basis_opts, dec_opts, verify_opts, graph_opts;

    auto* cmd_expand = app.add_subcommand("expand", "Laurent expansion of a curve or loop");
    std::string expand_curve_spec, expand_collection_spec;
    add_common(cmd_expand, expand_opts);
    cmd_expand->add_option("--curve", expand_curve_spec, "Curve spec, e.g. 'c 2-4' or z1");
    cmd_expand->add_option("--collection", expand_collection_spec,
                           "Collection spec, e.g. '{c 1-3, z2}'");

    auto* cmd_flip = app.add_subcommand("flip", "Flip one arc of a triangulation");
    int flip_index = 0;
    add_common(cmd_flip, flip_opts);
    cmd_flip->add_option("--k", flip_index, "1-based arc index to flip")->required();

    auto* cmd_walks = app.add_subcommand("walks", "List coloured walks for a curve or loop");
    std::string walks_curve_spec;
    add_common(cmd_walks, walks_opts);
    cmd_walks->add_option("--curve", walks_curve_spec, "Curve spec or z<m>")->required();

    auto* cmd_basis = app.add_subcommand("basis", "Enumerate basis collections");
    long basis_weight = 3;
    int basis_size = 3;
    bool basis_no_loops = false;
    add_common(cmd_basis, basis_opts, false);
    cmd_basis->add_option("--max-weight", basis_weight, "Crossing-weight bound");
    cmd_basis->add_option("--max-size", basis_size, "Member-count bound");
    cmd_basis->add_flag("--no-loops", basis_no_loops, "Exclude loop collections");

    auto* cmd_dec = app.add_subcommand("decompose", "Decompose a Laurent polynomial");
    std::string dec_poly_file, dec_collection_spec;
    long dec_weight = -1;
    add_common(cmd_dec, dec_opts);
    cmd_dec->add_option("--poly", dec_poly_file, "Polynomial JSON file");
    cmd_dec->add_option("--collection", dec_collection_spec,
                        "Collection whose expansion is decomposed (round-trip check)");
    cmd_dec->add_option("--max-weight", dec_weight,
                        "Override the default candidate weight bound");

    auto* cmd_verify = app.add_subcommand("verify", "Run a verification suite");
    std::string verify_suite = "all", verify_surface;
    int verify_max_m = 4;
    cmd_verify->add_option("--suite", verify_suite, "Suite name or 'all'");
    cmd_verify->add_option("--surface", verify_surface, "Restrict (chebyshev suite)");
    cmd_verify->add_option("--max-m", verify_max_m, "Loop bound (chebyshev suite)");
    cmd_verify->add_option("--format", verify_opts.format, "json | text")
        ->check(CLI::IsMember({"json", "text"}));
    cmd_verify->add_option("--output", verify_opts.output, "Write output to FILE");

    auto* cmd_graph = app.add_subcommand("graph", "Exchange graph (flips between clusters)");
    int graph_radius = 3;
    add_common(cmd_graph, graph_opts, false);
    cmd_graph->add_option("--radius", graph_radius, "Flip-ball radius (annulus only)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_expand->parsed()) {
            const MarkedSurface s = MarkedSurface::parse(expand_opts.surface);
            const Triangulation t = resolve_triangulation(s, expand_opts.triangulation);
            LaurentPoly p(t.rank());
            if (!expand_collection_spec.empty()) {
                const Collection c = Collection::parse(s, expand_collection_spec);
                if (auto rep = validate_collection(c); !rep.ok)
                    throw std::invalid_argument("invalid collection: " + rep.message);
                p = expand_collection(t, c);
            } else if (!expand_curve_spec.empty()) {
                const Curve g = Curve::parse(expand_curve_spec);
                p = g.is_loop() ? expand_loop(t, g.m) : expand_curve(t, g);
            } else {
                throw std::invalid_argument("expand: need --curve or --collection");
            }
            emit(expand_opts, render(expand_opts, poly_to_json(p), to_text(p)));
        } else if (cmd_flip->parsed()) {
            const MarkedSurface s = MarkedSurface::parse(flip_opts.surface);
            const Triangulation t = resolve_triangulation(s, flip_opts.triangulation);
            if (flip_index < 1 || flip_index > t.rank())
                throw std::invalid_argument("flip: --k out of range");
            const Triangulation f = flip(t, flip_index - 1);
            std::ostringstream text;
            for (int i = 0; i < f.rank(); ++i)
                text << (i ? "\n" : "") << (i + 1) << ": " << f.arcs[i].to_string();
            emit(flip_opts, render(flip_opts, triangulation_to_json(f), text.str()));
        } else if (cmd_walks->parsed()) {
            const MarkedSurface s = MarkedSurface::parse(walks_opts.surface);
            const Triangulation t = resolve_triangulation(s, walks_opts.triangulation);
            const Curve g = Curve::parse(walks_curve_spec);
            const auto walks = g.is_loop() ? enumerate_loop_walks(t, g.m)
                                           : enumerate_arc_walks(t, g);
            std::ostringstream text;
            for (const auto& w : walks) text << walk_to_string(w) << '\n';
            text << "count: " << walks.size();
            emit(walks_opts, render(walks_opts, walks_to_json(t, walks), text.str()));
        } else if (cmd_basis->parsed()) {
            const MarkedSurface s = MarkedSurface::parse(basis_opts.surface);
            const auto cols = enumerate_collections(s, basis_weight, basis_size, !basis_no_loops);
            json arr = json::array();
            std::ostringstream text;
            for (const Collection& c : cols) {
                arr.push_back(collection_to_json(c));
                text << c.to_string() << '\n';
            }
            text << "count: " << cols.size();
            emit(basis_opts, render(basis_opts, json{{"count", cols.size()}, {"collections", arr}},
                                    text.str()));
        } else if (cmd_dec->parsed()) {
            const MarkedSurface s = MarkedSurface::parse(dec_opts.surface);
            const Triangulation t = resolve_triangulation(s, dec_opts.triangulation);
            LaurentPoly y(t.rank());
            if (!dec_poly_file.empty()) {
                std::ifstream in(dec_poly_file);
                if (!in) throw std::invalid_argument("cannot open " + dec_poly_file);
                json j;
                in >> j;
                y = poly_from_json(j);
            } else if (!dec_collection_spec.empty()) {
                y = expand_collection(t, Collection::parse(s, dec_collection_spec));
            } else {
                throw std::invalid_argument("decompose: need --poly or --collection");
            }
            const auto candidates = dec_weight < 0
                                        ? default_candidates(y, t)
                                        : enumerate_collections(s, dec_weight, dec_weight + 2,
                                                                s.is_annulus());
            const Decomposition d = decompose(y, t, candidates);
            std::ostringstream text;
            bool first = true;
            for (const auto& [c, v] : d.coefficients) {
                text << (first ? "" : " + ") << v.str() << " * " << c.to_string();
                first = false;
            }
            if (first) text << "0";
            if (!d.exact()) text << "  [residual: " << to_text(d.residual) << "]";
            emit(dec_opts, render(dec_opts, decomposition_to_json(d), text.str()));
        } else if (cmd_verify->parsed()) {
            std::optional<std::string> surf;
            if (!verify_surface.empty()) surf = verify_surface;
            const auto reports = run_suites(verify_suite, surf, verify_max_m);
            bool all_ok = true;
            json arr = json::array();
            std::ostringstream text;
            for (const Report& r : reports) {
                all_ok &= r.ok();
                arr.push_back(report_to_json(r));
                text << (r.ok() ? "[PASS] " : "[FAIL] ") << r.suite << ": " << r.passed << "/"
                     << r.total << " checks";
                if (!r.ok()) text << " (first failure: " << r.failures.front() << ")";
                text << '\n';
            }
            text << (all_ok ? "all suites passed" : "some suites FAILED");
            emit(verify_opts, verify_opts.format == "json" ? arr.dump(2) : text.str());
            return all_ok ? 0 : 1;
        } else if (cmd_graph->parsed()) {
            const MarkedSurface s = MarkedSurface::parse(graph_opts.surface);
            const ExchangeGraph g = exchange_graph(s, graph_radius);
            std::ostringstream text;
            text << "vertices: " << g.vertices.size() << "\nedges: " << g.edges.size();
            emit(graph_opts, render(graph_opts, graph_to_json(g), text.str()));
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
