#include "clusterwalk/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace clusterwalk {

namespace {

LaurentPoly from_terms(int num_vars,
                       const std::vector<std::pair<std::vector<int>, int>>& terms) {
    LaurentPoly p(num_vars);
    for (const auto& [e, c] : terms) p.add_term(e, c);
    return p;
}

// Multiset of walk monomial exponent vectors, sorted for comparison.
std::vector<std::vector<int>> monomial_multiset(const Triangulation& t,
                                                const std::vector<ColouredWalk>& walks) {
    std::vector<std::vector<int>> out;
    for (const ColouredWalk& w : walks) {
        std::vector<int> e(t.rank(), 0);
        for (const WalkStep& s : w.steps) {
            if (s.is_boundary) continue;
            e[s.arc_index] += s.positive ? 1 : -1;
        }
        out.push_back(std::move(e));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<long> crossing_vector(const Triangulation& t, const Curve& g) {
    std::vector<long> v;
    for (const Curve& a : t.arcs) v.push_back(crossing_number(t.surface, a, g));
    return v;
}

std::vector<Curve> arcs_up_to_weight(const MarkedSurface& s, long weight_bound) {
    const Triangulation ref =
        s.is_polygon() ? fan_triangulation(s) : standard_annulus_triangulation(s);
    std::vector<Curve> out;
    for (const Curve& g : enumerate_arcs(s, static_cast<int>(weight_bound) + 2)) {
        long w = 0;
        for (const Curve& tau : ref.arcs) w += crossing_number(s, g, tau);
        if (w <= weight_bound) out.push_back(g);
    }
    return out;
}

std::vector<Triangulation> annulus_ball(const MarkedSurface& s, int radius) {
    return exchange_graph(s, radius).vertices;
}

}  // namespace

Report suite_kronecker() {
    Report rep;
    rep.suite = "kronecker";
    rep.surface = "annulus:1,1";
    rep.parameters = "m=1,2";
    const Triangulation t = standard_annulus_triangulation(MarkedSurface::annulus(1, 1));

    const auto w1 = enumerate_loop_walks(t, 1);
    rep.check(w1.size() == 3, "expected 3 coloured 1-walks, got " + std::to_string(w1.size()));
    const LaurentPoly z1 = expand_loop(t, 1);
    const LaurentPoly z1_expected =
        from_terms(2, {{{-1, 1}, 1}, {{1, -1}, 1}, {{-1, -1}, 1}});
    rep.check(z1 == z1_expected, "x_z mismatch: " + to_text(z1));

    const auto w2 = enumerate_loop_walks(t, 2);
    rep.check(w2.size() == 7, "expected 7 coloured 2-walks, got " + std::to_string(w2.size()));
    const LaurentPoly z2 = expand_loop(t, 2);
    rep.check(z2 == z1 * z1 - LaurentPoly::constant(2, 2),
              "x_z2 != x_z^2 - 2: " + to_text(z2));
    const LaurentPoly z2_expected = from_terms(
        2, {{{-2, 0}, 2}, {{0, -2}, 2}, {{-2, 2}, 1}, {{2, -2}, 1}, {{-2, -2}, 1}});
    rep.check(z2 == z2_expected, "x_z2 table mismatch: " + to_text(z2));
    return rep;
}

Report suite_a13_tables() {
    Report rep;
    rep.suite = "a13";
    rep.surface = "annulus:1,3";
    rep.parameters = "M1,N1,z";
    const Triangulation t = standard_annulus_triangulation(MarkedSurface::annulus(1, 3));
    const Curve m1 = Curve::peripheral(BoundarySide::Outer, 1, 4);
    const Curve n1 = Curve::peripheral(BoundarySide::Outer, 2, 2);

    auto sorted = [](std::vector<std::vector<int>> v) {
        std::sort(v.begin(), v.end());
        return v;
    };

    const auto mw = enumerate_arc_walks(t, m1);
    rep.check(mw.size() == 7, "expected 7 M1 walks, got " + std::to_string(mw.size()));
    rep.check(monomial_multiset(t, mw) ==
                  sorted({{1, 0, 0, -1},
                          {0, 0, -1, -1},
                          {0, -1, -1, 0},
                          {-1, -1, 0, 0},
                          {-1, 0, 0, 1},
                          {0, 1, -1, 0},
                          {0, 0, -1, 1}}),
              "M1 monomial table mismatch");

    const auto nw = enumerate_arc_walks(t, n1);
    rep.check(nw.size() == 2, "expected 2 N1 walks, got " + std::to_string(nw.size()));
    rep.check(monomial_multiset(t, nw) == sorted({{0, 1, -1, 0}, {0, 0, -1, 1}}),
              "N1 monomial table mismatch");

    const auto zw = enumerate_loop_walks(t, 1);
    rep.check(zw.size() == 5, "expected 5 z walks, got " + std::to_string(zw.size()));
    rep.check(monomial_multiset(t, zw) == sorted({{1, 0, 0, -1},
                                                  {0, 0, -1, -1},
                                                  {0, -1, -1, 0},
                                                  {-1, -1, 0, 0},
                                                  {-1, 0, 0, 1}}),
              "z monomial table mismatch");

    rep.check(expand_curve(t, m1) - expand_curve(t, n1) == expand_loop(t, 1),
              "x_M1 - x_N1 != x_z");
    rep.check(expand_loop_difference(t, 1) == expand_loop(t, 1),
              "expand_loop_difference mismatch");
    return rep;
}

Report suite_chebyshev(const std::optional<std::string>& surface, int max_m) {
    Report rep;
    rep.suite = "chebyshev";
    rep.parameters = "max_m=" + std::to_string(max_m);

    // F_m(t + 1/t) = t^m + t^-m, exact in one variable.
    for (int m = 0; m <= 20; ++m) {
        const LaurentPoly v = from_terms(1, {{{1}, 1}, {{-1}, 1}});
        const LaurentPoly lhs = chebyshev_eval(m, v);
        const LaurentPoly rhs = m == 0 ? LaurentPoly::constant(1, 2)
                                       : from_terms(1, {{{m}, 1}, {{-m}, 1}});
        rep.check(lhs == rhs, "F_" + std::to_string(m) + "(t+1/t) mismatch");
    }

    std::vector<std::string> names;
    if (surface)
        names = {*surface};
    else
        names = {"annulus:1,1", "annulus:1,2", "annulus:2,2", "annulus:1,3"};
    rep.surface = names.size() == 1 ? names.front() : "annuli";
    for (const std::string& name : names) {
        const MarkedSurface s = MarkedSurface::parse(name);
        const Triangulation t = standard_annulus_triangulation(s);
        const LaurentPoly z = expand_loop(t, 1);
        for (int m = 1; m <= max_m; ++m) {
            rep.check(expand_loop(t, m) == chebyshev_eval(m, z),
                      name + ": x_z" + std::to_string(m) + " != F_m(x_z)");
        }
    }
    return rep;
}

namespace {

void oracle_sweep(Report& rep, bool compare_denominators) {
    for (int n = 1; n <= 4; ++n) {
        const MarkedSurface s = MarkedSurface::polygon(n);
        const std::vector<Curve> arcs = enumerate_arcs(s, 0);
        for (const Triangulation& t : exchange_graph(s, -1).vertices) {
            if (compare_denominators) {
                for (const Curve& g : arcs) {
                    const LaurentPoly x = expand_curve(t, g);
                    const auto dv = denominator_vector(x);
                    const auto cv = crossing_vector(t, g);
                    bool same = dv.size() == cv.size();
                    for (std::size_t i = 0; same && i < dv.size(); ++i)
                        same = dv[i] == cv[i];
                    rep.check(same, s.to_string() + ": denominator/crossing mismatch for " +
                                        g.to_string());
                }
            } else {
                const auto oracle = oracle_expand_many(t, arcs);
                for (const Curve& g : arcs)
                    rep.check(expand_curve(t, g) == oracle.at(g.to_string()),
                              s.to_string() + ": walk/oracle mismatch for " + g.to_string() +
                                  " in " + canonical_key(t));
            }
        }
    }
    for (const char* name : {"annulus:1,1", "annulus:2,2"}) {
        const MarkedSurface s = MarkedSurface::parse(name);
        const std::vector<Curve> arcs = arcs_up_to_weight(s, 6);
        for (const Triangulation& t : annulus_ball(s, 3)) {
            if (compare_denominators) {
                for (const Curve& g : arcs) {
                    const LaurentPoly x = expand_curve(t, g);
                    const auto dv = denominator_vector(x);
                    const auto cv = crossing_vector(t, g);
                    bool same = dv.size() == cv.size();
                    for (std::size_t i = 0; same && i < dv.size(); ++i)
                        same = dv[i] == cv[i];
                    rep.check(same, std::string(name) + ": denominator/crossing mismatch for " +
                                        g.to_string());
                }
            } else {
                const auto oracle = oracle_expand_many(t, arcs);
                for (const Curve& g : arcs)
                    rep.check(expand_curve(t, g) == oracle.at(g.to_string()),
                              std::string(name) + ": walk/oracle mismatch for " + g.to_string() +
                                  " in " + canonical_key(t));
            }
        }
    }
}

}  // namespace

Report suite_oracle_equivalence() {
    Report rep;
    rep.suite = "oracle";
    rep.surface = "polygon:1..4, annulus:1,1, annulus:2,2";
    rep.parameters = "weight<=6 radius=3";
    oracle_sweep(rep, false);
    return rep;
}

Report suite_denominator_crossing() {
    Report rep;
    rep.suite = "denominator";
    rep.surface = "polygon:1..4, annulus:1,1, annulus:2,2";
    rep.parameters = "weight<=6 radius=3";
    oracle_sweep(rep, true);
    return rep;
}

Report suite_degree_lemmas() {
    Report rep;
    rep.suite = "degree";
    rep.surface = "polygon:1..4, annulus:1,1, annulus:2,2";
    rep.parameters = "weight<=6 radius=3 loops<=3";

    auto crossing_indices = [](const Triangulation& t, const Curve& g) {
        std::vector<int> idx;
        for (int i = 0; i < t.rank(); ++i)
            if (crossing_number(t.surface, t.arcs[i], g) > 0) idx.push_back(i);
        return idx;
    };

    // Polygons: strict negativity for every non-cluster arc, non-positivity
    // for everything compatible with it.
    for (int n = 1; n <= 4; ++n) {
        const MarkedSurface s = MarkedSurface::polygon(n);
        const std::vector<Curve> arcs = enumerate_arcs(s, 0);
        for (const Triangulation& t : exchange_graph(s, -1).vertices) {
            std::map<std::string, LaurentPoly> memo;
            auto expansion = [&](const Curve& g) -> const LaurentPoly& {
                auto [it, fresh] = memo.try_emplace(g.to_string(), LaurentPoly());
                if (fresh) it->second = expand_curve(t, g);
                return it->second;
            };
            for (const Curve& g : arcs) {
                if (t.index_of(g) >= 0) continue;
                const auto idx = crossing_indices(t, g);
                rep.check(degree_wrt(expansion(g), idx).max_degree < 0,
                          s.to_string() + ": non-negative degree term in " + g.to_string());
                for (const Curve& b : arcs) {
                    if (!are_compatible(s, b, g)) continue;
                    rep.check(degree_wrt(expansion(b), idx).max_degree <= 0,
                              s.to_string() + ": positive degree of compatible " + b.to_string() +
                                  " against " + g.to_string());
                }
            }
        }
    }

    // Annuli: the peripheral-gamma statements, including the loop analogue.
    for (const char* name : {"annulus:1,1", "annulus:2,2"}) {
        const MarkedSurface s = MarkedSurface::parse(name);
        const std::vector<Curve> arcs = arcs_up_to_weight(s, 6);
        for (const Triangulation& t : annulus_ball(s, 3)) {
            std::map<std::string, LaurentPoly> memo;
            auto expansion = [&](const Curve& g) -> const LaurentPoly& {
                auto [it, fresh] = memo.try_emplace(g.to_string(), LaurentPoly());
                if (fresh) it->second = expand_curve(t, g);
                return it->second;
            };
            for (const Curve& g : arcs) {
                if (!g.is_peripheral() || t.index_of(g) >= 0) continue;
                const auto idx = crossing_indices(t, g);
                rep.check(degree_wrt(expansion(g), idx).max_degree < 0,
                          std::string(name) + ": non-negative degree term in " + g.to_string());
                for (const Curve& b : arcs) {
                    if (!are_compatible(s, b, g)) continue;
                    rep.check(degree_wrt(expansion(b), idx).max_degree <= 0,
                              std::string(name) + ": positive degree of compatible " +
                                  b.to_string() + " against " + g.to_string());
                }
                for (int m = 1; m <= 3; ++m) {
                    rep.check(degree_wrt(expand_loop(t, m), idx).max_degree <= 0,
                              std::string(name) + ": positive degree of z_" + std::to_string(m) +
                                  " against " + g.to_string());
                }
            }
        }
    }
    return rep;
}

Report suite_positivity() {
    Report a = verify_positive_basis(MarkedSurface::polygon(3), -1, 0, 4, 4, 3);
    Report b = verify_positive_basis(MarkedSurface::annulus(2, 2), 3, 2, 4, 4, 3);
    Report rep;
    rep.suite = "positivity";
    rep.surface = a.surface + ", " + b.surface;
    rep.parameters = b.parameters;
    rep.total = a.total + b.total;
    rep.passed = a.passed + b.passed;
    for (auto& f : a.failures) rep.failures.push_back(f);
    for (auto& f : b.failures) rep.failures.push_back(f);
    return rep;
}

Report suite_atomicity() {
    Report rep;
    rep.suite = "atomicity";
    rep.surface = "polygon:3, annulus:1,1";
    rep.parameters = "weight<=3 size<=3";
    for (const char* name : {"polygon:3", "annulus:1,1"}) {
        const MarkedSurface s = MarkedSurface::parse(name);
        const auto candidates = enumerate_collections(s, 3, 3, true);
        for (const Collection& gamma : candidates) {
            const Report one = verify_atomicity_witness(s, gamma, candidates);
            rep.total += one.total;
            rep.passed += one.passed;
            for (const auto& f : one.failures) rep.failures.push_back(f);
        }
    }
    return rep;
}

Report suite_decomposition() {
    Report rep;
    rep.suite = "decomposition";
    rep.surface = "polygon:2, polygon:3, annulus:1,1, annulus:2,2";
    rep.parameters = "20 seeded products per surface";

    {  // x_z^2 = x_z2 + 2 on the Kronecker annulus
        const MarkedSurface s = MarkedSurface::annulus(1, 1);
        const Triangulation t = standard_annulus_triangulation(s);
        const LaurentPoly y = pow(expand_loop(t, 1), 2);
        const Decomposition d = decompose(y, t, default_candidates(y, t));
        Collection z2 = Collection::empty(s);
        z2.loop_m = 2;
        rep.check(d.exact() && d.coefficient(z2) == 1 &&
                      d.coefficient(Collection::empty(s)) == 2 && d.coefficients.size() == 2,
                  "x_z^2 decomposition mismatch");
    }
    {  // x_13 x_24 = x_14 + 1 on the pentagon
        const MarkedSurface s = MarkedSurface::polygon(2);
        const Triangulation t = fan_triangulation(s);
        const LaurentPoly y = expand_curve(t, Curve::chord(1, 3)) * expand_curve(t, Curve::chord(2, 4));
        const Decomposition d = decompose(y, t, default_candidates(y, t));
        Collection c14 = Collection::empty(s);
        c14.arcs.push_back(Curve::chord(1, 4));
        rep.check(d.exact() && d.coefficient(c14) == 1 &&
                      d.coefficient(Collection::empty(s)) == 1 && d.coefficients.size() == 2,
                  "x_13 x_24 decomposition mismatch");
    }

    std::mt19937 gen(20240811u);
    for (const char* name : {"polygon:2", "polygon:3", "annulus:1,1", "annulus:2,2"}) {
        const MarkedSurface s = MarkedSurface::parse(name);
        const Triangulation t =
            s.is_polygon() ? fan_triangulation(s) : standard_annulus_triangulation(s);
        const long factor_weight = s.is_polygon() ? 2 : 1;
        std::vector<Collection> pool = enumerate_collections(s, factor_weight, 2, true);
        for (int trial = 0; trial < 20; ++trial) {
            const int count = 1 + static_cast<int>(gen() % 3);
            LaurentPoly y = LaurentPoly::constant(t.rank(), 1);
            std::ostringstream desc;
            for (int i = 0; i < count; ++i) {
                const Collection& f = pool[gen() % pool.size()];
                y *= expand_collection(t, f);
                desc << f.to_string();
            }
            bool ok = true;
            std::string why;
            try {
                const Decomposition d = decompose(y, t, default_candidates(y, t));
                if (!d.exact()) {
                    ok = false;
                    why = "nonzero residual";
                }
                for (const auto& [c, v] : d.coefficients)
                    if (v < 0) {
                        ok = false;
                        why = "negative coefficient on " + c.to_string();
                    }
            } catch (const std::exception& err) {
                ok = false;
                why = err.what();
            }
            rep.check(ok, std::string(name) + " product " + desc.str() + ": " + why);
        }
    }
    return rep;
}

Report suite_counts() {
    Report rep;
    rep.suite = "counts";
    rep.surface = "polygon:1..4";
    rep.parameters = "catalan, involutivity";
    const long expected[] = {2, 5, 14, 42};
    for (int n = 1; n <= 4; ++n) {
        const MarkedSurface s = MarkedSurface::polygon(n);
        const ExchangeGraph g = exchange_graph(s, -1);
        rep.check(static_cast<long>(g.vertices.size()) == expected[n - 1],
                  "polygon:" + std::to_string(n) + " expected " +
                      std::to_string(expected[n - 1]) + " triangulations, got " +
                      std::to_string(g.vertices.size()));
        for (const Triangulation& t : g.vertices) {
            for (int k = 0; k < t.rank(); ++k) {
                const Triangulation f = flip(t, k);
                int changed = 0;
                for (int i = 0; i < t.rank(); ++i)
                    if (!(f.arcs[i] == t.arcs[i])) ++changed;
                rep.check(changed == 1, "flip changed more than one arc");
                rep.check(flip(f, k).arcs == t.arcs, "flip is not an involution");
            }
        }
    }
    return rep;
}

std::vector<std::string> suite_names() {
    return {"kronecker", "a13",        "chebyshev", "oracle", "denominator",
            "degree",    "positivity", "atomicity", "decomposition", "counts"};
}

std::vector<Report> run_suites(const std::string& name,
                               const std::optional<std::string>& surface,
                               std::optional<int> max_m) {
    std::vector<Report> out;
    auto want = [&](const std::string& s) { return name == "all" || name == s; };
    if (want("kronecker")) out.push_back(suite_kronecker());
    if (want("a13")) out.push_back(suite_a13_tables());
    if (want("chebyshev")) out.push_back(suite_chebyshev(surface, max_m.value_or(4)));
    if (want("oracle")) out.push_back(suite_oracle_equivalence());
    if (want("denominator")) out.push_back(suite_denominator_crossing());
    if (want("degree")) out.push_back(suite_degree_lemmas());
    if (want("positivity")) out.push_back(suite_positivity());
    if (want("atomicity")) out.push_back(suite_atomicity());
    if (want("decomposition")) out.push_back(suite_decomposition());
    if (want("counts")) out.push_back(suite_counts());
    if (out.empty()) throw std::invalid_argument("unknown suite: " + name);
    return out;
}

}  // namespace clusterwalk
