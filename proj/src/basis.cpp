#include "clusterwalk/basis.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace clusterwalk {

using Rat = boost::multiprecision::cpp_rational;

bool Collection::operator<(const Collection& o) const {
    if (loop_m != o.loop_m) return loop_m < o.loop_m;
    return arcs < o.arcs;
}

std::string Collection::to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const Curve& g : arcs) {
        if (!first) os << ", ";
        os << g.to_string();
        first = false;
    }
    if (has_loop()) {
        if (!first) os << ", ";
        os << 'z' << loop_m;
    }
    os << '}';
    return os.str();
}

Collection Collection::parse(const MarkedSurface& s, const std::string& spec) {
    Collection c = Collection::empty(s);
    std::string body = spec;
    if (!body.empty() && body.front() == '{') body = body.substr(1);
    if (!body.empty() && body.back() == '}') body.pop_back();
    std::size_t pos = 0;
    while (pos < body.size()) {
        std::size_t comma = body.find(',', pos);
        std::string item = body.substr(pos, comma == std::string::npos ? std::string::npos
                                                                       : comma - pos);
        pos = comma == std::string::npos ? body.size() : comma + 1;
        const std::size_t a = item.find_first_not_of(" \t");
        if (a == std::string::npos) continue;
        const std::size_t b = item.find_last_not_of(" \t");
        const Curve g = Curve::parse(item.substr(a, b - a + 1));
        if (g.is_loop())
            c.loop_m = g.m;
        else
            c.arcs.push_back(g);
    }
    std::sort(c.arcs.begin(), c.arcs.end());
    return c;
}

ValidationReport validate_collection(const Collection& c) {
    ValidationReport rep;
    for (std::size_t i = 0; i < c.arcs.size(); ++i) {
        if (!is_arc(c.surface, c.arcs[i])) {
            rep.ok = false;
            rep.message = "not an arc: " + c.arcs[i].to_string();
            rep.index1 = static_cast<int>(i);
            return rep;
        }
        if (c.has_loop() && c.arcs[i].is_bridging()) {
            rep.ok = false;
            rep.message = "loop combined with bridging arc " + c.arcs[i].to_string();
            rep.index1 = static_cast<int>(i);
            return rep;
        }
    }
    for (std::size_t i = 0; i < c.arcs.size(); ++i)
        for (std::size_t j = i + 1; j < c.arcs.size(); ++j)
            if (!are_compatible(c.surface, c.arcs[i], c.arcs[j])) {
                rep.ok = false;
                rep.message = "incompatible pair: " + c.arcs[i].to_string() + " / " +
                              c.arcs[j].to_string();
                rep.index1 = static_cast<int>(i);
                rep.index2 = static_cast<int>(j);
                return rep;
            }
    if (c.has_loop() && c.surface.is_polygon()) {
        rep.ok = false;
        rep.message = "loop on polygon surface";
    }
    return rep;
}

namespace {

Triangulation reference_triangulation(const MarkedSurface& s) {
    return s.is_polygon() ? fan_triangulation(s) : standard_annulus_triangulation(s);
}

long arc_weight(const MarkedSurface& s, const Triangulation& ref, const Curve& g) {
    long w = 0;
    for (const Curve& tau : ref.arcs) w += crossing_number(s, g, tau);
    return w;
}

}  // namespace

long collection_weight(const Collection& c) {
    const Triangulation ref = reference_triangulation(c.surface);
    long w = c.loop_m;
    for (const Curve& g : c.arcs) w += arc_weight(c.surface, ref, g);
    return w;
}

std::vector<Collection> enumerate_collections(const MarkedSurface& s, long max_weight,
                                              int max_size, bool allow_loops) {
    const Triangulation ref = reference_triangulation(s);
    const int max_winding = static_cast<int>(max_weight) + 2;
    std::vector<std::pair<Curve, long>> pool;
    for (const Curve& g : enumerate_arcs(s, max_winding)) {
        const long w = arc_weight(s, ref, g);
        if (w <= max_weight) pool.push_back({g, w});
    }
    std::sort(pool.begin(), pool.end());

    std::vector<Collection> out;
    Collection cur = Collection::empty(s);
    std::function<void(std::size_t, long)> rec = [&](std::size_t start, long weight) {
        out.push_back(cur);
        if (allow_loops && s.is_annulus()) {
            bool has_bridging = false;
            for (const Curve& g : cur.arcs) has_bridging |= g.is_bridging();
            if (!has_bridging && cur.size() < max_size) {
                for (int m = 1; weight + m <= max_weight; ++m) {
                    cur.loop_m = m;
                    out.push_back(cur);
                    cur.loop_m = 0;
                }
            }
        }
        if (cur.size() >= max_size) return;
        for (std::size_t i = start; i < pool.size(); ++i) {
            const auto& [g, w] = pool[i];
            if (weight + w > max_weight) continue;
            bool ok = true;
            for (const Curve& h : cur.arcs)
                if (!are_compatible(s, g, h)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            cur.arcs.push_back(g);
            rec(i, weight + w);
            cur.arcs.pop_back();
        }
    };
    rec(0, 0);
    return out;
}

LaurentPoly expand_collection(const Triangulation& t, const Collection& c) {
    LaurentPoly prod = LaurentPoly::constant(t.rank(), 1);
    // Group repeated arcs so each distinct curve is expanded once.
    std::map<Curve, int> mult;
    for (const Curve& g : c.arcs) ++mult[g];
    for (const auto& [g, k] : mult) prod *= pow(expand_curve(t, g), k);
    if (c.has_loop()) prod *= expand_loop(t, c.loop_m);
    return prod;
}

Int Decomposition::coefficient(const Collection& c) const {
    for (const auto& [col, v] : coefficients)
        if (col == c) return v;
    return 0;
}

Decomposition decompose(const LaurentPoly& y, const Triangulation& t,
                        const std::vector<Collection>& candidates) {
    const int n = static_cast<int>(candidates.size());
    std::vector<LaurentPoly> expansions;
    expansions.reserve(n);
    std::map<LaurentPoly::Exponents, int> row_of;
    for (const Collection& c : candidates) {
        expansions.push_back(expand_collection(t, c));
        for (const auto& [e, v] : expansions.back().terms()) {
            (void)v;
            row_of.emplace(e, static_cast<int>(row_of.size()));
        }
    }
    for (const auto& [e, v] : y.terms()) {
        (void)v;
        row_of.emplace(e, static_cast<int>(row_of.size()));
    }
    const int m = static_cast<int>(row_of.size());

    // Augmented system [A | y] over exact rationals.
    std::vector<std::vector<Rat>> a(m, std::vector<Rat>(n + 1, 0));
    for (int j = 0; j < n; ++j)
        for (const auto& [e, v] : expansions[j].terms()) a[row_of[e]][j] = Rat(v);
    for (const auto& [e, v] : y.terms()) a[row_of[e]][n] = Rat(v);

    std::vector<int> pivot_col_of_row;
    int row = 0;
    for (int col = 0; col < n && row < m; ++col) {
        int pr = -1;
        for (int i = row; i < m; ++i)
            if (a[i][col] != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        std::swap(a[row], a[pr]);
        const Rat inv = a[row][col];
        for (int j = col; j <= n; ++j) a[row][j] /= inv;
        for (int i = 0; i < m; ++i) {
            if (i == row || a[i][col] == 0) continue;
            const Rat f = a[i][col];
            for (int j = col; j <= n; ++j) a[i][j] -= f * a[row][j];
        }
        pivot_col_of_row.push_back(col);
        ++row;
    }
    if (static_cast<int>(pivot_col_of_row.size()) < n)
        throw std::logic_error("decompose: candidate expansions are linearly dependent");

    std::vector<Rat> lambda(n, 0);
    for (std::size_t i = 0; i < pivot_col_of_row.size(); ++i)
        lambda[pivot_col_of_row[i]] = a[i][n];

    Decomposition result;
    result.residual = y;
    for (int j = 0; j < n; ++j) {
        if (lambda[j] == 0) continue;
        if (denominator(lambda[j]) != 1)
            throw std::runtime_error("decompose: non-integer solution");
        const Int v = numerator(lambda[j]);
        result.coefficients.push_back({candidates[j], v});
        result.residual -= LaurentPoly::constant(y.num_vars(), v) * expansions[j];
    }
    return result;
}

std::vector<Collection> default_candidates(const LaurentPoly& y, const Triangulation& t) {
    const MarkedSurface& s = t.surface;
    long max_den = 0;
    int max_pos = 0;
    std::vector<int> lo(y.num_vars(), 0), hi(y.num_vars(), 0);
    for (const auto& [e, v] : y.terms()) {
        (void)v;
        int pos = 0;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] > 0) pos += e[i];
            if (-e[i] > max_den) max_den = -e[i];
            lo[i] = std::min(lo[i], e[i]);
            hi[i] = std::max(hi[i], e[i]);
        }
        max_pos = std::max(max_pos, pos);
    }
    const long weight_bound = max_den + 2;
    const int size_bound = max_pos + 2;

    // Expansions of a non-negative combination cannot leave y's exponent
    // envelope, so candidates sticking out are useless.
    auto inside_envelope = [&](const LaurentPoly& x) {
        for (const auto& [e, v] : x.terms()) {
            (void)v;
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i] < lo[i] || e[i] > hi[i]) return false;
        }
        return true;
    };
    std::vector<Collection> out;
    for (const Collection& c : enumerate_collections(s, weight_bound, size_bound, s.is_annulus()))
        if (inside_envelope(expand_collection(t, c))) out.push_back(c);
    return out;
}

void Report::check(bool cond, const std::string& what) {
    ++total;
    if (cond)
        ++passed;
    else
        failures.push_back(what);
}

namespace {

std::vector<Triangulation> cluster_family(const MarkedSurface& s, int radius, int wrap_range) {
    std::vector<Triangulation> out;
    std::set<std::string> seen;
    for (const Triangulation& t : exchange_graph(s, radius).vertices) {
        if (seen.insert(canonical_key(t)).second) out.push_back(t);
    }
    if (s.is_annulus()) {
        for (int r = -wrap_range; r <= wrap_range; ++r) {
            const Triangulation t = wrap_triangulation(s, {}, r).t;
            if (seen.insert(canonical_key(t)).second) out.push_back(t);
        }
    }
    return out;
}

}  // namespace

Report verify_positive_basis(const MarkedSurface& s, int cluster_radius, int wrap_range,
                             long weight_bound, int size_bound, int loop_bound) {
    Report rep;
    rep.suite = "positivity";
    rep.surface = s.to_string();
    {
        std::ostringstream os;
        os << "radius=" << cluster_radius << " wrap=" << wrap_range << " weight<=" << weight_bound
           << " size<=" << size_bound << " loop<=" << loop_bound;
        rep.parameters = os.str();
    }
    const auto clusters = cluster_family(s, cluster_radius, wrap_range);
    const auto collections = enumerate_collections(s, weight_bound, size_bound, true);
    for (const Triangulation& t : clusters) {
        // Expand each distinct member once per cluster.
        std::map<Curve, LaurentPoly> arc_exp;
        std::map<int, LaurentPoly> loop_exp;
        auto product = [&](const Collection& c) {
            LaurentPoly prod = LaurentPoly::constant(t.rank(), 1);
            for (const Curve& g : c.arcs) {
                auto it = arc_exp.find(g);
                if (it == arc_exp.end()) it = arc_exp.emplace(g, expand_curve(t, g)).first;
                prod *= it->second;
            }
            if (c.has_loop()) {
                auto it = loop_exp.find(c.loop_m);
                if (it == loop_exp.end())
                    it = loop_exp.emplace(c.loop_m, expand_loop(t, c.loop_m)).first;
                prod *= it->second;
            }
            return prod;
        };
        for (const Collection& c : collections) {
            if (c.loop_m > loop_bound) continue;
            rep.check(is_subtraction_free(product(c)),
                      "negative coefficient: " + c.to_string() + " in " + canonical_key(t));
        }
    }
    return rep;
}

namespace {

// Complete the support of a loop-free collection to a triangulation.
Triangulation complete_to_triangulation(const MarkedSurface& s, const std::vector<Curve>& seed) {
    Triangulation t;
    t.surface = s;
    for (const Curve& g : seed)
        if (t.index_of(g) < 0) t.arcs.push_back(g);
    int max_winding = 2;
    for (const Curve& g : seed)
        if (g.is_bridging()) max_winding = std::max(max_winding, std::abs(g.winding) + 2);
    while (t.rank() < s.rank()) {
        bool added = false;
        for (const Curve& g : enumerate_arcs(s, max_winding)) {
            if (t.index_of(g) >= 0) continue;
            bool ok = true;
            for (const Curve& h : t.arcs)
                if (crossing_number(s, g, h) != 0) {
                    ok = false;
                    break;
                }
            if (ok) {
                t.arcs.push_back(g);
                added = true;
                if (t.rank() == s.rank()) break;
            }
        }
        if (t.rank() < s.rank() && !added) ++max_winding;
        if (max_winding > 64)
            throw std::logic_error("complete_to_triangulation: no completion found");
    }
    if (auto r = validate(t); !r.ok)
        throw std::logic_error("complete_to_triangulation: invalid completion: " + r.message);
    return t;
}

}  // namespace

Report verify_atomicity_witness(const MarkedSurface& s, const Collection& gamma,
                                const std::vector<Collection>& candidates, int r_bound) {
    Report rep;
    rep.suite = "atomicity";
    rep.surface = s.to_string();
    rep.parameters = "gamma=" + gamma.to_string();

    auto run_with = [&](const Triangulation& t, const LaurentPoly::Exponents& distinguished,
                        Report& local) {
        const LaurentPoly own = expand_collection(t, gamma);
        local.check(own.coeff(distinguished) == 1,
                    "distinguished monomial not unit in x_gamma: " + gamma.to_string());
        for (const Collection& sigma : candidates) {
            if (sigma == gamma) continue;
            const LaurentPoly x = expand_collection(t, sigma);
            local.check(x.coeff(distinguished) == 0,
                        "distinguished monomial of " + gamma.to_string() + " appears in " +
                            sigma.to_string());
        }
    };

    if (!gamma.has_loop()) {
        const Triangulation t = complete_to_triangulation(s, gamma.arcs);
        LaurentPoly::Exponents e(t.rank(), 0);
        for (const Curve& g : gamma.arcs) e[t.index_of(g)] += 1;
        run_with(t, e, rep);
        return rep;
    }

    // Loop case: wrapping triangulations with adaptively grown r; the
    // distinguished term is x_{arcs} * x_beta^m / x_alpha^m.
    std::vector<Curve> periph;
    for (const Curve& g : gamma.arcs)
        if (std::find(periph.begin(), periph.end(), g) == periph.end()) periph.push_back(g);
    std::vector<int> rs;
    for (int r = 0; r <= r_bound; ++r) {
        rs.push_back(r);
        if (r > 0) rs.push_back(-r);
    }
    for (int r : rs) {
        const WrapResult wrap = wrap_triangulation(s, periph, r);
        LaurentPoly::Exponents e(wrap.t.rank(), 0);
        for (const Curve& g : gamma.arcs) e[wrap.t.index_of(g)] += 1;
        e[wrap.beta] += gamma.loop_m;
        e[wrap.alpha] -= gamma.loop_m;
        Report attempt;
        run_with(wrap.t, e, attempt);
        if (attempt.ok()) {
            std::ostringstream os;
            os << rep.parameters << " witness_r=" << r;
            rep.parameters = os.str();
            rep.total += attempt.total;
            rep.passed += attempt.passed;
            return rep;
        }
    }
    rep.check(false, "no wrapping witness with |r| <= " + std::to_string(r_bound) + " for " +
                         gamma.to_string());
    return rep;
}

ExchangeGraph exchange_graph(const MarkedSurface& s, int radius) {
    ExchangeGraph g;
    const Triangulation start = reference_triangulation(s);
    std::map<std::string, int> index;
    std::deque<std::pair<int, int>> frontier;  // (vertex index, depth)
    index[canonical_key(start)] = 0;
    g.vertices.push_back(start);
    frontier.push_back({0, 0});
    std::set<std::pair<int, int>> edges;
    while (!frontier.empty()) {
        const auto [vi, depth] = frontier.front();
        frontier.pop_front();
        if (s.is_annulus() && depth >= radius) continue;
        const Triangulation t = g.vertices[vi];
        for (int k = 0; k < t.rank(); ++k) {
            const Triangulation next = flip(t, k);
            const std::string key = canonical_key(next);
            auto it = index.find(key);
            int ni;
            if (it == index.end()) {
                ni = static_cast<int>(g.vertices.size());
                index[key] = ni;
                g.vertices.push_back(next);
                frontier.push_back({ni, depth + 1});
            } else {
                ni = it->second;
            }
            edges.insert({std::min(vi, ni), std::max(vi, ni)});
        }
    }
    g.edges.assign(edges.begin(), edges.end());
    return g;
}

}  // namespace clusterwalk
