#include "clusterwalk/expansion.hpp"

#include "clusterwalk/cover_chunk.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace clusterwalk {

std::string walk_to_string(const ColouredWalk& w) {
    std::ostringstream os;
    bool first = true;
    for (const WalkStep& s : w.steps) {
        if (!first) os << ' ';
        if (s.is_boundary)
            os << (s.bside == BoundarySide::Inner ? 'i' : 'o');
        else
            os << (s.arc_index + 1);
        os << (s.positive ? '+' : '-');
        first = false;
    }
    return os.str();
}

LaurentPoly walk_monomial(const Triangulation& t, const ColouredWalk& w) {
    LaurentPoly::Exponents e(t.rank(), 0);
    for (const WalkStep& s : w.steps) {
        if (s.is_boundary) continue;
        e[s.arc_index] += s.positive ? 1 : -1;
    }
    return LaurentPoly::monomial(std::move(e), 1);
}

namespace {

WalkStep step_from_edge(const CoverChunk& ch, int edge_id, bool positive) {
    const ChunkEdge& e = ch.edges[edge_id];
    WalkStep s;
    s.positive = positive;
    s.translate = e.translate;
    if (e.kind == ChunkEdgeKind::Arc) {
        s.is_boundary = false;
        s.arc_index = e.arc_index;
    } else {
        s.is_boundary = true;
        s.bside = e.bside;
        s.bindex = e.bindex;
    }
    return s;
}

// Chunk window plus the two lift endpoints of the curve.
struct LiftedCurve {
    CoverChunk chunk;
    int A = -1, B = -1;
};

LiftedCurve lift_into_chunk(const Triangulation& t, const Curve& g) {
    LiftedCurve lc;
    if (t.surface.is_polygon()) {
        lc.chunk = build_polygon_chunk(t);
        lc.A = g.a - 1;
        lc.B = g.b - 1;
        return lc;
    }
    const MarkedSurface& s = t.surface;
    const std::int64_t K = cover::scale(s);
    std::int64_t xa, xb;
    if (g.is_bridging()) {
        xa = cover::inner_x(s, g.inner_pt, 0);
        xb = cover::outer_x(s, g.outer_pt, g.winding);
    } else {
        const auto l = cover::lift_peripheral(s, g, 0);
        xa = l.x_from;
        xb = l.x_to;
    }
    const std::int64_t pad = max_lift_width(t) + 2 * K;
    lc.chunk = build_annulus_chunk(t, std::min(xa, xb) - pad, std::max(xa, xb) + pad);
    if (g.is_bridging()) {
        lc.A = lc.chunk.find_vertex(BoundarySide::Inner, g.inner_pt, 0);
        lc.B = lc.chunk.find_vertex(BoundarySide::Outer, g.outer_pt, g.winding);
    } else {
        const int P = g.side == BoundarySide::Inner ? s.p : s.q;
        lc.A = lc.chunk.find_vertex(g.side, g.start, 0);
        lc.B = lc.chunk.find_vertex(g.side, (g.start - 1 + g.span) % P + 1,
                                    (g.start - 1 + g.span) / P);
    }
    if (lc.A < 0 || lc.B < 0) throw std::logic_error("lift_into_chunk: endpoint not in window");
    return lc;
}

}  // namespace

std::vector<ColouredWalk> enumerate_arc_walks(const Triangulation& t, const Curve& g) {
    if (g.is_loop())
        throw std::invalid_argument("enumerate_arc_walks: loop input, use enumerate_loop_walks");
    check_curve(t.surface, g);

    const LiftedCurve lc = lift_into_chunk(t, g);
    const CoverChunk& ch = lc.chunk;
    const std::vector<int> cross = ch.crossing_sequence(lc.A, lc.B);

    std::vector<ColouredWalk> out;
    ColouredWalk cur;

    // Walk = odd steps connecting a strictly increasing subsequence of the
    // crossing sequence, which appears with negative signs.
    std::function<void(int, int, std::size_t)> rec = [&](int v, int last, std::size_t i) {
        for (int f : ch.incident[v]) {
            if (f == last) continue;  // no immediate reversal
            if (ch.edges[f].kind == ChunkEdgeKind::Synthetic) continue;
            const int u = ch.other(f, v);
            cur.steps.push_back(step_from_edge(ch, f, true));
            if (u == lc.B) out.push_back(cur);
            for (std::size_t j = i; j < cross.size(); ++j) {
                const int e = cross[j];
                if (e == f || !ch.edge_incident(e, u)) continue;
                cur.steps.push_back(step_from_edge(ch, e, false));
                rec(ch.other(e, u), e, j + 1);
                cur.steps.pop_back();
            }
            cur.steps.pop_back();
        }
    };
    rec(lc.A, -1, 0);
    return out;
}

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

struct LoopEnumerator {
    const Triangulation& t;
    const int m;
    CoverChunk ch;
    std::int64_t K;
    std::vector<int> bridging_edges;                       // chunk edge ids
    std::map<std::pair<int, std::int64_t>, int> lift_at;   // (arc, translate) -> edge id

    explicit LoopEnumerator(const Triangulation& tri, int mm) : t(tri), m(mm) {
        const MarkedSurface& s = t.surface;
        K = cover::scale(s);
        const std::int64_t pad = max_lift_width(t) + 2 * K;
        ch = build_annulus_chunk(t, -pad, 2 * m * K + pad);
        for (int i = 0; i < static_cast<int>(ch.edges.size()); ++i) {
            const ChunkEdge& e = ch.edges[i];
            if (e.kind == ChunkEdgeKind::Arc && t.arcs[e.arc_index].is_bridging()) {
                bridging_edges.push_back(i);
                lift_at[{e.arc_index, e.translate}] = i;
            }
        }
    }

    std::int64_t pos(int edge_id) const {
        const ChunkEdge& e = ch.edges[edge_id];
        return ch.verts[e.u].x + ch.verts[e.v].x;  // twice the meridian midpoint
    }

    int translated(int edge_id, std::int64_t by) const {
        const ChunkEdge& e = ch.edges[edge_id];
        auto it = lift_at.find({e.arc_index, e.translate + by});
        return it == lift_at.end() ? -1 : it->second;
    }

    // dir is the side of the entry vertex, a translation-invariant tag.
    struct Minus {
        int edge;
        int entry;  // vertex id
    };

    std::vector<ColouredWalk> run() {
        std::vector<ColouredWalk> out;
        std::set<std::string> seen;
        std::vector<Minus> seq;
        std::vector<int> conns;

        auto emit = [&](int closing_conn) {
            std::string key = canonical_orbit_key(seq);
            if (!seen.insert(key).second) return;
            ColouredWalk w;
            for (std::size_t i = 0; i < seq.size(); ++i) {
                w.steps.push_back(step_from_edge(ch, seq[i].edge, false));
                const int c = i + 1 < seq.size() ? conns[i] : closing_conn;
                w.steps.push_back(step_from_edge(ch, c, true));
            }
            out.push_back(w);
        };

        std::function<void()> extend = [&]() {
            const Minus last = seq.back();    // by value: seq reallocates below
            const Minus first = seq.front();
            const int exit = ch.other(last.edge, last.entry);
            // Close the walk through the deck translate of the first step.
            const int first_shift = translated(first.edge, m);
            if (first_shift >= 0) {
                const ChunkVertex& ev = ch.verts[first.entry];
                const int entry_shift = ch.find_vertex(ev.side, ev.point, ev.translate + m);
                if (entry_shift >= 0) {
                    const int conn = ch.find_edge(exit, entry_shift);
                    if (conn >= 0 && conn != last.edge && conn != first_shift &&
                        ch.edges[conn].kind != ChunkEdgeKind::Synthetic)
                        emit(conn);
                }
            }
            // Or continue through one more bridging arc, strictly forward.
            const std::int64_t limit = pos(first.edge) + 2 * K * m;
            for (int f : ch.incident[exit]) {
                if (f == last.edge || ch.edges[f].kind == ChunkEdgeKind::Synthetic) continue;
                const int u = ch.other(f, exit);
                for (int e : ch.incident[u]) {
                    const ChunkEdge& ce = ch.edges[e];
                    if (ce.kind != ChunkEdgeKind::Arc || !t.arcs[ce.arc_index].is_bridging())
                        continue;
                    if (e == f || pos(e) <= pos(last.edge) || pos(e) >= limit) continue;
                    seq.push_back(Minus{e, u});
                    conns.push_back(f);
                    extend();
                    conns.pop_back();
                    seq.pop_back();
                }
            }
        };

        for (int c1 : bridging_edges) {
            if (pos(c1) < 0 || pos(c1) >= 2 * K * m) continue;
            const ChunkEdge& e = ch.edges[c1];
            for (int entry : {e.u, e.v}) {
                seq.push_back(Minus{c1, entry});
                extend();
                seq.pop_back();
            }
        }
        return out;
    }

    std::string canonical_orbit_key(const std::vector<Minus>& seq) const {
        std::string best;
        const std::size_t k = seq.size();
        for (std::size_t r = 0; r < k; ++r) {
            std::vector<std::tuple<int, std::int64_t, int>> items;
            for (std::size_t i = 0; i < k; ++i) {
                const Minus& mn = seq[(r + i) % k];
                const ChunkEdge& e = ch.edges[mn.edge];
                const std::int64_t shift = (r + i) >= k ? m : 0;
                items.emplace_back(e.arc_index, e.translate + shift,
                                   ch.verts[mn.entry].side == BoundarySide::Inner ? 0 : 1);
            }
            // Normalise deck translation (multiples of m) by the first lift.
            const std::int64_t base = m * floor_div(std::get<1>(items[0]), m);
            std::ostringstream os;
            for (auto& [a, tr, d] : items) os << a << ',' << (tr - base) << ',' << d << ';';
            if (best.empty() || os.str() < best) best = os.str();
        }
        return best;
    }
};

}  // namespace

std::vector<ColouredWalk> enumerate_loop_walks(const Triangulation& t, int m) {
    if (!t.surface.is_annulus())
        throw std::invalid_argument("enumerate_loop_walks: annulus required");
    if (m < 1) throw std::invalid_argument("enumerate_loop_walks: m >= 1 required");
    LoopEnumerator en(t, m);
    return en.run();
}

LaurentPoly expand_curve(const Triangulation& t, const Curve& g) {
    LaurentPoly sum(t.rank());
    for (const ColouredWalk& w : enumerate_arc_walks(t, g)) sum += walk_monomial(t, w);
    return sum;
}

LaurentPoly expand_loop(const Triangulation& t, int m) {
    LaurentPoly sum(t.rank());
    for (const ColouredWalk& w : enumerate_loop_walks(t, m)) sum += walk_monomial(t, w);
    return sum;
}

LaurentPoly expand_loop_difference(const Triangulation& t, int m) {
    if (!t.surface.is_annulus())
        throw std::invalid_argument("expand_loop_difference: annulus required");
    const MarkedSurface& s = t.surface;
    BoundarySide side;
    int P;
    if (s.p >= 2) {
        side = BoundarySide::Inner;
        P = s.p;
    } else if (s.q >= 2) {
        side = BoundarySide::Outer;
        P = s.q;
    } else {
        throw std::invalid_argument(
            "expand_loop_difference: needs a boundary component with >= 2 points");
    }
    const Curve M = Curve::peripheral(side, 1, m * P + 1);
    LaurentPoly result = expand_curve(t, M);
    if (m * P - 1 >= 2) {
        result -= expand_curve(t, Curve::peripheral(side, 2, m * P - 1));
    } else {
        // Quasi-length zero companion: the boundary segment, contributing 1.
        result -= LaurentPoly::constant(t.rank(), 1);
    }
    return result;
}

LaurentPoly specialize_from_c21(const Triangulation& t_src, const LaurentPoly& poly) {
    if (!(t_src.surface == MarkedSurface::annulus(2, 1)))
        throw std::invalid_argument("specialize_from_c21: source must be the (2,1) annulus");
    if (auto rep = validate(t_src); !rep.ok)
        throw std::invalid_argument("specialize_from_c21: invalid source triangulation");
    if (poly.num_vars() != 3)
        throw std::invalid_argument("specialize_from_c21: polynomial must have 3 variables");
    int tau = -1;
    std::vector<int> bridging;
    for (int i = 0; i < t_src.rank(); ++i) {
        if (t_src.arcs[i].is_peripheral())
            tau = i;
        else if (t_src.arcs[i].is_bridging())
            bridging.push_back(i);
    }
    if (tau < 0 || bridging.size() != 2)
        throw std::invalid_argument(
            "specialize_from_c21: expected two bridging arcs and one peripheral near-loop");

    LaurentPoly out(2);
    for (const auto& [e, c] : poly.terms())
        out.add_term({e[bridging[0]], e[bridging[1]]}, c);
    return out;
}

ChebyshevPoly chebyshev(int m) {
    if (m < 0) throw std::invalid_argument("chebyshev: m >= 0 required");
    ChebyshevPoly f0{0, {2}};
    if (m == 0) return f0;
    ChebyshevPoly f1{1, {0, 1}};
    for (int k = 1; k < m; ++k) {
        ChebyshevPoly next{k + 1, std::vector<Int>(k + 2, 0)};
        for (int i = 0; i <= k; ++i) next.coeffs[i + 1] += f1.coeffs[i];
        for (int i = 0; i < k; ++i) next.coeffs[i] -= f0.coeffs[i];
        f0 = std::move(f1);
        f1 = std::move(next);
    }
    return f1;
}

LaurentPoly chebyshev_eval(int m, const LaurentPoly& v) {
    if (m < 0) throw std::invalid_argument("chebyshev_eval: m >= 0 required");
    LaurentPoly f0 = LaurentPoly::constant(v.num_vars(), 2);
    if (m == 0) return f0;
    LaurentPoly f1 = v;
    for (int k = 1; k < m; ++k) {
        LaurentPoly next = v * f1 - f0;
        f0 = std::move(f1);
        f1 = std::move(next);
    }
    return f1;
}

namespace {

long total_crossings(const Triangulation& t, const Curve& g) {
    long sum = 0;
    for (const Curve& a : t.arcs) sum += crossing_number(t.surface, a, g);
    return sum;
}

}  // namespace

std::map<std::string, LaurentPoly> oracle_expand_many(const Triangulation& t,
                                                      const std::vector<Curve>& targets,
                                                      int max_nodes) {
    for (const Curve& g : targets) {
        if (g.is_loop()) throw std::invalid_argument("mutation_expand_oracle: loop input");
        if (!is_arc(t.surface, g))
            throw std::invalid_argument("mutation_expand_oracle: curve is not an arc");
    }

    std::map<std::string, Curve> remaining;
    for (const Curve& g : targets) remaining.emplace(g.to_string(), g);
    std::map<std::string, LaurentPoly> found;

    struct Node {
        long crossings;  // to the nearest remaining target
        int flips;
        Triangulation t;
        std::vector<LaurentPoly> exps;  // expansions in the base cluster
    };
    auto nearest = [&](const Triangulation& tri) {
        long best = 0;
        bool first = true;
        for (const auto& [key, g] : remaining) {
            (void)key;
            const long c = total_crossings(tri, g);
            if (first || c < best) best = c;
            first = false;
        }
        return best;
    };
    auto worse = [](const Node& a, const Node& b) {
        return std::tie(a.crossings, a.flips) > std::tie(b.crossings, b.flips);
    };
    std::priority_queue<Node, std::vector<Node>, decltype(worse)> queue(worse);

    Node root{0, 0, t, {}};
    for (int i = 0; i < t.rank(); ++i) root.exps.push_back(LaurentPoly::variable(t.rank(), i));
    root.crossings = nearest(t);
    queue.push(root);

    std::set<std::string> visited;
    int pops = 0;
    while (!queue.empty() && !remaining.empty()) {
        Node node = queue.top();
        queue.pop();
        if (!visited.insert(canonical_key(node.t)).second) continue;
        if (++pops > max_nodes)
            throw std::runtime_error("mutation_expand_oracle: search bound exceeded");

        for (int i = 0; i < node.t.rank(); ++i) {
            auto it = remaining.find(node.t.arcs[i].to_string());
            if (it == remaining.end()) continue;
            found.emplace(it->first, node.exps[i]);
            remaining.erase(it);
        }
        if (remaining.empty()) break;

        const auto b = exchange_matrix(node.t);
        for (int k = 0; k < node.t.rank(); ++k) {
            Triangulation flipped = flip(node.t, k);
            if (visited.count(canonical_key(flipped))) continue;
            LaurentPoly pos_part = LaurentPoly::constant(t.rank(), 1);
            LaurentPoly neg_part = LaurentPoly::constant(t.rank(), 1);
            for (int i = 0; i < node.t.rank(); ++i) {
                if (b[i][k] > 0) pos_part *= pow(node.exps[i], b[i][k]);
                if (b[i][k] < 0) neg_part *= pow(node.exps[i], -b[i][k]);
            }
            Node next{0, node.flips + 1, flipped, node.exps};
            next.exps[k] = divide_exact(pos_part + neg_part, node.exps[k]);
            next.crossings = nearest(flipped);
            queue.push(next);
        }
    }
    if (!remaining.empty())
        throw std::runtime_error("mutation_expand_oracle: exhausted search space");
    return found;
}

LaurentPoly mutation_expand_oracle(const Triangulation& t, const Curve& g, int max_nodes) {
    return oracle_expand_many(t, {g}, max_nodes).at(g.to_string());
}

}  // namespace clusterwalk
