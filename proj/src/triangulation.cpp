#include "clusterwalk/triangulation.hpp"

#include "clusterwalk/cover_chunk.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace clusterwalk {

int Triangulation::index_of(const Curve& g) const {
    for (int i = 0; i < rank(); ++i)
        if (arcs[i] == g) return i;
    return -1;
}

ValidationReport validate(const Triangulation& t) {
    ValidationReport rep;
    const int expected = t.surface.rank();
    if (t.rank() != expected) {
        rep.ok = false;
        std::ostringstream msg;
        msg << "expected " << expected << " arcs, got " << t.rank();
        rep.message = msg.str();
        return rep;
    }
    for (int i = 0; i < t.rank(); ++i) {
        try {
            if (!is_arc(t.surface, t.arcs[i])) {
                rep.ok = false;
                rep.message = "self-crossing curve: " + t.arcs[i].to_string();
                rep.index1 = i;
                return rep;
            }
        } catch (const std::invalid_argument& err) {
            rep.ok = false;
            rep.message = err.what();
            rep.index1 = i;
            return rep;
        }
    }
    for (int i = 0; i < t.rank(); ++i) {
        for (int j = i + 1; j < t.rank(); ++j) {
            if (t.arcs[i] == t.arcs[j]) {
                rep.ok = false;
                rep.message = "duplicate arc: " + t.arcs[i].to_string();
                rep.index1 = i;
                rep.index2 = j;
                return rep;
            }
            if (crossing_number(t.surface, t.arcs[i], t.arcs[j]) != 0) {
                rep.ok = false;
                rep.message = "crossing pair: " + t.arcs[i].to_string() + " / " +
                              t.arcs[j].to_string();
                rep.index1 = i;
                rep.index2 = j;
                return rep;
            }
        }
    }
    return rep;
}

namespace {

int max_abs_winding(const Triangulation& t) {
    int w = 0;
    for (const Curve& g : t.arcs)
        if (g.is_bridging()) w = std::max(w, std::abs(g.winding));
    return w;
}

std::vector<Curve> flip_candidates(const Triangulation& t, const std::vector<Curve>& rest,
                                   const Curve& removed, int max_winding) {
    std::vector<Curve> found;
    for (const Curve& c : enumerate_arcs(t.surface, max_winding)) {
        if (c == removed) continue;
        if (std::find(rest.begin(), rest.end(), c) != rest.end()) continue;
        bool ok = true;
        for (const Curve& r : rest)
            if (crossing_number(t.surface, c, r) != 0) {
                ok = false;
                break;
            }
        if (ok) found.push_back(c);
    }
    return found;
}

}  // namespace

Triangulation flip(const Triangulation& t, int k) {
    if (k < 0 || k >= t.rank()) throw std::out_of_range("flip: arc index out of range");
    const Curve removed = t.arcs[k];
    std::vector<Curve> rest;
    for (int i = 0; i < t.rank(); ++i)
        if (i != k) rest.push_back(t.arcs[i]);

    // Search with adaptively grown winding; the completion of a
    // near-triangulation is unique, which doubles as a sanity check.
    int max_winding = t.surface.is_polygon() ? 0 : max_abs_winding(t) + 2;
    std::vector<Curve> found = flip_candidates(t, rest, removed, max_winding);
    while (found.empty() && !t.surface.is_polygon() && max_winding < max_abs_winding(t) + 16) {
        ++max_winding;
        found = flip_candidates(t, rest, removed, max_winding);
    }
    if (!t.surface.is_polygon())
        found = flip_candidates(t, rest, removed, max_winding + 1);
    if (found.size() != 1)
        throw std::logic_error("flip: expected a unique completion, found " +
                               std::to_string(found.size()));

    Triangulation r = t;
    r.arcs[k] = found.front();
    return r;
}

std::vector<std::vector<int>> exchange_matrix(const Triangulation& t) {
    const int n = t.rank();
    std::vector<std::vector<int>> b(n, std::vector<int>(n, 0));

    std::vector<std::array<int, 3>> faces;
    const CoverChunk* chunk_ptr = nullptr;
    CoverChunk chunk;
    if (t.surface.is_polygon()) {
        chunk = build_polygon_chunk(t);
        faces = chunk.triangle_faces();
        if (static_cast<int>(faces.size()) != n + 1)
            throw std::logic_error("exchange_matrix: bad polygon face count");
    } else {
        const std::int64_t w = 2 * max_lift_width(t) + 3 * cover::scale(t.surface);
        chunk = build_annulus_chunk(t, -w, w);
        // One face per deck orbit: normalise vertex translates and dedupe.
        std::set<std::string> seen;
        for (const auto& f : chunk.triangle_faces()) {
            std::vector<std::tuple<int, int, std::int64_t>> key;
            std::int64_t kmin = chunk.verts[f[0]].translate;
            for (int v : f) kmin = std::min(kmin, chunk.verts[v].translate);
            for (int v : f)
                key.emplace_back(static_cast<int>(chunk.verts[v].side), chunk.verts[v].point,
                                 chunk.verts[v].translate - kmin);
            std::sort(key.begin(), key.end());
            std::ostringstream os;
            for (auto& [s, p, k] : key) os << s << ':' << p << ':' << k << ';';
            if (seen.insert(os.str()).second) faces.push_back(f);
        }
        if (static_cast<int>(faces.size()) != t.surface.p + t.surface.q)
            throw std::logic_error("exchange_matrix: bad annulus face count");
    }
    chunk_ptr = &chunk;

    for (const auto& f : faces) {
        int side_edges[3];
        for (int i = 0; i < 3; ++i)
            side_edges[i] = chunk_ptr->find_edge(f[i], f[(i + 1) % 3]);
        for (int i = 0; i < 3; ++i) {
            const ChunkEdge& e1 = chunk_ptr->edges[side_edges[i]];
            const ChunkEdge& e2 = chunk_ptr->edges[side_edges[(i + 1) % 3]];
            if (e1.kind != ChunkEdgeKind::Arc || e2.kind != ChunkEdgeKind::Arc) continue;
            b[e1.arc_index][e2.arc_index] += 1;
            b[e2.arc_index][e1.arc_index] -= 1;
        }
    }
    return b;
}

std::vector<std::vector<int>> mutate_matrix(const std::vector<std::vector<int>>& b, int k) {
    const int n = static_cast<int>(b.size());
    std::vector<std::vector<int>> r(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == k || j == k) {
                r[i][j] = -b[i][j];
            } else {
                r[i][j] = b[i][j] + (std::abs(b[i][k]) * b[k][j] + b[i][k] * std::abs(b[k][j])) / 2;
            }
        }
    }
    return r;
}

Triangulation fan_triangulation(const MarkedSurface& s) {
    if (!s.is_polygon()) throw std::invalid_argument("fan_triangulation: polygon required");
    Triangulation t;
    t.surface = s;
    for (int b = 3; b <= s.n + 2; ++b) t.arcs.push_back(Curve::chord(1, b));
    return t;
}

Triangulation standard_annulus_triangulation(const MarkedSurface& s) {
    if (!s.is_annulus())
        throw std::invalid_argument("standard_annulus_triangulation: annulus required");
    Triangulation t;
    t.surface = s;
    for (int j = 1; j <= s.q; ++j) t.arcs.push_back(Curve::bridging(1, j, 0));
    t.arcs.push_back(Curve::bridging(1, 1, 1));
    for (int i = 2; i <= s.p; ++i) t.arcs.push_back(Curve::bridging(i, 1, 1));
    return t;
}

namespace {

// Points of the component that are strictly inside some arc's cut-off disc.
std::vector<bool> covered_points(const std::vector<Curve>& arcs, BoundarySide side, int P) {
    std::vector<bool> covered(P + 1, false);
    for (const Curve& g : arcs) {
        if (g.side != side) continue;
        for (int step = 1; step < g.span; ++step)
            covered[(g.start - 1 + step) % P + 1] = true;
    }
    return covered;
}

std::vector<Curve> complete_side(const MarkedSurface& s, std::vector<Curve> cur,
                                 BoundarySide side, int P, int free_pt) {
    if (P == 1) {
        if (!cur.empty())
            throw std::invalid_argument("wrap_triangulation: peripheral arc on 1-point side");
        return cur;
    }
    auto compatible_with_all = [&](const Curve& c) {
        for (const Curve& g : cur)
            if (c == g || crossing_number(s, c, g) != 0) return false;
        return true;
    };
    const Curve near_loop = Curve::peripheral(side, free_pt, P);
    if (std::find(cur.begin(), cur.end(), near_loop) == cur.end()) {
        if (!compatible_with_all(near_loop))
            throw std::logic_error("wrap_triangulation: near-loop incompatible with input");
        cur.push_back(near_loop);
    }
    for (int start = 1; start <= P && static_cast<int>(cur.size()) < P - 1; ++start)
        for (int span = 2; span <= P && static_cast<int>(cur.size()) < P - 1; ++span) {
            const Curve c = Curve::peripheral(side, start, span);
            if (compatible_with_all(c)) cur.push_back(c);
        }
    if (static_cast<int>(cur.size()) != P - 1)
        throw std::logic_error("wrap_triangulation: could not complete peripheral side");
    std::sort(cur.begin(), cur.end());
    return cur;
}

}  // namespace

WrapResult wrap_triangulation(const MarkedSurface& s, const std::vector<Curve>& periph_arcs,
                              int r) {
    if (!s.is_annulus()) throw std::invalid_argument("wrap_triangulation: annulus required");
    std::vector<Curve> inner_arcs, outer_arcs;
    for (const Curve& g : periph_arcs) {
        if (!g.is_peripheral())
            throw std::invalid_argument("wrap_triangulation: non-peripheral input arc");
        if (!is_arc(s, g))
            throw std::invalid_argument("wrap_triangulation: input curve is not an arc");
        (g.side == BoundarySide::Inner ? inner_arcs : outer_arcs).push_back(g);
    }
    for (std::size_t i = 0; i < periph_arcs.size(); ++i)
        for (std::size_t j = i + 1; j < periph_arcs.size(); ++j)
            if (periph_arcs[i] == periph_arcs[j] ||
                crossing_number(s, periph_arcs[i], periph_arcs[j]) != 0)
                throw std::invalid_argument("wrap_triangulation: incompatible peripheral input");

    auto free_point = [&](const std::vector<Curve>& arcs, BoundarySide side, int P) {
        const auto covered = covered_points(arcs, side, P);
        for (int pt = 1; pt <= P; ++pt)
            if (!covered[pt]) return pt;
        throw std::invalid_argument("wrap_triangulation: no free vertex on a boundary side");
    };
    const int I = free_point(inner_arcs, BoundarySide::Inner, s.p);
    const int O = free_point(outer_arcs, BoundarySide::Outer, s.q);

    WrapResult res;
    res.t.surface = s;
    for (const Curve& g : complete_side(s, inner_arcs, BoundarySide::Inner, s.p, I))
        res.t.arcs.push_back(g);
    for (const Curve& g : complete_side(s, outer_arcs, BoundarySide::Outer, s.q, O))
        res.t.arcs.push_back(g);
    res.alpha = res.t.rank();
    res.t.arcs.push_back(Curve::bridging(I, O, r));
    res.beta = res.t.rank();
    res.t.arcs.push_back(Curve::bridging(I, O, r + 1));

    if (auto rep = validate(res.t); !rep.ok)
        throw std::logic_error("wrap_triangulation: invalid result: " + rep.message);
    return res;
}

std::string canonical_key(const Triangulation& t) {
    std::vector<std::string> keys;
    for (const Curve& g : t.arcs) keys.push_back(g.to_string());
    std::sort(keys.begin(), keys.end());
    std::ostringstream os;
    os << t.surface.to_string();
    for (const auto& k : keys) os << '|' << k;
    return os.str();
}

}  // namespace clusterwalk
