#include "clusterwalk/cover_chunk.hpp"

#include "clusterwalk/triangulation.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace clusterwalk {

namespace {

void index_chunk(CoverChunk& ch) {
    ch.incident.assign(ch.verts.size(), {});
    for (int i = 0; i < static_cast<int>(ch.edges.size()); ++i) {
        ChunkEdge& e = ch.edges[i];
        if (e.u > e.v) std::swap(e.u, e.v);
        ch.incident[e.u].push_back(i);
        ch.incident[e.v].push_back(i);
        ch.edge_at[{e.u, e.v}] = i;
    }
}

}  // namespace

int CoverChunk::find_vertex(BoundarySide side, int point, std::int64_t translate) const {
    auto it = vertex_at_.find({static_cast<int>(side), point, translate});
    return it == vertex_at_.end() ? -1 : it->second;
}

bool CoverChunk::crossed_before(int e, int f, int B) const {
    const ChunkEdge& ce = edges[e];
    const ChunkEdge& cf = edges[f];
    int from = ce.u, to = ce.v;
    if (!in_open_arc(B, from, to)) std::swap(from, to);
    auto in_closed_b_side = [&](int w) {
        return w == ce.u || w == ce.v || in_open_arc(w, from, to);
    };
    return in_closed_b_side(cf.u) && in_closed_b_side(cf.v);
}

std::vector<int> CoverChunk::crossing_sequence(int A, int B) const {
    std::vector<int> seq;
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
        const ChunkEdge& e = edges[i];
        if (e.kind != ChunkEdgeKind::Arc) continue;
        if (chords_cross(A, B, e.u, e.v)) seq.push_back(i);
    }
    std::sort(seq.begin(), seq.end(), [&](int e, int f) { return crossed_before(e, f, B); });
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        if (!crossed_before(seq[i], seq[i + 1], B))
            throw std::logic_error("crossing_sequence: order is not total");
    }
    return seq;
}

std::vector<std::array<int, 3>> CoverChunk::triangle_faces() const {
    std::vector<std::array<int, 3>> out;
    std::function<void(const std::vector<int>&)> split = [&](const std::vector<int>& region) {
        const int k = static_cast<int>(region.size());
        if (k < 3) return;
        for (int i = 0; i < k; ++i) {
            for (int j = i + 2; j < k; ++j) {
                if (i == 0 && j == k - 1) continue;
                int e = find_edge(region[i], region[j]);
                if (e < 0 || edges[e].kind != ChunkEdgeKind::Arc) continue;
                std::vector<int> left(region.begin() + i, region.begin() + j + 1);
                std::vector<int> right(region.begin() + j, region.end());
                right.insert(right.end(), region.begin(), region.begin() + i + 1);
                split(left);
                split(right);
                return;
            }
        }
        if (k != 3) return;  // incomplete region at a window cap
        for (int i = 0; i < 3; ++i) {
            int e = find_edge(region[i], region[(i + 1) % 3]);
            if (e < 0 || edges[e].kind == ChunkEdgeKind::Synthetic) return;
        }
        out.push_back({region[0], region[1], region[2]});
    };
    std::vector<int> all(verts.size());
    std::iota(all.begin(), all.end(), 0);
    split(all);
    return out;
}

CoverChunk build_polygon_chunk(const Triangulation& t) {
    const int N = t.surface.polygon_vertices();
    CoverChunk ch;
    for (int i = 1; i <= N; ++i) {
        ch.verts.push_back(ChunkVertex{BoundarySide::Outer, i, 0, i});
        ch.vertex_at_[{static_cast<int>(BoundarySide::Outer), i, 0}] = i - 1;
    }
    for (int i = 1; i <= N; ++i) {
        ChunkEdge e;
        e.u = i - 1;
        e.v = i % N;
        e.kind = ChunkEdgeKind::Boundary;
        e.bside = BoundarySide::Outer;
        e.bindex = i;
        ch.edges.push_back(e);
    }
    for (int ai = 0; ai < t.rank(); ++ai) {
        const Curve& g = t.arcs[ai];
        ChunkEdge e;
        e.u = g.a - 1;
        e.v = g.b - 1;
        e.kind = ChunkEdgeKind::Arc;
        e.arc_index = ai;
        ch.edges.push_back(e);
    }
    index_chunk(ch);
    return ch;
}

CoverChunk build_annulus_chunk(const Triangulation& t, std::int64_t xlo, std::int64_t xhi) {
    const MarkedSurface& s = t.surface;
    const std::int64_t K = cover::scale(s);
    CoverChunk ch;

    // Bottom (outer) run, left to right.
    std::vector<std::pair<std::int64_t, std::pair<int, std::int64_t>>> bottom, top;
    for (std::int64_t k = xlo / K - 2; k <= xhi / K + 2; ++k) {
        for (int j = 1; j <= s.q; ++j) {
            std::int64_t x = cover::outer_x(s, j, k);
            if (x >= xlo && x <= xhi) bottom.push_back({x, {j, k}});
        }
        for (int i = 1; i <= s.p; ++i) {
            std::int64_t x = cover::inner_x(s, i, k);
            if (x >= xlo && x <= xhi) top.push_back({x, {i, k}});
        }
    }
    std::sort(bottom.begin(), bottom.end());
    std::sort(top.begin(), top.end(), std::greater<>());  // ccw: top runs right to left
    if (bottom.size() < 2 || top.size() < 2)
        throw std::logic_error("build_annulus_chunk: window too narrow");

    for (const auto& [x, pk] : bottom) {
        ch.vertex_at_[{static_cast<int>(BoundarySide::Outer), pk.first, pk.second}] =
            static_cast<int>(ch.verts.size());
        ch.verts.push_back(ChunkVertex{BoundarySide::Outer, pk.first, pk.second, x});
    }
    const int nb = static_cast<int>(ch.verts.size());
    for (const auto& [x, pk] : top) {
        ch.vertex_at_[{static_cast<int>(BoundarySide::Inner), pk.first, pk.second}] =
            static_cast<int>(ch.verts.size());
        ch.verts.push_back(ChunkVertex{BoundarySide::Inner, pk.first, pk.second, x});
    }
    const int nt = static_cast<int>(ch.verts.size()) - nb;

    auto segment_edge = [&](int u, int v) {
        // Boundary segment between horizontally adjacent lifts, identified
        // by its left endpoint.
        const ChunkVertex& left = ch.verts[u].x < ch.verts[v].x ? ch.verts[u] : ch.verts[v];
        ChunkEdge e;
        e.u = u;
        e.v = v;
        e.kind = ChunkEdgeKind::Boundary;
        e.bside = left.side;
        e.bindex = left.point;
        e.translate = left.translate;
        return e;
    };
    for (int i = 0; i + 1 < nb; ++i) ch.edges.push_back(segment_edge(i, i + 1));
    for (int i = nb; i + 1 < nb + nt; ++i) ch.edges.push_back(segment_edge(i, i + 1));
    {
        ChunkEdge cap1, cap2;  // window end caps, never usable by walks
        cap1.u = nb - 1;
        cap1.v = nb;
        cap1.kind = ChunkEdgeKind::Synthetic;
        cap2.u = nb + nt - 1;
        cap2.v = 0;
        cap2.kind = ChunkEdgeKind::Synthetic;
        ch.edges.push_back(cap1);
        ch.edges.push_back(cap2);
    }

    for (int ai = 0; ai < t.rank(); ++ai) {
        const Curve& g = t.arcs[ai];
        for (std::int64_t k = xlo / K - 2; k <= xhi / K + 2; ++k) {
            int u = -1, v = -1;
            if (g.is_bridging()) {
                u = ch.find_vertex(BoundarySide::Inner, g.inner_pt, k);
                const std::int64_t wk = k + g.winding;
                v = ch.find_vertex(BoundarySide::Outer, g.outer_pt, wk);
            } else if (g.is_peripheral()) {
                const int P = g.side == BoundarySide::Inner ? s.p : s.q;
                u = ch.find_vertex(g.side, g.start, k);
                const int end_pt = (g.start - 1 + g.span) % P + 1;
                const std::int64_t end_k = k + (g.start - 1 + g.span) / P;
                v = ch.find_vertex(g.side, end_pt, end_k);
            }
            if (u < 0 || v < 0) continue;
            ChunkEdge e;
            e.u = u;
            e.v = v;
            e.kind = ChunkEdgeKind::Arc;
            e.arc_index = ai;
            e.translate = k;
            ch.edges.push_back(e);
        }
    }
    index_chunk(ch);
    return ch;
}

std::int64_t max_lift_width(const Triangulation& t) {
    const MarkedSurface& s = t.surface;
    std::int64_t w = cover::scale(s);
    for (const Curve& g : t.arcs) {
        if (g.is_bridging()) {
            const auto l = cover::lift_bridging(s, g, 0);
            w = std::max(w, std::abs(l.x_outer - l.x_inner));
        } else if (g.is_peripheral()) {
            const auto l = cover::lift_peripheral(s, g, 0);
            w = std::max(w, l.x_to - l.x_from);
        }
    }
    return w;
}

}  // namespace clusterwalk
