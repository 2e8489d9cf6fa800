#pragma once

#include "clusterwalk/triangulation_fwd.hpp"
#include "clusterwalk/surface.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <vector>

namespace clusterwalk {

// Finite window of the universal cover of an annulus (or a whole polygon),
// modelled as a convex disc: boundary vertices in counterclockwise order,
// arcs of the lifted triangulation as chords. All crossing and ordering
// questions reduce to cyclic combinatorics of vertex positions.

struct ChunkVertex {
    BoundarySide side = BoundarySide::Outer;  // Inner = top line, Outer = bottom
    int point = 0;                            // marked point index, 1-based
    std::int64_t translate = 0;               // deck translate k
    std::int64_t x = 0;                       // scaled strip coordinate
};

enum class ChunkEdgeKind { Arc, Boundary, Synthetic };

struct ChunkEdge {
    int u = -1, v = -1;  // vertex ids, u < v in cyclic position
    ChunkEdgeKind kind = ChunkEdgeKind::Boundary;
    int arc_index = -1;              // for Arc: 0-based index into the triangulation
    std::int64_t translate = 0;      // lift tag
    BoundarySide bside = BoundarySide::Outer;  // for Boundary
    int bindex = 0;                  // boundary segment index, 1-based
};

class CoverChunk {
public:
    std::vector<ChunkVertex> verts;  // stored in ccw cyclic order; id == position
    std::vector<ChunkEdge> edges;
    std::vector<std::vector<int>> incident;        // vertex -> edge ids
    std::map<std::pair<int, int>, int> edge_at;    // (min id, max id) -> edge id

    int vertex_count() const { return static_cast<int>(verts.size()); }

    int other(int edge_id, int v) const {
        const ChunkEdge& e = edges[edge_id];
        return e.u == v ? e.v : e.u;
    }
    bool edge_incident(int edge_id, int v) const {
        return edges[edge_id].u == v || edges[edge_id].v == v;
    }
    int find_edge(int u, int v) const {
        auto it = edge_at.find({std::min(u, v), std::max(u, v)});
        return it == edge_at.end() ? -1 : it->second;
    }

    // w strictly inside the ccw run from u to v.
    bool in_open_arc(int w, int u, int v) const {
        if (u == v) return false;
        if (u < v) return u < w && w < v;
        return w > u || w < v;
    }
    bool chords_cross(int a, int b, int c, int d) const {
        if (a == c || a == d || b == c || b == d) return false;
        return in_open_arc(c, a, b) != in_open_arc(d, a, b);
    }

    // Chords e and f both separate A from B; true iff e is crossed first
    // travelling from A (its B-side closure contains all of f).
    bool crossed_before(int e, int f, int B) const;

    // Vertex lookup by (side, point, translate); -1 when absent.
    int find_vertex(BoundarySide side, int point, std::int64_t translate) const;

    // Chords of the stored triangulation crossing the chord (A,B), sorted
    // by crossing position along it starting at A.
    std::vector<int> crossing_sequence(int A, int B) const;

    // Triangular faces (vertex triples in ccw order) not touching the
    // synthetic end-caps of the window.
    std::vector<std::array<int, 3>> triangle_faces() const;

private:
    std::map<std::tuple<int, int, std::int64_t>, int> vertex_at_;
    friend CoverChunk build_polygon_chunk(const Triangulation& t);
    friend CoverChunk build_annulus_chunk(const Triangulation& t, std::int64_t xlo,
                                          std::int64_t xhi);
};

CoverChunk build_polygon_chunk(const Triangulation& t);

// Window of the lifted triangulation covering [xlo, xhi] in scaled strip
// coordinates, with every lift whose endpoints both land inside.
CoverChunk build_annulus_chunk(const Triangulation& t, std::int64_t xlo, std::int64_t xhi);

// Largest scaled lift width over the triangulation's arcs.
std::int64_t max_lift_width(const Triangulation& t);

}  // namespace clusterwalk
