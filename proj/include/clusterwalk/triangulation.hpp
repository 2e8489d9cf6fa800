#pragma once

#include "clusterwalk/surface.hpp"

#include <string>
#include <vector>

namespace clusterwalk {

/// Maximal set of pairwise compatible arcs. The stored order defines the
/// variable indices 1..n of the ambient Laurent ring.
struct Triangulation {
    MarkedSurface surface;
    std::vector<Curve> arcs;

    int rank() const { return static_cast<int>(arcs.size()); }
    int index_of(const Curve& g) const;  // -1 when absent
};

struct ValidationReport {
    bool ok = true;
    std::string message;
    int index1 = -1, index2 = -1;  // offending arc pair, when applicable
    explicit operator bool() const { return ok; }
};

ValidationReport validate(const Triangulation& t);

/// Replace arc k (0-based) by the unique other arc completing a
/// triangulation; all other arcs keep their indices.
Triangulation flip(const Triangulation& t, int k);

/// Skew-symmetric exchange matrix of the triangulation's quiver:
/// b[i][j] counts shared triangles where j follows i counterclockwise,
/// minus those where it follows clockwise.
std::vector<std::vector<int>> exchange_matrix(const Triangulation& t);

/// Fomin-Zelevinsky matrix mutation in direction k (0-based).
std::vector<std::vector<int>> mutate_matrix(const std::vector<std::vector<int>>& b, int k);

/// All chords from vertex 1 of the polygon.
Triangulation fan_triangulation(const MarkedSurface& s);

/// The zig-zag triangulation: bridging arcs from the first inner point to
/// every outer point, the winding-1 closer, and the remaining inner
/// points joined to the first outer point of the next period.
Triangulation standard_annulus_triangulation(const MarkedSurface& s);

struct WrapResult {
    Triangulation t;
    int alpha = -1;  // index of the winding-r arc
    int beta = -1;   // index of its winding-(r+1) companion
};

/// Completes the given pairwise-compatible peripheral arcs to a
/// triangulation containing the two wrapping bridging arcs with windings
/// r and r+1 anchored at the free marked points.
WrapResult wrap_triangulation(const MarkedSurface& s, const std::vector<Curve>& periph_arcs,
                              int r);

/// Order-insensitive identity of the arc set, for graph exploration.
std::string canonical_key(const Triangulation& t);

}  // namespace clusterwalk
