#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace clusterwalk {

enum class SurfaceKind { Polygon, Annulus };

/// Marked surface: a disc with n+3 boundary points (polygon model of
/// type A) or an annulus with p inner and q outer points (type A-tilde).
struct MarkedSurface {
    SurfaceKind kind = SurfaceKind::Polygon;
    int n = 0;  // polygon parameter, boundary has n+3 points
    int p = 0;  // annulus inner points
    int q = 0;  // annulus outer points

    static MarkedSurface polygon(int n) {
        if (n < 1) throw std::invalid_argument("polygon: n >= 1 required");
        MarkedSurface s;
        s.kind = SurfaceKind::Polygon;
        s.n = n;
        return s;
    }
    static MarkedSurface annulus(int p, int q) {
        if (p < 1 || q < 1) throw std::invalid_argument("annulus: p,q >= 1 required");
        MarkedSurface s;
        s.kind = SurfaceKind::Annulus;
        s.p = p;
        s.q = q;
        return s;
    }

    bool is_polygon() const { return kind == SurfaceKind::Polygon; }
    bool is_annulus() const { return kind == SurfaceKind::Annulus; }
    int rank() const { return is_polygon() ? n : p + q; }
    int polygon_vertices() const { return n + 3; }

    bool operator==(const MarkedSurface& o) const {
        return kind == o.kind && n == o.n && p == o.p && q == o.q;
    }
    bool operator!=(const MarkedSurface& o) const { return !(*this == o); }

    std::string to_string() const;               // "polygon:2" / "annulus:1,3"
    static MarkedSurface parse(const std::string& spec);
};

enum class BoundarySide { Inner, Outer };

enum class CurveType { Chord, Peripheral, Bridging, Loop };

/// Isotopy class of a curve. Chords live on polygons; peripheral,
/// bridging and loop curves on annuli. Peripheral curves run from
/// `start` for `span` boundary steps in the successor direction, so the
/// representation of an isotopy class is unique.
struct Curve {
    CurveType type = CurveType::Chord;
    int a = 0, b = 0;               // chord endpoints, normalised a < b
    BoundarySide side = BoundarySide::Inner;
    int start = 0, span = 0;        // peripheral
    int inner_pt = 0, outer_pt = 0; // bridging
    int winding = 0;                // bridging
    int m = 0;                      // loop

    static Curve chord(int a, int b);
    static Curve peripheral(BoundarySide side, int start, int span);
    static Curve bridging(int inner_pt, int outer_pt, int winding);
    static Curve loop(int m);

    bool is_loop() const { return type == CurveType::Loop; }
    bool is_bridging() const { return type == CurveType::Bridging; }
    bool is_peripheral() const { return type == CurveType::Peripheral; }

    bool operator==(const Curve& o) const;
    bool operator!=(const Curve& o) const { return !(*this == o); }
    bool operator<(const Curve& o) const;  // deterministic global order

    std::string to_string() const;  // "c 1-3" / "p inner:1+2" / "b i1 o2 w-1" / "z2"
    static Curve parse(const std::string& spec);
};

/// Checks that the curve is structurally valid on the surface
/// (endpoint ranges, chord non-adjacency, span >= 2). Throws
/// std::invalid_argument otherwise.
void check_curve(const MarkedSurface& s, const Curve& g);

/// Minimal intersection number of representatives; with g1 == g2 this is
/// the self-intersection count.
long crossing_number(const MarkedSurface& s, const Curve& g1, const Curve& g2);

/// True iff the curve has no self-intersection. Loops are rejected.
bool is_arc(const MarkedSurface& s, const Curve& g);

/// Same curve, or zero crossings.
bool are_compatible(const MarkedSurface& s, const Curve& g1, const Curve& g2);

/// All arcs: every chord (polygon); every peripheral arc and all
/// bridging arcs with |winding| <= max_winding (annulus). Deterministic
/// order.
std::vector<Curve> enumerate_arcs(const MarkedSurface& s, int max_winding);

struct BoundarySegment {
    BoundarySide side = BoundarySide::Inner;  // polygons use Outer by convention
    int index = 0;  // 1-based: segment from point `index` to its successor
    std::string to_string() const;
};

/// The n+3 polygon sides, or the p inner plus q outer segments.
std::vector<BoundarySegment> boundary_segments(const MarkedSurface& s);

namespace cover {

// Universal-cover model of the annulus: the strip R x [0,1] with inner
// point lifts on the top line and outer lifts on the bottom line.
// Coordinates are scaled by K = 4pq(p+q) so everything is an integer;
// the outer lifts carry the +1 tie-breaking offset (the scaled delta).

inline std::int64_t scale(const MarkedSurface& s) {
    return 4LL * s.p * s.q * (s.p + s.q);
}
inline std::int64_t inner_x(const MarkedSurface& s, int i, std::int64_t k) {
    return scale(s) * k + scale(s) * (i - 1) / s.p;
}
inline std::int64_t outer_x(const MarkedSurface& s, int j, std::int64_t k) {
    return scale(s) * k + scale(s) * (j - 1) / s.q + 1;
}

struct PeripheralLift {  // interval on one boundary line
    BoundarySide side;
    std::int64_t x_from, x_to;  // x_from < x_to
};

struct BridgingLift {
    std::int64_t x_inner, x_outer;
};

PeripheralLift lift_peripheral(const MarkedSurface& s, const Curve& g, std::int64_t k);
BridgingLift lift_bridging(const MarkedSurface& s, const Curve& g, std::int64_t k);

}  // namespace cover

}  // namespace clusterwalk
