#include "clusterwalk/surface.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace clusterwalk {

std::string MarkedSurface::to_string() const {
    std::ostringstream out;
    if (is_polygon())
        out << "polygon:" << n;
    else
        out << "annulus:" << p << ',' << q;
    return out.str();
}

MarkedSurface MarkedSurface::parse(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("bad surface spec: " + spec);
    const std::string head = spec.substr(0, colon);
    const std::string rest = spec.substr(colon + 1);
    if (head == "polygon") return polygon(std::stoi(rest));
    if (head == "annulus") {
        auto comma = rest.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("bad surface spec: " + spec);
        return annulus(std::stoi(rest.substr(0, comma)), std::stoi(rest.substr(comma + 1)));
    }
    throw std::invalid_argument("bad surface spec: " + spec);
}

Curve Curve::chord(int a, int b) {
    if (a == b) throw std::invalid_argument("chord: equal endpoints");
    Curve g;
    g.type = CurveType::Chord;
    g.a = std::min(a, b);
    g.b = std::max(a, b);
    return g;
}

Curve Curve::peripheral(BoundarySide side, int start, int span) {
    if (span < 2) throw std::invalid_argument("peripheral: span >= 2 required");
    if (start < 1) throw std::invalid_argument("peripheral: start >= 1 required");
    Curve g;
    g.type = CurveType::Peripheral;
    g.side = side;
    g.start = start;
    g.span = span;
    return g;
}

Curve Curve::bridging(int inner_pt, int outer_pt, int winding) {
    if (inner_pt < 1 || outer_pt < 1) throw std::invalid_argument("bridging: points are 1-based");
    Curve g;
    g.type = CurveType::Bridging;
    g.inner_pt = inner_pt;
    g.outer_pt = outer_pt;
    g.winding = winding;
    return g;
}

Curve Curve::loop(int m) {
    if (m < 1) throw std::invalid_argument("loop: m >= 1 required");
    Curve g;
    g.type = CurveType::Loop;
    g.m = m;
    return g;
}

namespace {
auto key(const Curve& g) {
    return std::make_tuple(static_cast<int>(g.type), g.a, g.b, static_cast<int>(g.side), g.start,
                           g.span, g.inner_pt, g.outer_pt, g.winding, g.m);
}
}  // namespace

bool Curve::operator==(const Curve& o) const { return key(*this) == key(o); }
bool Curve::operator<(const Curve& o) const { return key(*this) < key(o); }

std::string Curve::to_string() const {
    std::ostringstream out;
    switch (type) {
        case CurveType::Chord:
            out << "c " << a << '-' << b;
            break;
        case CurveType::Peripheral:
            out << "p " << (side == BoundarySide::Inner ? "inner" : "outer") << ':' << start << '+'
                << span;
            break;
        case CurveType::Bridging:
            out << "b i" << inner_pt << " o" << outer_pt << " w" << winding;
            break;
        case CurveType::Loop:
            out << 'z' << m;
            break;
    }
    return out.str();
}

Curve Curve::parse(const std::string& spec) {
    std::istringstream in(spec);
    std::string head;
    in >> head;
    if (head.empty()) throw std::invalid_argument("empty curve spec");
    if (head[0] == 'z' && head.size() > 1) return loop(std::stoi(head.substr(1)));
    if (head == "c") {
        std::string body;
        in >> body;
        auto dash = body.find('-');
        if (dash == std::string::npos) throw std::invalid_argument("bad chord spec: " + spec);
        return chord(std::stoi(body.substr(0, dash)), std::stoi(body.substr(dash + 1)));
    }
    if (head == "p") {
        std::string body;
        in >> body;
        auto colon = body.find(':');
        auto plus = body.find('+');
        if (colon == std::string::npos || plus == std::string::npos || plus < colon)
            throw std::invalid_argument("bad peripheral spec: " + spec);
        const std::string side = body.substr(0, colon);
        if (side != "inner" && side != "outer")
            throw std::invalid_argument("bad peripheral side: " + spec);
        return peripheral(side == "inner" ? BoundarySide::Inner : BoundarySide::Outer,
                          std::stoi(body.substr(colon + 1, plus - colon - 1)),
                          std::stoi(body.substr(plus + 1)));
    }
    if (head == "b") {
        std::string si, so, sw;
        in >> si >> so >> sw;
        if (si.size() < 2 || so.size() < 2 || sw.size() < 2 || si[0] != 'i' || so[0] != 'o' ||
            sw[0] != 'w')
            throw std::invalid_argument("bad bridging spec: " + spec);
        return bridging(std::stoi(si.substr(1)), std::stoi(so.substr(1)), std::stoi(sw.substr(1)));
    }
    throw std::invalid_argument("bad curve spec: " + spec);
}

void check_curve(const MarkedSurface& s, const Curve& g) {
    switch (g.type) {
        case CurveType::Chord: {
            if (!s.is_polygon()) throw std::invalid_argument("chord on non-polygon surface");
            const int N = s.polygon_vertices();
            if (g.a < 1 || g.b > N) throw std::invalid_argument("chord endpoint out of range");
            const bool adjacent = (g.b - g.a == 1) || (g.a == 1 && g.b == N);
            if (adjacent) throw std::invalid_argument("chord is a boundary segment");
            return;
        }
        case CurveType::Peripheral: {
            if (!s.is_annulus()) throw std::invalid_argument("peripheral curve on non-annulus");
            const int P = g.side == BoundarySide::Inner ? s.p : s.q;
            if (g.start < 1 || g.start > P)
                throw std::invalid_argument("peripheral start out of range");
            if (g.span < 2) throw std::invalid_argument("peripheral span must be >= 2");
            return;
        }
        case CurveType::Bridging:
            if (!s.is_annulus()) throw std::invalid_argument("bridging curve on non-annulus");
            if (g.inner_pt < 1 || g.inner_pt > s.p || g.outer_pt < 1 || g.outer_pt > s.q)
                throw std::invalid_argument("bridging endpoint out of range");
            return;
        case CurveType::Loop:
            if (!s.is_annulus()) throw std::invalid_argument("loop on non-annulus");
            return;
    }
}

namespace cover {

PeripheralLift lift_peripheral(const MarkedSurface& s, const Curve& g, std::int64_t k) {
    const int P = g.side == BoundarySide::Inner ? s.p : s.q;
    const std::int64_t step = scale(s) / P;
    std::int64_t x0 = g.side == BoundarySide::Inner ? inner_x(s, g.start, k)
                                                    : outer_x(s, g.start, k);
    return PeripheralLift{g.side, x0, x0 + step * g.span};
}

BridgingLift lift_bridging(const MarkedSurface& s, const Curve& g, std::int64_t k) {
    return BridgingLift{inner_x(s, g.inner_pt, k),
                        outer_x(s, g.outer_pt, k) + scale(s) * g.winding};
}

}  // namespace cover

namespace {

using std::int64_t;

// Number of integers k with lo < k*K < hi.
long count_strictly_between(int64_t lo, int64_t hi, int64_t K) {
    if (lo > hi) std::swap(lo, hi);
    long count = 0;
    for (int64_t k = lo / K - 2; k <= hi / K + 2; ++k) {
        if (lo < k * K && k * K < hi) ++count;
    }
    return count;
}

bool strictly_inside(int64_t x, int64_t lo, int64_t hi) { return lo < x && x < hi; }

// Crossing of two same-line interval lifts in the strip: chords of a disc
// cross iff exactly one endpoint is strictly inside the other interval;
// curves sharing an endpoint can be isotoped apart.
long cross_intervals(int64_t u1, int64_t v1, int64_t u2, int64_t v2) {
    if (u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2) return 0;
    return strictly_inside(u2, u1, v1) != strictly_inside(v2, u1, v1) ? 1 : 0;
}

long cross_bridging_bridging(const MarkedSurface& s, const Curve& g1, const Curve& g2) {
    const auto l1 = cover::lift_bridging(s, g1, 0);
    const auto l2 = cover::lift_bridging(s, g2, 0);
    // Translate l2 by k; the pair crosses iff the endpoint orders on the
    // two boundary lines disagree, i.e. k*K lies strictly between the
    // inner and outer offsets.
    return count_strictly_between(l1.x_inner - l2.x_inner, l1.x_outer - l2.x_outer,
                                  cover::scale(s));
}

long cross_peripheral_bridging(const MarkedSurface& s, const Curve& peri, const Curve& bri) {
    const auto pl = cover::lift_peripheral(s, peri, 0);
    const auto bl = cover::lift_bridging(s, bri, 0);
    const int64_t e = pl.side == BoundarySide::Inner ? bl.x_inner : bl.x_outer;
    return count_strictly_between(pl.x_from - e, pl.x_to - e, cover::scale(s));
}

long cross_peripheral_peripheral(const MarkedSurface& s, const Curve& g1, const Curve& g2) {
    if (g1.side != g2.side) return 0;
    const auto l1 = cover::lift_peripheral(s, g1, 0);
    const auto l2 = cover::lift_peripheral(s, g2, 0);
    const int64_t K = cover::scale(s);
    long total = 0;
    const int64_t klo = (l1.x_from - l2.x_to) / K - 2;
    const int64_t khi = (l1.x_to - l2.x_from) / K + 2;
    for (int64_t k = klo; k <= khi; ++k)
        total += cross_intervals(l1.x_from, l1.x_to, l2.x_from + k * K, l2.x_to + k * K);
    return total;
}

long self_crossings(const MarkedSurface& s, const Curve& g) {
    if (g.type == CurveType::Loop) return g.m - 1;
    if (g.type != CurveType::Peripheral) return 0;  // chords and bridging arcs are simple
    const auto l = cover::lift_peripheral(s, g, 0);
    const int64_t K = cover::scale(s);
    long total = 0;
    for (int64_t d = 1; d * K < l.x_to - l.x_from + K; ++d)
        total += cross_intervals(l.x_from, l.x_to, l.x_from + d * K, l.x_to + d * K);
    return total;
}

long cross_polygon_chords(const Curve& g1, const Curve& g2) {
    if (g1.a == g2.a || g1.a == g2.b || g1.b == g2.a || g1.b == g2.b) return 0;
    const bool a_in = g1.a < g2.a && g2.a < g1.b;
    const bool b_in = g1.a < g2.b && g2.b < g1.b;
    return a_in != b_in ? 1 : 0;
}

}  // namespace

long crossing_number(const MarkedSurface& s, const Curve& g1, const Curve& g2) {
    check_curve(s, g1);
    check_curve(s, g2);
    if (g1 == g2) return self_crossings(s, g1);

    if (s.is_polygon()) return cross_polygon_chords(g1, g2);

    // Loop rules: distinct loops are disjoint, loops miss peripheral
    // curves, and z_m meets every bridging arc once per meridian transit.
    if (g1.is_loop() || g2.is_loop()) {
        const Curve& z = g1.is_loop() ? g1 : g2;
        const Curve& other = g1.is_loop() ? g2 : g1;
        if (other.is_loop()) return 0;
        if (other.is_bridging()) return z.m;
        return 0;
    }

    if (g1.is_bridging() && g2.is_bridging()) return cross_bridging_bridging(s, g1, g2);
    if (g1.is_peripheral() && g2.is_peripheral()) return cross_peripheral_peripheral(s, g1, g2);
    const Curve& peri = g1.is_peripheral() ? g1 : g2;
    const Curve& bri = g1.is_peripheral() ? g2 : g1;
    return cross_peripheral_bridging(s, peri, bri);
}

bool is_arc(const MarkedSurface& s, const Curve& g) {
    if (g.is_loop()) throw std::invalid_argument("is_arc: loop input");
    check_curve(s, g);
    return crossing_number(s, g, g) == 0;
}

bool are_compatible(const MarkedSurface& s, const Curve& g1, const Curve& g2) {
    return g1 == g2 || crossing_number(s, g1, g2) == 0;
}

std::vector<Curve> enumerate_arcs(const MarkedSurface& s, int max_winding) {
    std::vector<Curve> arcs;
    if (s.is_polygon()) {
        const int N = s.polygon_vertices();
        for (int a = 1; a <= N; ++a)
            for (int b = a + 2; b <= N; ++b) {
                if (a == 1 && b == N) continue;  // adjacent around the cycle
                arcs.push_back(Curve::chord(a, b));
            }
        return arcs;
    }
    for (BoundarySide side : {BoundarySide::Inner, BoundarySide::Outer}) {
        const int P = side == BoundarySide::Inner ? s.p : s.q;
        for (int start = 1; start <= P; ++start)
            for (int span = 2; span <= P; ++span)
                arcs.push_back(Curve::peripheral(side, start, span));
    }
    for (int i = 1; i <= s.p; ++i)
        for (int j = 1; j <= s.q; ++j)
            for (int w = -max_winding; w <= max_winding; ++w)
                arcs.push_back(Curve::bridging(i, j, w));
    return arcs;
}

std::string BoundarySegment::to_string() const {
    std::ostringstream out;
    out << (side == BoundarySide::Inner ? 'i' : 'o') << index;
    return out.str();
}

std::vector<BoundarySegment> boundary_segments(const MarkedSurface& s) {
    std::vector<BoundarySegment> segs;
    if (s.is_polygon()) {
        for (int i = 1; i <= s.polygon_vertices(); ++i)
            segs.push_back(BoundarySegment{BoundarySide::Outer, i});
        return segs;
    }
    for (int i = 1; i <= s.p; ++i) segs.push_back(BoundarySegment{BoundarySide::Inner, i});
    for (int j = 1; j <= s.q; ++j) segs.push_back(BoundarySegment{BoundarySide::Outer, j});
    return segs;
}

}  // namespace clusterwalk
