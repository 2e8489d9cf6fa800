#include "clusterwalk/surface.hpp"

#include <doctest.h>

#include <random>

using namespace clusterwalk;

namespace {

// Independent one-line oracle: polygon chords cross iff their endpoints
// strictly interleave around the cycle.
bool interleaved(const Curve& g1, const Curve& g2) {
    auto inside = [&](int x) { return g1.a < x && x < g1.b; };
    if (g1.a == g2.a || g1.a == g2.b || g1.b == g2.a || g1.b == g2.b) return false;
    return inside(g2.a) != inside(g2.b);
}

}  // namespace

TEST_CASE("surface and curve specs round trip") {
    for (const char* spec : {"polygon:2", "annulus:1,3", "annulus:2,2"}) {
        CHECK(MarkedSurface::parse(spec).to_string() == spec);
    }
    for (const char* spec : {"c 1-3", "p inner:1+2", "p outer:3+2", "b i1 o2 w-1", "z2"}) {
        CHECK(Curve::parse(spec).to_string() == spec);
    }
    CHECK_THROWS_AS(MarkedSurface::parse("torus:1"), std::invalid_argument);
    CHECK_THROWS_AS(Curve::parse("q 1-2"), std::invalid_argument);
    CHECK_THROWS_AS(Curve::peripheral(BoundarySide::Inner, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(MarkedSurface::polygon(0), std::invalid_argument);
}

TEST_CASE("polygon crossings match the interleaving oracle") {
    const MarkedSurface s = MarkedSurface::polygon(5);
    const auto arcs = enumerate_arcs(s, 0);
    for (const Curve& a : arcs)
        for (const Curve& b : arcs)
            CHECK(crossing_number(s, a, b) == ((a == b) ? 0 : (interleaved(a, b) ? 1 : 0)));

    CHECK(crossing_number(MarkedSurface::polygon(2), Curve::chord(1, 3), Curve::chord(2, 4)) == 1);
}

TEST_CASE("bridging crossings on the Kronecker annulus") {
    const MarkedSurface s = MarkedSurface::annulus(1, 1);
    // The arcs form a single winding-indexed family; windings at distance
    // d cross d-1 times.
    for (int w1 = -3; w1 <= 3; ++w1)
        for (int w2 = -3; w2 <= 3; ++w2) {
            const long expected = std::max(0, std::abs(w1 - w2) - 1);
            CHECK(crossing_number(s, Curve::bridging(1, 1, w1), Curve::bridging(1, 1, w2)) ==
                  expected);
        }
}

TEST_CASE("crossing number is symmetric") {
    const MarkedSurface s = MarkedSurface::annulus(2, 3);
    const auto arcs = enumerate_arcs(s, 2);
    std::mt19937 gen(5u);
    for (int i = 0; i < 300; ++i) {
        const Curve& a = arcs[gen() % arcs.size()];
        const Curve& b = arcs[gen() % arcs.size()];
        CHECK(crossing_number(s, a, b) == crossing_number(s, b, a));
    }
}

TEST_CASE("peripheral self-crossings follow the wrap count") {
    for (int p : {1, 2, 3}) {
        const MarkedSurface s = MarkedSurface::annulus(p, 2);
        for (int span = 2; span <= 3 * p + 1; ++span) {
            const Curve g = Curve::peripheral(BoundarySide::Inner, 1, span);
            const long expected = std::max(0L, static_cast<long>((span + p - 1) / p) - 1);
            CHECK(crossing_number(s, g, g) == expected);
        }
    }
}

TEST_CASE("loop crossing rules") {
    const MarkedSurface s = MarkedSurface::annulus(2, 2);
    CHECK(crossing_number(s, Curve::loop(1), Curve::loop(1)) == 0);
    CHECK(crossing_number(s, Curve::loop(3), Curve::loop(3)) == 2);
    CHECK(crossing_number(s, Curve::loop(2), Curve::loop(5)) == 0);
    CHECK(crossing_number(s, Curve::loop(2), Curve::peripheral(BoundarySide::Outer, 1, 2)) == 0);
    CHECK(crossing_number(s, Curve::loop(3), Curve::bridging(1, 1, 0)) == 3);
    CHECK(are_compatible(s, Curve::loop(1), Curve::peripheral(BoundarySide::Inner, 1, 2)));
    CHECK(!are_compatible(s, Curve::loop(1), Curve::bridging(1, 1, 0)));
}

TEST_CASE("is_arc") {
    const MarkedSurface s = MarkedSurface::annulus(3, 1);
    CHECK(is_arc(MarkedSurface::polygon(3), Curve::chord(2, 5)));
    CHECK(is_arc(s, Curve::peripheral(BoundarySide::Inner, 1, 3)));   // near-loop
    CHECK(!is_arc(s, Curve::peripheral(BoundarySide::Inner, 1, 4)));  // wraps past itself
    CHECK(is_arc(s, Curve::bridging(2, 1, 5)));
    CHECK_THROWS_AS(is_arc(s, Curve::loop(1)), std::invalid_argument);
}

TEST_CASE("compatibility") {
    const MarkedSurface pent = MarkedSurface::polygon(2);
    CHECK(are_compatible(pent, Curve::chord(1, 3), Curve::chord(1, 4)));
    CHECK(!are_compatible(pent, Curve::chord(1, 3), Curve::chord(2, 4)));
    const MarkedSurface s = MarkedSurface::annulus(2, 2);
    const Curve p12 = Curve::peripheral(BoundarySide::Inner, 1, 2);
    CHECK(are_compatible(s, p12, p12));
}

TEST_CASE("arc enumeration") {
    CHECK(enumerate_arcs(MarkedSurface::polygon(2), 0).size() == 5);
    CHECK(enumerate_arcs(MarkedSurface::polygon(3), 0).size() == 9);
    // C_{1,1} has no peripheral arcs; the bridging arcs form one family.
    const auto arcs = enumerate_arcs(MarkedSurface::annulus(1, 1), 1);
    CHECK(arcs.size() == 3);
    for (const Curve& g : arcs) CHECK(g.is_bridging());
    // Deterministic order.
    const auto again = enumerate_arcs(MarkedSurface::annulus(1, 1), 1);
    CHECK(arcs == again);
}

TEST_CASE("boundary segments") {
    CHECK(boundary_segments(MarkedSurface::polygon(2)).size() == 5);
    const auto segs = boundary_segments(MarkedSurface::annulus(2, 1));
    CHECK(segs.size() == 3);
    CHECK(segs[0].to_string() == "i1");
    CHECK(segs[2].to_string() == "o1");
}
