#include "clusterwalk/triangulation.hpp"

#include "clusterwalk/basis.hpp"

#include <doctest.h>

using namespace clusterwalk;

namespace {

Triangulation make(const MarkedSurface& s, const std::vector<std::string>& arcs) {
    Triangulation t;
    t.surface = s;
    for (const auto& a : arcs) t.arcs.push_back(Curve::parse(a));
    return t;
}

}  // namespace

TEST_CASE("validation") {
    const MarkedSurface pent = MarkedSurface::polygon(2);
    CHECK(validate(make(pent, {"c 1-3", "c 1-4"})).ok);
    const auto crossing = validate(make(pent, {"c 1-3", "c 2-4"}));
    CHECK(!crossing.ok);
    CHECK(crossing.index1 == 0);
    CHECK(crossing.index2 == 1);
    CHECK(!validate(make(pent, {"c 1-3"})).ok);  // not maximal

    const MarkedSurface s11 = MarkedSurface::annulus(1, 1);
    CHECK(validate(make(s11, {"b i1 o1 w0", "b i1 o1 w1"})).ok);
    CHECK(!validate(make(s11, {"b i1 o1 w0", "b i1 o1 w2"})).ok);
}

TEST_CASE("named triangulations") {
    CHECK(fan_triangulation(MarkedSurface::polygon(1)).arcs ==
          std::vector<Curve>{Curve::chord(1, 3)});
    CHECK(fan_triangulation(MarkedSurface::polygon(2)).arcs ==
          std::vector<Curve>{Curve::chord(1, 3), Curve::chord(1, 4)});
    CHECK(fan_triangulation(MarkedSurface::polygon(3)).rank() == 3);

    // The four-arc zig-zag of the (1,3) annulus, indexed 1..4.
    const Triangulation t13 = standard_annulus_triangulation(MarkedSurface::annulus(1, 3));
    CHECK(t13.arcs == std::vector<Curve>{Curve::bridging(1, 1, 0), Curve::bridging(1, 2, 0),
                                         Curve::bridging(1, 3, 0), Curve::bridging(1, 1, 1)});
    CHECK(validate(t13).ok);
    CHECK(validate(standard_annulus_triangulation(MarkedSurface::annulus(2, 2))).ok);
    CHECK(validate(standard_annulus_triangulation(MarkedSurface::annulus(3, 2))).ok);
}

TEST_CASE("flips") {
    const Triangulation fan = fan_triangulation(MarkedSurface::polygon(2));
    const Triangulation f = flip(fan, 0);
    CHECK(f.arcs == std::vector<Curve>{Curve::chord(2, 4), Curve::chord(1, 4)});

    // Kronecker: flipping the winding-0 arc out of {0,1} gives winding 2.
    const Triangulation t11 =
        standard_annulus_triangulation(MarkedSurface::annulus(1, 1));
    CHECK(flip(t11, 0).arcs[0] == Curve::bridging(1, 1, 2));

    for (const Triangulation& t : exchange_graph(MarkedSurface::polygon(3), -1).vertices) {
        for (int k = 0; k < t.rank(); ++k) {
            const Triangulation g = flip(t, k);
            CHECK(flip(g, k).arcs == t.arcs);
            int changed = 0;
            for (int i = 0; i < t.rank(); ++i) changed += !(g.arcs[i] == t.arcs[i]);
            CHECK(changed == 1);
        }
    }
    for (const Triangulation& t : exchange_graph(MarkedSurface::annulus(2, 1), 2).vertices) {
        for (int k = 0; k < t.rank(); ++k) CHECK(flip(flip(t, k), k).arcs == t.arcs);
    }
}

TEST_CASE("exchange matrices") {
    const auto bf = exchange_matrix(fan_triangulation(MarkedSurface::polygon(2)));
    CHECK(bf[0][0] == 0);
    CHECK(bf[1][1] == 0);
    CHECK(std::abs(bf[0][1]) == 1);
    CHECK(bf[0][1] == -bf[1][0]);

    const auto bk =
        exchange_matrix(standard_annulus_triangulation(MarkedSurface::annulus(1, 1)));
    CHECK(std::abs(bk[0][1]) == 2);
    CHECK(bk[0][1] == -bk[1][0]);

    // Skew symmetry, bounded entries, and consistency with matrix mutation.
    for (const char* name : {"polygon:3", "annulus:2,2"}) {
        const MarkedSurface s = MarkedSurface::parse(name);
        for (const Triangulation& t : exchange_graph(s, 2).vertices) {
            const auto b = exchange_matrix(t);
            for (int i = 0; i < t.rank(); ++i)
                for (int j = 0; j < t.rank(); ++j) {
                    CHECK(b[i][j] == -b[j][i]);
                    CHECK(std::abs(b[i][j]) <= 2);
                }
            for (int k = 0; k < t.rank(); ++k)
                CHECK(exchange_matrix(flip(t, k)) == mutate_matrix(b, k));
        }
    }
}

TEST_CASE("wrap triangulations") {
    const MarkedSurface s11 = MarkedSurface::annulus(1, 1);
    const WrapResult w0 = wrap_triangulation(s11, {}, 0);
    CHECK(w0.t.arcs[w0.alpha] == Curve::bridging(1, 1, 0));
    CHECK(w0.t.arcs[w0.beta] == Curve::bridging(1, 1, 1));

    const MarkedSurface s22 = MarkedSurface::annulus(2, 2);
    for (int r = -2; r <= 2; ++r) {
        const WrapResult w = wrap_triangulation(s22, {}, r);
        CHECK(validate(w.t).ok);
        CHECK(w.t.arcs[w.alpha].winding == r);
        CHECK(w.t.arcs[w.beta].winding == r + 1);
    }

    // With a prescribed peripheral arc, the wrapping arc still crosses the
    // core loop once while winding r times.
    const Curve beta1 = Curve::peripheral(BoundarySide::Outer, 1, 2);
    const WrapResult w2 = wrap_triangulation(s22, {beta1}, 2);
    CHECK(validate(w2.t).ok);
    CHECK(w2.t.index_of(beta1) >= 0);
    CHECK(crossing_number(s22, w2.t.arcs[w2.alpha], Curve::loop(1)) == 1);
    CHECK(w2.t.arcs[w2.alpha].winding == 2);

    CHECK_THROWS_AS(wrap_triangulation(s22, {Curve::bridging(1, 1, 0)}, 0),
                    std::invalid_argument);
    // Covering every inner point leaves no free vertex.
    CHECK_THROWS_AS(wrap_triangulation(s22,
                                       {Curve::peripheral(BoundarySide::Inner, 1, 2),
                                        Curve::peripheral(BoundarySide::Inner, 2, 2)},
                                       0),
                    std::invalid_argument);
}

TEST_CASE("canonical keys ignore order") {
    const MarkedSurface pent = MarkedSurface::polygon(2);
    CHECK(canonical_key(make(pent, {"c 1-3", "c 1-4"})) ==
          canonical_key(make(pent, {"c 1-4", "c 1-3"})));
    CHECK(canonical_key(make(pent, {"c 1-3", "c 1-4"})) !=
          canonical_key(make(pent, {"c 2-4", "c 1-4"})));
}
