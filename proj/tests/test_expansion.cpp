#include "clusterwalk/expansion.hpp"

#include "clusterwalk/basis.hpp"

#include <doctest.h>

using namespace clusterwalk;

namespace {

LaurentPoly term(std::vector<int> e, long c) { return LaurentPoly::monomial(std::move(e), c); }

}  // namespace

TEST_CASE("cluster arcs expand to their own variable") {
    const Triangulation fan = fan_triangulation(MarkedSurface::polygon(3));
    for (int i = 0; i < fan.rank(); ++i) {
        const auto walks = enumerate_arc_walks(fan, fan.arcs[i]);
        CHECK(walks.size() == 1);
        CHECK(expand_curve(fan, fan.arcs[i]) == LaurentPoly::variable(3, i));
    }
    const Triangulation t = standard_annulus_triangulation(MarkedSurface::annulus(2, 2));
    for (int i = 0; i < t.rank(); ++i)
        CHECK(expand_curve(t, t.arcs[i]) == LaurentPoly::variable(4, i));
}

TEST_CASE("pentagon expansion matches the exchange-relation oracle") {
    const Triangulation fan = fan_triangulation(MarkedSurface::polygon(2));
    const Curve g = Curve::chord(2, 4);
    const auto walks = enumerate_arc_walks(fan, g);
    CHECK(walks.size() == 2);
    // Ptolemy on the quadrilateral 1,2,3,4 with boundary variables at 1:
    // x_24 x_13 = 1 + x_14.
    const LaurentPoly expected =
        divide_exact(LaurentPoly::constant(2, 1) + LaurentPoly::variable(2, 1),
                     LaurentPoly::variable(2, 0));
    CHECK(expand_curve(fan, g) == expected);
    CHECK(to_text(expand_curve(fan, g)) == "(1 + x2) / (x1)");
}

TEST_CASE("Kronecker loop expansions") {
    const Triangulation t = standard_annulus_triangulation(MarkedSurface::annulus(1, 1));
    CHECK(enumerate_loop_walks(t, 1).size() == 3);
    const LaurentPoly xz = expand_loop(t, 1);
    CHECK(xz == term({-1, 1}, 1) + term({1, -1}, 1) + term({-1, -1}, 1));

    CHECK(enumerate_loop_walks(t, 2).size() == 7);
    CHECK(expand_loop(t, 2) == xz * xz - LaurentPoly::constant(2, 2));
    CHECK_THROWS_AS(enumerate_loop_walks(fan_triangulation(MarkedSurface::polygon(2)), 1),
                    std::invalid_argument);
}

TEST_CASE("walk notation") {
    const Triangulation fan = fan_triangulation(MarkedSurface::polygon(2));
    const auto walks = enumerate_arc_walks(fan, Curve::chord(2, 4));
    std::vector<std::string> strs;
    for (const auto& w : walks) strs.push_back(walk_to_string(w));
    std::sort(strs.begin(), strs.end());
    CHECK(strs == std::vector<std::string>{"o+ 1- 2+", "o+ 1- o+"});
}

TEST_CASE("self-crossing curves expand through the same machinery") {
    const Triangulation t = standard_annulus_triangulation(MarkedSurface::annulus(1, 3));
    const Curve m1 = Curve::peripheral(BoundarySide::Outer, 1, 4);
    CHECK(crossing_number(t.surface, m1, m1) == 1);
    CHECK(enumerate_arc_walks(t, m1).size() == 7);
    const Curve n1 = Curve::peripheral(BoundarySide::Outer, 2, 2);
    CHECK(expand_curve(t, m1) - expand_curve(t, n1) == expand_loop(t, 1));
}

TEST_CASE("loop difference") {
    const Triangulation t22 = standard_annulus_triangulation(MarkedSurface::annulus(2, 2));
    CHECK(expand_loop_difference(t22, 1) == expand_loop(t22, 1));
    CHECK(expand_loop_difference(t22, 2) == expand_loop(t22, 2));

    const Triangulation t21 = standard_annulus_triangulation(MarkedSurface::annulus(2, 1));
    const LaurentPoly d1 = expand_loop_difference(t21, 1);
    CHECK(expand_loop_difference(t21, 2) == chebyshev_eval(2, d1));

    const Triangulation t11 = standard_annulus_triangulation(MarkedSurface::annulus(1, 1));
    CHECK_THROWS_AS(expand_loop_difference(t11, 1), std::invalid_argument);
}

TEST_CASE("Chebyshev polynomials") {
    CHECK(chebyshev(0).coeffs == std::vector<Int>{2});
    CHECK(chebyshev(1).coeffs == std::vector<Int>{0, 1});
    CHECK(chebyshev(2).coeffs == std::vector<Int>{-2, 0, 1});
    CHECK(chebyshev(3).coeffs == std::vector<Int>{0, -3, 0, 1});
    for (int m = 1; m <= 20; ++m) CHECK(chebyshev(m).coeffs[m] == 1);  // monic

    const LaurentPoly v = term({1}, 1) + term({-1}, 1);
    for (int m = 0; m <= 20; ++m) {
        const LaurentPoly rhs =
            m == 0 ? LaurentPoly::constant(1, 2) : term({m}, 1) + term({-m}, 1);
        CHECK(chebyshev_eval(m, v) == rhs);
    }
    CHECK(chebyshev_eval(0, term({2, 1}, 5)) == LaurentPoly::constant(2, 2));
}

TEST_CASE("loop expansions satisfy the Chebyshev recursion") {
    for (const char* name : {"annulus:1,1", "annulus:1,2", "annulus:2,2"}) {
        const Triangulation t = standard_annulus_triangulation(MarkedSurface::parse(name));
        const LaurentPoly z = expand_loop(t, 1);
        for (int m = 1; m <= 3; ++m) CHECK(expand_loop(t, m) == chebyshev_eval(m, z));
    }
}

TEST_CASE("specialisation from the (2,1) annulus") {
    Triangulation tsrc;
    tsrc.surface = MarkedSurface::annulus(2, 1);
    tsrc.arcs = {Curve::bridging(1, 1, 0), Curve::bridging(1, 1, 1),
                 Curve::peripheral(BoundarySide::Inner, 1, 2)};
    REQUIRE(validate(tsrc).ok);

    // pi fixes the bridging variables and kills the near-loop variable.
    CHECK(specialize_from_c21(tsrc, LaurentPoly::variable(3, 0)) == LaurentPoly::variable(2, 0));
    CHECK(specialize_from_c21(tsrc, LaurentPoly::variable(3, 2)) == LaurentPoly::constant(2, 1));

    const Triangulation t11 = standard_annulus_triangulation(MarkedSurface::annulus(1, 1));
    for (int m = 1; m <= 3; ++m)
        CHECK(specialize_from_c21(tsrc, expand_loop(tsrc, m)) == expand_loop(t11, m));

    const Triangulation wrong = standard_annulus_triangulation(MarkedSurface::annulus(2, 1));
    CHECK_THROWS_AS(specialize_from_c21(wrong, LaurentPoly(3)), std::invalid_argument);
}

TEST_CASE("mutation oracle agrees with the walk formula") {
    const MarkedSurface pent = MarkedSurface::polygon(2);
    const auto arcs = enumerate_arcs(pent, 0);
    for (const Triangulation& t : exchange_graph(pent, -1).vertices)
        for (const Curve& g : arcs)
            CHECK(mutation_expand_oracle(t, g) == expand_curve(t, g));

    const Triangulation t11 = standard_annulus_triangulation(MarkedSurface::annulus(1, 1));
    for (int w = -3; w <= 3; ++w) {
        const Curve g = Curve::bridging(1, 1, w);
        CHECK(mutation_expand_oracle(t11, g) == expand_curve(t11, g));
    }
    CHECK_THROWS_AS(mutation_expand_oracle(t11, Curve::loop(1)), std::invalid_argument);
}

TEST_CASE("denominator vectors equal crossing vectors") {
    const Triangulation t = standard_annulus_triangulation(MarkedSurface::annulus(1, 3));
    for (const Curve& g : enumerate_arcs(t.surface, 2)) {
        const auto dv = denominator_vector(expand_curve(t, g));
        for (int i = 0; i < t.rank(); ++i)
            CHECK(dv[i] == crossing_number(t.surface, t.arcs[i], g));
    }
}

TEST_CASE("expansions are cluster-change invariant") {
    // Re-expressing a T'-expansion through the T-expansions of T' arcs
    // recovers the T-expansion, exactly.
    const Triangulation t = standard_annulus_triangulation(MarkedSurface::annulus(2, 2));
    for (int k = 0; k < t.rank(); ++k) {
        const Triangulation tp = flip(t, k);
        std::vector<LaurentPoly> values;
        for (const Curve& a : tp.arcs) values.push_back(expand_curve(t, a));
        for (const Curve& g :
             {Curve::bridging(1, 1, 2), Curve::peripheral(BoundarySide::Inner, 1, 2)}) {
            CHECK(substitute(expand_curve(tp, g), values) == expand_curve(t, g));
        }
        CHECK(substitute(expand_loop(tp, 1), values) == expand_loop(t, 1));
    }
}

TEST_CASE("peripheral ladder relation") {
    // x(i, s) x(i+1, s) = x(i, s+1) x(i+1, s-1) + 1, with the span-1 curve
    // degenerating to a boundary segment contributing 1.
    auto ladder = [](const MarkedSurface& s, BoundarySide side, int P, int max_s) {
        const Triangulation t = standard_annulus_triangulation(s);
        for (int i = 1; i <= P; ++i) {
            for (int span = 2; span <= max_s; ++span) {
                const int j = i % P + 1;
                const LaurentPoly lhs = expand_curve(t, Curve::peripheral(side, i, span)) *
                                        expand_curve(t, Curve::peripheral(side, j, span));
                LaurentPoly rhs = expand_curve(t, Curve::peripheral(side, i, span + 1));
                if (span - 1 >= 2) rhs *= expand_curve(t, Curve::peripheral(side, j, span - 1));
                rhs += LaurentPoly::constant(t.rank(), 1);
                CHECK(lhs == rhs);
            }
        }
    };
    ladder(MarkedSurface::annulus(2, 2), BoundarySide::Inner, 2, 4);
    ladder(MarkedSurface::annulus(1, 3), BoundarySide::Outer, 3, 4);
}
