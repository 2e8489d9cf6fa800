#include "clusterwalk/basis.hpp"

#include <doctest.h>

#include <algorithm>

using namespace clusterwalk;

namespace {

Collection col(const MarkedSurface& s, const std::string& spec) {
    return Collection::parse(s, spec);
}

}  // namespace

TEST_CASE("collection parsing and validation") {
    const MarkedSurface s = MarkedSurface::annulus(2, 2);
    const Collection c = col(s, "{p inner:1+2, p inner:1+2, z2}");
    CHECK(c.arcs.size() == 2);
    CHECK(c.loop_m == 2);
    CHECK(validate_collection(c).ok);
    CHECK(c.to_string() == "{p inner:1+2, p inner:1+2, z2}");

    CHECK(!validate_collection(col(s, "{b i1 o1 w0, z1}")).ok);   // loop with bridging
    CHECK(!validate_collection(col(s, "{b i1 o1 w0, b i1 o1 w2}")).ok);  // crossing pair
    CHECK(validate_collection(col(s, "{}")).ok);
    CHECK(!validate_collection(col(MarkedSurface::polygon(2), "{z1}")).ok);
}

TEST_CASE("collection weights") {
    const MarkedSurface s11 = MarkedSurface::annulus(1, 1);
    CHECK(collection_weight(col(s11, "{}")) == 0);
    CHECK(collection_weight(col(s11, "{z1}")) == 1);
    CHECK(collection_weight(col(s11, "{z2}")) == 2);
    CHECK(collection_weight(col(s11, "{b i1 o1 w0}")) == 0);  // member of the reference cluster
    CHECK(collection_weight(col(s11, "{b i1 o1 w2}")) == 1);
}

TEST_CASE("collection enumeration") {
    // Weight-zero collections of the pentagon supported on fan arcs.
    const auto small = enumerate_collections(MarkedSurface::polygon(2), 0, 1, false);
    CHECK(small.size() == 3);  // {}, {(1,3)}, {(1,4)}
    CHECK(small[0] == Collection::empty(MarkedSurface::polygon(2)));

    const MarkedSurface s11 = MarkedSurface::annulus(1, 1);
    const auto c11 = enumerate_collections(s11, 1, 2, true);
    auto contains = [&](const std::string& spec) {
        return std::find(c11.begin(), c11.end(), col(s11, spec)) != c11.end();
    };
    CHECK(contains("{z1}"));
    CHECK(!contains("{z2}"));  // weight 2 exceeds the bound

    // A loop forbids bridging members; on the (2,2) annulus every loop
    // collection is peripheral-only.
    for (const Collection& c : enumerate_collections(MarkedSurface::annulus(2, 2), 3, 3, true)) {
        CHECK(validate_collection(c).ok);
        if (c.has_loop())
            for (const Curve& g : c.arcs) CHECK(g.is_peripheral());
    }
}

TEST_CASE("collection expansion") {
    const MarkedSurface s = MarkedSurface::annulus(2, 2);
    const Triangulation t = standard_annulus_triangulation(s);
    CHECK(expand_collection(t, Collection::empty(s)) == LaurentPoly::constant(4, 1));

    Collection twice = Collection::empty(s);
    twice.arcs = {t.arcs[0], t.arcs[0]};
    CHECK(expand_collection(t, twice) ==
          LaurentPoly::variable(4, 0) * LaurentPoly::variable(4, 0));

    // A loop times a peripheral arc stays subtraction-free.
    const LaurentPoly x = expand_collection(t, col(s, "{p inner:1+2, z1}"));
    CHECK(is_subtraction_free(x));
    CHECK(x == expand_curve(t, Curve::peripheral(BoundarySide::Inner, 1, 2)) * expand_loop(t, 1));
}

TEST_CASE("decomposition recovers indicators") {
    const MarkedSurface s = MarkedSurface::polygon(2);
    const Triangulation t = fan_triangulation(s);
    const auto candidates = enumerate_collections(s, 2, 2, false);
    for (const Collection& c : candidates) {
        const Decomposition d = decompose(expand_collection(t, c), t, candidates);
        CHECK(d.exact());
        CHECK(d.coefficient(c) == 1);
        CHECK(d.coefficients.size() == 1);
    }
}

TEST_CASE("decomposition fixtures") {
    {
        const MarkedSurface s = MarkedSurface::annulus(1, 1);
        const Triangulation t = standard_annulus_triangulation(s);
        const LaurentPoly y = pow(expand_loop(t, 1), 2);
        const Decomposition d = decompose(y, t, default_candidates(y, t));
        CHECK(d.exact());
        CHECK(d.coefficient(col(s, "{z2}")) == 1);
        CHECK(d.coefficient(col(s, "{}")) == 2);
        CHECK(d.coefficients.size() == 2);
    }
    {
        const MarkedSurface s = MarkedSurface::polygon(2);
        const Triangulation t = fan_triangulation(s);
        const LaurentPoly y =
            expand_curve(t, Curve::chord(1, 3)) * expand_curve(t, Curve::chord(2, 4));
        const Decomposition d = decompose(y, t, default_candidates(y, t));
        CHECK(d.exact());
        CHECK(d.coefficient(col(s, "{c 1-4}")) == 1);
        CHECK(d.coefficient(col(s, "{}")) == 1);
    }
}

TEST_CASE("decomposition failure paths") {
    const MarkedSurface s = MarkedSurface::annulus(1, 1);
    const Triangulation t = standard_annulus_triangulation(s);
    // Candidate set too small: the loop part cannot be represented.
    const LaurentPoly y = expand_loop(t, 1);
    const Decomposition d = decompose(y, t, {col(s, "{}"), col(s, "{b i1 o1 w0}")});
    CHECK(!d.exact());

    CHECK_THROWS_AS(decompose(y, t, {col(s, "{}"), col(s, "{}")}), std::logic_error);
}

TEST_CASE("atomicity witnesses") {
    {
        const MarkedSurface s = MarkedSurface::polygon(2);
        const auto candidates = enumerate_collections(s, 2, 2, false);
        const Report rep = verify_atomicity_witness(s, col(s, "{c 1-3}"), candidates);
        CHECK(rep.ok());
        CHECK(verify_atomicity_witness(s, col(s, "{}"), candidates).ok());
    }
    {
        const MarkedSurface s = MarkedSurface::annulus(1, 1);
        const auto candidates = enumerate_collections(s, 2, 2, true);
        CHECK(verify_atomicity_witness(s, col(s, "{z1}"), candidates).ok());
        CHECK(verify_atomicity_witness(s, col(s, "{z2}"), candidates).ok());
        CHECK(verify_atomicity_witness(s, col(s, "{b i1 o1 w0}"), candidates).ok());
    }
}

TEST_CASE("exchange graphs") {
    const ExchangeGraph g1 = exchange_graph(MarkedSurface::polygon(1), -1);
    CHECK(g1.vertices.size() == 2);
    CHECK(g1.edges.size() == 1);

    const ExchangeGraph g2 = exchange_graph(MarkedSurface::polygon(2), -1);
    CHECK(g2.vertices.size() == 5);
    CHECK(g2.edges.size() == 5);  // the associahedron cycle

    // The Kronecker exchange graph is a line: radius 3 sees 7 clusters.
    const ExchangeGraph gk = exchange_graph(MarkedSurface::annulus(1, 1), 3);
    CHECK(gk.vertices.size() == 7);
    CHECK(gk.edges.size() == 6);
    std::vector<int> degree(gk.vertices.size(), 0);
    for (const auto& [a, b] : gk.edges) {
        ++degree[a];
        ++degree[b];
    }
    CHECK(*std::max_element(degree.begin(), degree.end()) <= 2);
}

TEST_CASE("positivity spot check") {
    CHECK(verify_positive_basis(MarkedSurface::polygon(2), -1, 0, 2, 2, 0).ok());
    CHECK(verify_positive_basis(MarkedSurface::annulus(1, 1), 2, 1, 2, 2, 2).ok());
}
