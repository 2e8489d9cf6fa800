#include "clusterwalk/laurent.hpp"
#include "clusterwalk/serialize.hpp"

#include <doctest.h>

#include <random>

using namespace clusterwalk;

namespace {

LaurentPoly term(std::vector<int> e, long c) { return LaurentPoly::monomial(std::move(e), c); }

LaurentPoly random_poly(std::mt19937& gen, int num_vars, int max_terms) {
    LaurentPoly p(num_vars);
    const int terms = 1 + gen() % max_terms;
    for (int t = 0; t < terms; ++t) {
        std::vector<int> e(num_vars);
        for (int& x : e) x = static_cast<int>(gen() % 7) - 3;
        p += term(e, static_cast<long>(gen() % 9) - 4);
    }
    return p;
}

}  // namespace

TEST_CASE("addition cancels and merges") {
    const LaurentPoly x1 = LaurentPoly::variable(2, 0);
    CHECK((x1 + (-x1)).is_zero());

    const LaurentPoly a = term({1, -1}, 1) + term({-1, 1}, 1);
    CHECK(a.term_count() == 2);

    // Two rows of the four-variable walk table added together.
    const LaurentPoly row2 = term({0, 0, -1, -1}, 1);
    const LaurentPoly row3 = term({0, -1, -1, 0}, 1);
    const LaurentPoly sum = row2 + row3;
    CHECK(sum.term_count() == 2);
    CHECK(sum.coeff({0, 0, -1, -1}) == 1);
    CHECK(sum.coeff({0, -1, -1, 0}) == 1);

    CHECK_THROWS_AS(LaurentPoly(2) + LaurentPoly(3), std::invalid_argument);
}

TEST_CASE("multiplication basics") {
    const LaurentPoly one = LaurentPoly::constant(2, 1);
    const LaurentPoly p = term({2, -1}, 3) + term({0, 1}, -2);
    CHECK(p * one == p);
    CHECK(term({1, -1}, 1) * term({-1, 1}, 1) == one);
}

TEST_CASE("ring axioms on random inputs") {
    std::mt19937 gen(7u);
    for (int i = 0; i < 50; ++i) {
        const LaurentPoly a = random_poly(gen, 3, 4);
        const LaurentPoly b = random_poly(gen, 3, 4);
        const LaurentPoly c = random_poly(gen, 3, 4);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("exact division") {
    // Kronecker numerator against its denominator monomial.
    const LaurentPoly num = term({0, 0}, 1) + term({2, 0}, 1) + term({0, 2}, 1);
    const LaurentPoly den = term({1, 1}, 1);
    const LaurentPoly q = divide_exact(num, den);
    CHECK(q == term({-1, -1}, 1) + term({1, -1}, 1) + term({-1, 1}, 1));

    CHECK(divide_exact(term({2, 1}, 1), term({1, 0}, 1)) == term({1, 1}, 1));

    CHECK_THROWS_AS(divide_exact(LaurentPoly::variable(1, 0),
                                 LaurentPoly::variable(1, 0) - LaurentPoly::constant(1, 1)),
                    InexactDivisionError);

    std::mt19937 gen(11u);
    for (int i = 0; i < 40; ++i) {
        const LaurentPoly a = random_poly(gen, 2, 4);
        LaurentPoly b = random_poly(gen, 2, 3);
        if (b.is_zero()) b = LaurentPoly::constant(2, 1);
        CHECK(divide_exact(a * b, b) == a);
    }
}

TEST_CASE("subtraction-free predicate and closure") {
    const LaurentPoly pos = term({-1, 1}, 2) + term({0, 0}, 1);
    const LaurentPoly mixed = LaurentPoly::variable(2, 0) - LaurentPoly::variable(2, 1);
    CHECK(is_subtraction_free(pos));
    CHECK(!is_subtraction_free(mixed));

    std::mt19937 gen(13u);
    for (int i = 0; i < 30; ++i) {
        LaurentPoly a = random_poly(gen, 2, 4);
        LaurentPoly b = random_poly(gen, 2, 4);
        // force positivity
        LaurentPoly ap(2), bp(2);
        for (const auto& [e, c] : a.terms()) ap += term(e, 1);
        for (const auto& [e, c] : b.terms()) bp += term(e, 1);
        CHECK(is_subtraction_free(ap + bp));
        CHECK(is_subtraction_free(ap * bp));
    }
}

TEST_CASE("degree profiles") {
    const LaurentPoly p = term({1, -1}, 1);
    const auto prof = degree_wrt(p, {1});
    CHECK(prof.max_degree == -1);
    CHECK(prof.min_degree == -1);
    CHECK(prof.per_term.size() == 1);

    const LaurentPoly q = term({-2, 3}, 1) + term({1, 1}, 2);
    const auto both = degree_wrt(q, {0, 1});
    CHECK(both.min_degree == 1);
    CHECK(both.max_degree == 2);

    CHECK_THROWS_AS(degree_wrt(p, {5}), std::out_of_range);
}

TEST_CASE("denominator vectors") {
    CHECK(denominator_vector(LaurentPoly::variable(3, 1)) == std::vector<int>{0, 0, 0});
    const LaurentPoly xz = term({-1, 1}, 1) + term({1, -1}, 1) + term({-1, -1}, 1);
    CHECK(denominator_vector(xz) == std::vector<int>{1, 1});
    CHECK_THROWS_AS(denominator_vector(LaurentPoly(2)), std::domain_error);

    std::mt19937 gen(17u);
    for (int i = 0; i < 40; ++i) {
        LaurentPoly a = random_poly(gen, 2, 4);
        LaurentPoly b = random_poly(gen, 2, 4);
        if (a.is_zero() || b.is_zero() || (a * b).is_zero()) continue;
        const auto da = denominator_vector(a);
        const auto db = denominator_vector(b);
        const auto dab = denominator_vector(a * b);
        for (int v = 0; v < 2; ++v) CHECK(dab[v] <= da[v] + db[v]);
    }
}

TEST_CASE("substitution resolves negative exponents exactly") {
    // p(x1, x2) = x1 / x2 evaluated at x1 = y^2, x2 = y
    const LaurentPoly p = term({1, -1}, 1);
    const LaurentPoly y = LaurentPoly::variable(1, 0);
    CHECK(substitute(p, {y * y, y}) == y);

    // identity substitution
    const LaurentPoly q = term({2, -1}, 3) + term({0, 0}, 5);
    CHECK(substitute(q, {LaurentPoly::variable(2, 0), LaurentPoly::variable(2, 1)}) == q);
}

TEST_CASE("text rendering") {
    const LaurentPoly xz = term({-1, 1}, 1) + term({1, -1}, 1) + term({-1, -1}, 1);
    CHECK(to_text(xz) == "(1 + x1^2 + x2^2) / (x1 x2)");
    CHECK(to_text(LaurentPoly(2)) == "0");
    CHECK(to_text(term({0, 0}, 1) + term({0, 1}, -2)) == "1 - 2 x2");
    CHECK(to_text(term({1, 0}, 1)) == "x1");
}

TEST_CASE("json round trip") {
    std::mt19937 gen(23u);
    for (int i = 0; i < 20; ++i) {
        const LaurentPoly p = random_poly(gen, 3, 5);
        CHECK(poly_from_json(poly_to_json(p)) == p);
    }
    const auto j = poly_to_json(term({-1, 2}, 42));
    CHECK(j["numVars"] == 2);
    CHECK(j["terms"][0]["coeff"] == "42");
}
