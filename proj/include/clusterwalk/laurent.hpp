#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace clusterwalk {

using Int = boost::multiprecision::cpp_int;

// Raised when an exact division has no Laurent-polynomial quotient.
// On every legitimate call path exactness is guaranteed, so catching
// this is a correctness alarm, not a recoverable condition.
struct InexactDivisionError : std::runtime_error {
    explicit InexactDivisionError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Multivariate Laurent polynomial over arbitrary-precision integers.
///
/// Terms live in a map keyed by dense exponent vectors (all of length
/// num_vars), ordered lexicographically. Zero coefficients are never
/// stored, so equal values always have identical term maps.
class LaurentPoly {
public:
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, Int>;

    LaurentPoly() = default;
    explicit LaurentPoly(int num_vars) : num_vars_(num_vars) {
        if (num_vars < 0) throw std::invalid_argument("LaurentPoly: negative variable count");
    }

    static LaurentPoly zero(int num_vars) { return LaurentPoly(num_vars); }
    static LaurentPoly constant(int num_vars, Int c);
    static LaurentPoly variable(int num_vars, int index);  // 0-based index
    static LaurentPoly monomial(Exponents exps, Int coeff);

    int num_vars() const { return num_vars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    Int coeff(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Int(0) : it->second;
    }

    void add_term(const Exponents& e, const Int& c);

    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const LaurentPoly& rhs) { *this = *this * rhs; return *this; }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { a += b; return a; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { a -= b; return a; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly operator-() const;

    bool operator==(const LaurentPoly& rhs) const {
        return num_vars_ == rhs.num_vars_ && terms_ == rhs.terms_;
    }
    bool operator!=(const LaurentPoly& rhs) const { return !(*this == rhs); }

private:
    int num_vars_ = 0;
    TermMap terms_;

    void check_compatible(const LaurentPoly& rhs) const;
};

/// Exact quotient q with q*b == a. Throws InexactDivisionError when no
/// such Laurent polynomial exists.
LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b);

/// True iff every stored coefficient is positive (subtraction-free).
bool is_subtraction_free(const LaurentPoly& a);

struct DegreeProfile {
    // term exponents -> sum of exponents over the selected variables
    std::vector<std::pair<LaurentPoly::Exponents, int>> per_term;
    int min_degree = 0;  // meaningful only when per_term is nonempty
    int max_degree = 0;
};

/// Per-term degree with respect to a subset of variables (0-based indices).
DegreeProfile degree_wrt(const LaurentPoly& a, const std::vector<int>& vars);

/// Component i = max(0, -min exponent of variable i over all terms).
/// Throws std::domain_error on the zero polynomial.
std::vector<int> denominator_vector(const LaurentPoly& a);

/// Integer power (e >= 0).
LaurentPoly pow(const LaurentPoly& a, int e);

/// Substitute values[i] for variable i. Negative exponents are resolved
/// with exact division, so the result must again be a Laurent polynomial
/// in the value ring (guaranteed on all call paths used here).
LaurentPoly substitute(const LaurentPoly& a, const std::vector<LaurentPoly>& values);

/// Render with variables named x1..xn, terms in ascending colex order,
/// as a single fraction over the monomial denominator when one exists,
/// e.g. "(1 + x1^2 + x2^2) / (x1 x2)".
std::string to_text(const LaurentPoly& a);

}  // namespace clusterwalk
