#include "clusterwalk/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace clusterwalk {

LaurentPoly LaurentPoly::constant(int num_vars, Int c) {
    LaurentPoly p(num_vars);
    if (c != 0) p.terms_.emplace(Exponents(num_vars, 0), std::move(c));
    return p;
}

LaurentPoly LaurentPoly::variable(int num_vars, int index) {
    if (index < 0 || index >= num_vars)
        throw std::out_of_range("LaurentPoly::variable: index out of range");
    Exponents e(num_vars, 0);
    e[index] = 1;
    return monomial(std::move(e), 1);
}

LaurentPoly LaurentPoly::monomial(Exponents exps, Int coeff) {
    LaurentPoly p(static_cast<int>(exps.size()));
    if (coeff != 0) p.terms_.emplace(std::move(exps), std::move(coeff));
    return p;
}

void LaurentPoly::add_term(const Exponents& e, const Int& c) {
    if (static_cast<int>(e.size()) != num_vars_)
        throw std::invalid_argument("LaurentPoly::add_term: exponent length mismatch");
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void LaurentPoly::check_compatible(const LaurentPoly& rhs) const {
    if (num_vars_ != rhs.num_vars_)
        throw std::invalid_argument("LaurentPoly: variable-count mismatch");
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    check_compatible(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    check_compatible(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(num_vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_compatible(b);
    LaurentPoly r(a.num_vars_);
    LaurentPoly::Exponents e(a.num_vars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (int i = 0; i < a.num_vars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

namespace {

// Componentwise minimum exponent over all terms.
std::vector<int> min_exponents(const LaurentPoly& a) {
    std::vector<int> m(a.num_vars(), 0);
    bool first = true;
    for (const auto& [e, c] : a.terms()) {
        (void)c;
        if (first) {
            m = e;
            first = false;
        } else {
            for (std::size_t i = 0; i < e.size(); ++i) m[i] = std::min(m[i], e[i]);
        }
    }
    return m;
}

LaurentPoly shift(const LaurentPoly& a, const std::vector<int>& by) {
    LaurentPoly r(a.num_vars());
    LaurentPoly::Exponents e(a.num_vars());
    for (const auto& [ea, c] : a.terms()) {
        for (int i = 0; i < a.num_vars(); ++i) e[i] = ea[i] + by[i];
        r.add_term(e, c);
    }
    return r;
}

}  // namespace

LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.num_vars() != b.num_vars())
        throw std::invalid_argument("divide_exact: variable-count mismatch");
    if (b.is_zero()) throw std::invalid_argument("divide_exact: division by zero");
    if (a.is_zero()) return LaurentPoly::zero(a.num_vars());

    const int n = a.num_vars();

    // Normalise both operands to honest polynomials so that leading-term
    // elimination under lex order terminates; re-apply the shift at the end.
    std::vector<int> sa = min_exponents(a), sb = min_exponents(b);
    std::vector<int> neg_sa(n), neg_sb(n), back(n);
    for (int i = 0; i < n; ++i) {
        neg_sa[i] = -sa[i];
        neg_sb[i] = -sb[i];
        back[i] = sa[i] - sb[i];
    }
    LaurentPoly r = shift(a, neg_sa);
    const LaurentPoly d = shift(b, neg_sb);

    const auto& dlead = *d.terms().rbegin();  // lex-greatest term of the divisor
    LaurentPoly q(n);
    LaurentPoly::Exponents e(n);
    while (!r.is_zero()) {
        const auto& rlead = *r.terms().rbegin();
        bool ok = true;
        for (int i = 0; i < n; ++i) {
            e[i] = rlead.first[i] - dlead.first[i];
            if (e[i] < 0) ok = false;
        }
        if (!ok || rlead.second % dlead.second != 0)
            throw InexactDivisionError("divide_exact: no exact quotient");
        LaurentPoly t = LaurentPoly::monomial(e, rlead.second / dlead.second);
        q += t;
        r -= t * d;
    }
    return shift(q, back);
}

bool is_subtraction_free(const LaurentPoly& a) {
    for (const auto& [e, c] : a.terms()) {
        (void)e;
        if (c < 0) return false;
    }
    return true;
}

DegreeProfile degree_wrt(const LaurentPoly& a, const std::vector<int>& vars) {
    for (int v : vars)
        if (v < 0 || v >= a.num_vars())
            throw std::out_of_range("degree_wrt: variable index out of range");
    DegreeProfile prof;
    bool first = true;
    for (const auto& [e, c] : a.terms()) {
        (void)c;
        int d = 0;
        for (int v : vars) d += e[v];
        prof.per_term.emplace_back(e, d);
        if (first) {
            prof.min_degree = prof.max_degree = d;
            first = false;
        } else {
            prof.min_degree = std::min(prof.min_degree, d);
            prof.max_degree = std::max(prof.max_degree, d);
        }
    }
    return prof;
}

std::vector<int> denominator_vector(const LaurentPoly& a) {
    if (a.is_zero()) throw std::domain_error("denominator_vector: zero polynomial");
    std::vector<int> m = min_exponents(a);
    for (auto& v : m) v = std::max(0, -v);
    return m;
}

LaurentPoly pow(const LaurentPoly& a, int e) {
    if (e < 0) throw std::invalid_argument("pow: negative exponent");
    LaurentPoly r = LaurentPoly::constant(a.num_vars(), 1);
    LaurentPoly base = a;
    while (e > 0) {
        if (e & 1) r *= base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

LaurentPoly substitute(const LaurentPoly& a, const std::vector<LaurentPoly>& values) {
    if (static_cast<int>(values.size()) != a.num_vars())
        throw std::invalid_argument("substitute: wrong number of values");
    const int out_vars = values.empty() ? 0 : values[0].num_vars();
    LaurentPoly r(out_vars);
    for (const auto& [e, c] : a.terms()) {
        LaurentPoly num = LaurentPoly::constant(out_vars, c);
        LaurentPoly den = LaurentPoly::constant(out_vars, 1);
        for (int i = 0; i < a.num_vars(); ++i) {
            if (e[i] > 0) num *= pow(values[i], e[i]);
            if (e[i] < 0) den *= pow(values[i], -e[i]);
        }
        r += divide_exact(num, den);
    }
    return r;
}

namespace {

bool colex_less(const LaurentPoly::Exponents& a, const LaurentPoly::Exponents& b) {
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

void append_monomial(std::ostringstream& out, const LaurentPoly::Exponents& e) {
    bool any = false;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (any) out << ' ';
        out << 'x' << (i + 1);
        if (e[i] != 1) out << '^' << e[i];
        any = true;
    }
    if (!any) out << '1';
}

}  // namespace

std::string to_text(const LaurentPoly& a) {
    if (a.is_zero()) return "0";

    const std::vector<int> den = denominator_vector(a);
    bool has_den = false;
    for (int d : den) has_den |= d > 0;

    LaurentPoly num = a;
    if (has_den) {
        LaurentPoly::Exponents shift_up(den.begin(), den.end());
        num = a * LaurentPoly::monomial(shift_up, 1);
    }

    std::vector<std::pair<LaurentPoly::Exponents, Int>> ts(num.terms().begin(), num.terms().end());
    std::sort(ts.begin(), ts.end(),
              [](const auto& x, const auto& y) { return colex_less(x.first, y.first); });

    std::ostringstream out;
    if (has_den) out << '(';
    bool first = true;
    for (const auto& [e, c] : ts) {
        Int abs_c = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) out << '-';
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        bool constant_term = true;
        for (int x : e) constant_term &= x == 0;
        if (abs_c != 1 || constant_term) {
            out << abs_c.str();
            if (!constant_term) out << ' ';
        }
        if (!constant_term) append_monomial(out, e);
        first = false;
    }
    if (has_den) {
        out << ") / (";
        LaurentPoly::Exponents de(den.begin(), den.end());
        append_monomial(out, de);
        out << ')';
    }
    return out.str();
}

}  // namespace clusterwalk
