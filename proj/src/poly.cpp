#include "cvforms/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cvf {

int total_degree(const ExponentVector& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

bool MonomialOrder::operator()(const ExponentVector& a, const ExponentVector& b) const {
    const int da = total_degree(a);
    const int db = total_degree(b);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Polynomial::Polynomial(int nvars) : nvars_(nvars) {
    if (nvars < 1) throw std::invalid_argument("polynomial needs at least one variable");
}

Polynomial Polynomial::constant(int nvars, const Rational& c) {
    Polynomial p(nvars);
    p.add_term(ExponentVector(nvars, 0), c);
    return p;
}

Polynomial Polynomial::variable(int nvars, int var) {
    Polynomial p(nvars);
    ExponentVector e(nvars, 0);
    if (var < 0 || var >= nvars) throw std::out_of_range("variable index out of range");
    e[var] = 1;
    p.add_term(e, 1);
    return p;
}

Polynomial Polynomial::monomial(ExponentVector exponents, const Rational& c) {
    Polynomial p(static_cast<int>(exponents.size()));
    p.add_term(exponents, c);
    return p;
}

void Polynomial::check_exponents(const ExponentVector& e) const {
    if (static_cast<int>(e.size()) != nvars_)
        throw std::invalid_argument("exponent vector length does not match variable count");
    for (int x : e)
        if (x < 0) throw std::invalid_argument("negative exponent");
}

void Polynomial::check_same_ring(const Polynomial& q) const {
    if (q.nvars_ != nvars_)
        throw std::invalid_argument("variable-count mismatch: " + std::to_string(nvars_) +
                                    " vs " + std::to_string(q.nvars_));
}

Rational Polynomial::coefficient(const ExponentVector& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const ExponentVector& e, const Rational& c) {
    if (c == 0) return;
    check_exponents(e);
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& q) {
    check_same_ring(q);
    for (const auto& [e, c] : q.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& q) {
    check_same_ring(q);
    for (const auto& [e, c] : q.terms_) add_term(e, -c);
    return *this;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    p.check_same_ring(q);
    Polynomial r(p.nvars_);
    ExponentVector e(p.nvars_);
    for (const auto& [ep, cp] : p.terms_) {
        for (const auto& [eq, cq] : q.terms_) {
            for (int i = 0; i < p.nvars_; ++i) e[i] = ep[i] + eq[i];
            r.add_term(e, cp * cq);
        }
    }
    return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& q) {
    *this = *this * q;
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coeff] : terms_) coeff *= c;
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

bool operator==(const Polynomial& p, const Polynomial& q) {
    return p.nvars_ == q.nvars_ && p.terms_ == q.terms_;
}

Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }

Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }

Polynomial differentiate(const Polynomial& p, int var, int order) {
    if (var < 0 || var >= p.nvars()) throw std::out_of_range("variable index out of range");
    if (order < 0) throw std::invalid_argument("negative derivative order");
    Polynomial r(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        const int power = e[var];
        if (power < order) continue;
        Integer falling = 1;
        for (int j = 0; j < order; ++j) falling *= power - j;
        ExponentVector de = e;
        de[var] -= order;
        r.add_term(de, c * Rational(falling));
    }
    return r;
}

Polynomial symmetrized_derivative(const Polynomial& p, int k) {
    if (k < 1) throw std::invalid_argument("symmetrized derivative order must be positive");
    Polynomial r(p.nvars());
    for (int i = 0; i < p.nvars(); ++i) r += differentiate(p, i, k);
    return r;
}

std::string canonical_text(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        Rational magnitude = abs(c);
        if (first) {
            if (c < 0) out << '-';
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;

        std::ostringstream mono;
        bool any_var = false;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (any_var) mono << '*';
            mono << 't' << (i + 1);
            if (e[i] > 1) mono << '^' << e[i];
            any_var = true;
        }
        if (!any_var) {
            out << magnitude.get_str();
        } else if (magnitude == 1) {
            out << mono.str();
        } else {
            out << magnitude.get_str() << '*' << mono.str();
        }
    }
    return out.str();
}

Polynomial vandermonde(int nvars, const std::vector<int>& vars) {
    Polynomial r = Polynomial::constant(nvars, 1);
    for (std::size_t i = 0; i < vars.size(); ++i) {
        for (std::size_t j = i + 1; j < vars.size(); ++j) {
            r *= Polynomial::variable(nvars, vars[i]) - Polynomial::variable(nvars, vars[j]);
        }
    }
    return r;
}

Polynomial normalized_vandermonde(int nvars) {
    std::vector<int> vars(nvars);
    std::iota(vars.begin(), vars.end(), 0);
    Integer denominator = 1;
    for (int i = 0; i < nvars; ++i)
        for (int j = i + 1; j < nvars; ++j) denominator *= j - i;
    return vandermonde(nvars, vars) * Rational(Integer(1), denominator);
}

Integer factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of a negative number");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

}  // namespace cvf
