#pragma once

// Sparse multivariate polynomials in t1..tN with exact rational coefficients.

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace cvf {

using Rational = mpq_class;
using Integer = mpz_class;

/// Power of t_i at position i; length is the ambient variable count.
using ExponentVector = std::vector<int>;

/// Graded order, ties broken lexicographically with t1 > t2 > ... > tN.
/// Returns true when `a` strictly precedes (is greater than) `b`.
struct MonomialOrder {
    bool operator()(const ExponentVector& a, const ExponentVector& b) const;
};

int total_degree(const ExponentVector& e);

class Polynomial {
public:
    using TermMap = std::map<ExponentVector, Rational, MonomialOrder>;

    explicit Polynomial(int nvars);

    static Polynomial constant(int nvars, const Rational& c);
    static Polynomial variable(int nvars, int var);
    static Polynomial monomial(ExponentVector exponents, const Rational& c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    Rational coefficient(const ExponentVector& e) const;

    /// Accumulates c into the coefficient of e, dropping it if it cancels.
    void add_term(const ExponentVector& e, const Rational& c);

    Polynomial& operator+=(const Polynomial& q);
    Polynomial& operator-=(const Polynomial& q);
    Polynomial& operator*=(const Polynomial& q);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
    friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
    friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator*(Polynomial p, const Rational& c) { return p *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial p) { return p *= c; }
    Polynomial operator-() const;

    friend bool operator==(const Polynomial& p, const Polynomial& q);

private:
    void check_exponents(const ExponentVector& e) const;
    void check_same_ring(const Polynomial& q) const;

    int nvars_;
    TermMap terms_;
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q);

/// order-th partial derivative with respect to t_{var+1}.
Polynomial differentiate(const Polynomial& p, int var, int order);

/// Sum over all variables of the k-th partial derivative.
Polynomial symmetrized_derivative(const Polynomial& p, int k);

/// Graded-lex descending rendering, e.g. "1/2*t2^2 - t2*t4". Zero renders as "0".
std::string canonical_text(const Polynomial& p);

/// Normalized Vandermonde, prod_{i<j} (t_i - t_j)/(j - i).
Polynomial normalized_vandermonde(int nvars);

/// prod_{i<j} (t_{vars[i]} - t_{vars[j]}) in an ambient ring of nvars variables.
Polynomial vandermonde(int nvars, const std::vector<int>& vars);

Integer factorial(int n);

}  // namespace cvf
