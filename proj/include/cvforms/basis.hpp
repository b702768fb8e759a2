#pragma once

// Standard-form bases of the cv-form space and their verification.

#include "cvforms/cvform.hpp"
#include "cvforms/laplace.hpp"
#include "cvforms/poly.hpp"
#include "cvforms/ribbon.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cvf {

/// Mahonian numbers T(N, 0..N(N-1)/2), the coefficients of prod_{i<N} (1 + q + ... + q^i).
CountSeries q_factorial(int n);

/// sigma(k) = N - k + 1.
Permutation backward_reading(int n);

struct BasisElement {
    CvForm form;
    SkewTableau tableau;
};

struct Basis {
    int n = 0;
    std::optional<int> degree;
    Permutation reading_order;
    std::vector<BasisElement> elements;
};

/// One form per standard tableau of every ribbon of the requested degree (all
/// degrees when unset). Ribbons are taken in descending class order, tableaux
/// in their enumeration order. An empty reading order means backward.
Basis generate_basis(int n, std::optional<int> degree = std::nullopt,
                     Permutation reading_order = {}, int jobs = 1);

struct HarmonicityReport {
    bool passed = true;
    int failing_k = 0;
    /// "expanded" (symmetrized derivative of the polynomial) or "forms"
    /// (sum of entry-lowered cv-forms).
    std::string failing_check;
};

HarmonicityReport verify_harmonicity(const CvForm& f, int kmax);

/// Rows are polynomials, columns the union of their monomials in canonical order.
struct CoefficientMatrix {
    std::vector<ExponentVector> columns;
    /// Sparse rows: (column index, coefficient), ascending column index.
    std::vector<std::vector<std::pair<std::size_t, Rational>>> rows;
};

CoefficientMatrix coefficient_matrix(const std::vector<Polynomial>& polys);

/// Exact rank by integer-preserving elimination: rows are scaled to primitive
/// integer vectors, pivots are the first nonzero column.
int exact_rank(const CoefficientMatrix& m);

enum class IndependenceMode {
    /// Rank of the fully evaluated forms.
    full,
    /// Rank of the leading row-block polynomials only.
    leading_rowblocks,
};

struct IndependenceReport {
    int rank = 0;
    int size = 0;
    bool independent = false;
    /// Indices of the first duplicated pair of forms, if any.
    std::optional<std::pair<int, int>> duplicate;
};

IndependenceReport verify_independence(const Basis& b,
                                       IndependenceMode mode = IndependenceMode::full,
                                       int jobs = 1);

/// Characteristic exponents of the leading row-block of every form are pairwise distinct.
bool verify_characteristic_uniqueness(const Basis& b);

struct BasisComparison {
    struct Entry {
        Permutation order;
        int size = 0;
        int rank = 0;
        bool independent = false;
    };
    std::vector<Entry> bases;
    /// Number of distinct form sets among the bases.
    int distinct_bases = 0;
    /// Smallest and largest number of shared forms over all pairs.
    int min_overlap = 0;
    int max_overlap = 0;
};

BasisComparison compare_bases(int n, const std::vector<Permutation>& orders, int jobs = 1);

/// All permutations of 1..n in lexicographic order.
std::vector<Permutation> all_permutations(int n);

}  // namespace cvf
