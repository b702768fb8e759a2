#pragma once

// Ribbon diagrams, their standard fillings, and the maps from tableaux to
// cv-forms.
//
// Boxes are (row, col) pairs in the English convention: row 0 on top,
// columns labelled so that the upper-right box sits at (0, N-1). The box list
// runs from the lower-left end to the upper-right end, one step right or one
// step up at a time, which makes box i carry the i-th class entry (its row)
// and the i-th entry of the sorted regular form (its column).

#include "cvforms/cvform.hpp"
#include "cvforms/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cvf {

struct Box {
    int row = 0;
    int col = 0;
    friend bool operator==(const Box&, const Box&) = default;
    friend auto operator<=>(const Box&, const Box&) = default;
};

class Ribbon {
public:
    /// Validates: last box at (0, N-1), every step one right or one up.
    explicit Ribbon(std::vector<Box> boxes);

    int size() const { return static_cast<int>(boxes_.size()); }
    const std::vector<Box>& boxes() const { return boxes_; }
    /// Number of rows, l + 1.
    int height() const { return boxes_.front().row + 1; }
    /// Number of columns, N - l.
    int width() const { return boxes_.back().col - boxes_.front().col + 1; }
    /// True when box i+1 is directly above box i.
    bool step_is_up(int i) const { return boxes_[i + 1].row < boxes_[i].row; }

    friend bool operator==(const Ribbon&, const Ribbon&) = default;

private:
    std::vector<Box> boxes_;
};

struct SkewPartition {
    std::vector<int> lambda;
    std::vector<int> mu;
    friend bool operator==(const SkewPartition&, const SkewPartition&) = default;
};

struct SkewTableau {
    Ribbon ribbon;
    /// filling[i] is the value (1..N) in box i of the ribbon's box list.
    std::vector<int> filling;
    friend bool operator==(const SkewTableau&, const SkewTableau&) = default;
};

/// Univariate series with integer coefficients, index = power of q.
struct CountSeries {
    std::vector<Integer> coefficients;
    Integer at(int d) const;
    friend bool operator==(const CountSeries&, const CountSeries&) = default;
};

/// Bivariate series, coefficients[d][l] multiplies q^d t^l.
struct BivariateSeries {
    std::vector<std::vector<Integer>> coefficients;
    /// Coefficient of q^d as a polynomial in t.
    CountSeries at_q(int d) const;
};

/// Nonincreasing, unit steps, final entry 0.
bool is_valid_class(const std::vector<int>& cls);

Ribbon class_to_ribbon(const TypeVector& cls);
TypeVector ribbon_to_class(const Ribbon& r);

/// Sum of class entries; the degree of every form the ribbon encodes.
int ribbon_index(const Ribbon& r);

/// The regular form with nondecreasing entries read from the box columns.
CvForm ribbon_form(const Ribbon& r);

SkewPartition to_skew_partition(const Ribbon& r);
std::string to_string(const SkewPartition& sp);

/// Aitken's determinant n! det[1/(lambda_i - mu_j - i + j)!].
Integer count_syt(const SkewPartition& sp);

bool is_standard(const SkewTableau& t);

/// All standard fillings, lexicographic in the filling along the box list.
std::vector<SkewTableau> enumerate_tableaux(const Ribbon& r);

/// Reads box columns for entries reading_order[0], reading_order[1], ...
/// (one-based). The default reading is backward: N, N-1, ..., 1.
CvForm tableau_to_cvform(const SkewTableau& t, const Permutation& reading_order = {});

/// Box rows read from entry N down to entry 1.
TypeVector tableau_to_type(const SkewTableau& t);

/// Reflection across the skew-diagonal with entries k -> N - k + 1.
SkewTableau flip(const SkewTableau& t);
Ribbon flip_shape(const Ribbon& r);

/// All 2^(N-1) ribbons, classes in descending lexicographic order.
std::vector<Ribbon> enumerate_ribbons(int n);

/// Ribbons of index d, classes in descending lexicographic order.
std::vector<Ribbon> ribbons_of_degree(int n, int d);

/// Partitions of `total` into at most `max_parts` parts, none larger than
/// `max_part`, as nonincreasing lists in descending lexicographic order.
std::vector<std::vector<int>> bounded_partitions(int total, int max_parts, int max_part);

/// prod_{k=1}^{N-1} (1 + q^k t).
BivariateSeries ribbon_generating_function(int n);

/// sum_k [N-1 choose k]_q q^{k(k+1)/2} t^k.
BivariateSeries ribbon_generating_function_by_height(int n);

/// Gaussian binomial [n choose k]_q.
CountSeries q_binomial(int n, int k);

/// "t^5 + 5t^4 + 2t^3" rendering of a series in t.
std::string series_in_t(const CountSeries& s);

/// English-convention diagram, one text row per ribbon row.
std::string render(const Ribbon& r);
std::string render(const SkewTableau& t);

/// Rebuilds the tableau a standard form came from under the backward reading.
/// Returns nullopt when the form is not a standard form.
std::optional<SkewTableau> tableau_of_standard_form(const CvForm& f);

}  // namespace cvf
