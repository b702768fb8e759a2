#pragma once

// Confluent Vandermonde forms [n_1 ... n_N] and their combinatorial labels.

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cvf {

/// One-based permutation of (1..N), stored as the list of images.
using Permutation = std::vector<int>;

int permutation_sign(const Permutation& p);
bool is_permutation(const Permutation& p);
Permutation identity_permutation(int n);

/// Entry list of a cv-form. Every entry lies in [0, N-1].
class CvForm {
public:
    explicit CvForm(std::vector<int> entries);

    int size() const { return static_cast<int>(entries_.size()); }
    const std::vector<int>& entries() const { return entries_; }
    int operator[](int i) const { return entries_[i]; }

    friend bool operator==(const CvForm&, const CvForm&) = default;
    friend auto operator<=>(const CvForm&, const CvForm&) = default;

private:
    std::vector<int> entries_;
};

/// Type (or class, when sorted nonincreasing) of a cv-form.
struct TypeVector {
    std::vector<int> entries;
    bool is_class = false;

    friend bool operator==(const TypeVector& a, const TypeVector& b) {
        return a.entries == b.entries;
    }
};

/// Accepts "[2 2 3 3]", "2,2,3,3" and mixtures; whitespace-insensitive.
std::vector<int> parse_int_list(std::string_view text);
CvForm parse_form(std::string_view text);

std::string to_string(const CvForm& f);
std::string to_string(const TypeVector& t);
std::string to_string(const Permutation& p, char open = '(', char close = ')');

int degree(const CvForm& f);

/// Outcome of zero removal. When `form` is empty the value is the scalar
/// `sign` (one of -1, 0, +1); otherwise the value is sign * form.
struct ZeroRemoval {
    int sign = 1;
    std::optional<CvForm> form;
    int steps = 0;

    bool is_scalar() const { return !form.has_value(); }
};

/// Replaces the leftmost zero by N-1 and decrements the other entries,
/// collecting (-1)^(N-1) per step, until the form is zero-free or a scalar.
ZeroRemoval remove_zeros(const CvForm& f);

/// Stable ranks of the entries, ties broken left to right.
Permutation standard_permutation(const CvForm& f);

TypeVector type_of(const CvForm& f);

/// Sorted entries differ by at most one at each step.
bool is_regular(const CvForm& f);

/// Type sorted nonincreasing; throws std::invalid_argument for non-regular forms.
TypeVector class_of(const CvForm& f);

struct SortedForm {
    CvForm sorted;
    /// perm[i] is the (one-based) original column that lands at position i.
    Permutation perm;
    int sign;
};

SortedForm sort_entries(const CvForm& f);

}  // namespace cvf
