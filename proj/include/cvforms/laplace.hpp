#pragma once

// Laplace block expansion of cv-forms into row-blocks.
//
// A cv-form with nondecreasing entries a_1 < ... < a_r (multiplicities m_j)
// is a determinant whose columns group into r blocks of equal entries. Rows
// are shuffled into the blocks; a row i placed in block j contributes the
// power a_j - i + 1, and the shuffle is dropped as soon as that power would
// be negative (a zero row in the minor). What remains is a sum of signed
// products of alternants, one per block, each written as its list of powers,
// e.g. +|2 1|2 1|1 0|.

#include "cvforms/cvform.hpp"
#include "cvforms/poly.hpp"

#include <compare>
#include <string>
#include <vector>

namespace cvf {

struct Shuffle {
    /// Ascending one-based row lists, one per block.
    std::vector<std::vector<int>> parts;
    int sign = 1;
};

/// All shuffle permutations for a composition of N, in lexicographic order of
/// the concatenated row list. Count is the multinomial coefficient.
std::vector<Shuffle> shuffles(const std::vector<int>& composition);

struct DecodingTable {
    /// Zero-based variable indices per block of equal entries.
    std::vector<std::vector<int>> header;
    /// Distinct entry values a_1 < ... < a_r.
    std::vector<int> values;

    /// Row j is the run a_j, a_j - 1, ..., 0.
    std::vector<std::vector<int>> rows() const;
};

/// `sorted` must be nondecreasing and zero-free. `labels` gives the variable
/// (zero-based) in each column; defaults to the identity.
DecodingTable build_decoding_table(const CvForm& sorted, std::vector<int> labels = {});

struct RowBlock {
    /// Strictly decreasing powers, one list per block.
    std::vector<std::vector<int>> blocks;
    /// Zero-based variables per block, ascending within the sorted column order.
    std::vector<std::vector<int>> var_partition;
    int total_sign = 1;
    /// One-based matrix rows per block (empty for synthesized row-blocks).
    std::vector<std::vector<int>> rows;

    int nvars() const;
};

struct BlockFactorization {
    int nvars = 0;
    /// Variable groups of equal sorted entries.
    std::vector<std::vector<int>> vandermonde_blocks;
    /// Set when the form evaluates to zero before any table is built.
    bool vanishes = false;
};

struct Expansion {
    BlockFactorization factor;
    /// Terms in descending row-block order.
    std::vector<RowBlock> terms;
};

/// Row-block text as in "+|2 1|2 0|2 0|". With `with_sign` false the sign is omitted.
std::string to_string(const RowBlock& rb, bool with_sign = true);

/// Alternant factor annotation, e.g. "s[1,1](t1,t2)/(2!1!)".
std::string schur_annotation(const RowBlock& rb);

Expansion expand_rowblocks(const CvForm& f);

/// Unsigned value: product over blocks of det[t_v^p / p!].
Polynomial rowblock_value(const RowBlock& rb, const BlockFactorization& factor);

Polynomial evaluate(const CvForm& f);

/// Exact determinant of a square polynomial matrix by cofactor expansion along
/// the first column (minors memoized by row subset).
Polynomial determinant(const std::vector<std::vector<Polynomial>>& matrix);

/// The N x N matrix whose (i, j) entry is t_j^{n_j - i + 1}/(n_j - i + 1)!.
std::vector<std::vector<Polynomial>> cvform_matrix(const CvForm& f);

/// Direct determinant of cvform_matrix(f).
Polynomial naive_oracle(const CvForm& f);

/// Row-block order: with equal counts of entries 0..k-1, fewer entries k is
/// greater; permuted entries compare lexicographically. Throws
/// std::invalid_argument when the two row-blocks have different shapes.
std::strong_ordering compare_rowblocks(const RowBlock& a, const RowBlock& b);

/// Class entries with bars between equal neighbours; variables are the
/// sorted column positions 0..N-1.
RowBlock leading_rowblock(const TypeVector& cls);

/// Leading row-block of a regular form, with the form's own variable blocks.
RowBlock leading_rowblock(const CvForm& f);

/// Exponents of the product of the diagonal terms of every minor.
ExponentVector characteristic_monomial(const RowBlock& rb);

/// Number of nonzero products in the Leibniz expansion of cvform_matrix(f).
Integer nonzero_leibniz_terms(const CvForm& f);

}  // namespace cvf
