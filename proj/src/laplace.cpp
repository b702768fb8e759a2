#include "cvforms/laplace.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cvf {

int RowBlock::nvars() const {
    int n = 0;
    for (const auto& b : blocks) n += static_cast<int>(b.size());
    return n;
}

namespace {

int concatenated_sign(const std::vector<std::vector<int>>& parts) {
    Permutation p;
    for (const auto& part : parts) p.insert(p.end(), part.begin(), part.end());
    return permutation_sign(p);
}

// Visits every ascending k-subset of `pool` (itself ascending) in lexicographic order.
template <class Visit>
void for_each_combination(const std::vector<int>& pool, int k, Visit&& visit) {
    std::vector<int> pick;
    pick.reserve(k);
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (static_cast<int>(pick.size()) == k) {
            visit(pick);
            return;
        }
        const std::size_t need = k - pick.size();
        for (std::size_t i = start; i + need <= pool.size(); ++i) {
            pick.push_back(pool[i]);
            self(self, i + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
}

std::vector<int> remove_all(const std::vector<int>& pool, const std::vector<int>& taken) {
    std::vector<int> rest;
    std::set_difference(pool.begin(), pool.end(), taken.begin(), taken.end(),
                        std::back_inserter(rest));
    return rest;
}

Polynomial alternant(int nvars, const std::vector<int>& vars, const std::vector<int>& powers) {
    const std::size_t m = vars.size();
    Polynomial r(nvars);
    Integer denominator = 1;
    for (int p : powers) denominator *= factorial(p);
    std::vector<int> sigma(m);
    std::iota(sigma.begin(), sigma.end(), 0);
    ExponentVector e(nvars, 0);
    do {
        std::fill(e.begin(), e.end(), 0);
        for (std::size_t row = 0; row < m; ++row) e[vars[sigma[row]]] = powers[row];
        Permutation one_based(m);
        for (std::size_t i = 0; i < m; ++i) one_based[i] = sigma[i] + 1;
        r.add_term(e, Rational(permutation_sign(one_based)));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    Rational scale(Integer(1), denominator);
    return r * scale;
}

}  // namespace

std::vector<Shuffle> shuffles(const std::vector<int>& composition) {
    int n = 0;
    for (int m : composition) {
        if (m < 1) throw std::invalid_argument("composition parts must be positive");
        n += m;
    }
    if (composition.empty()) throw std::invalid_argument("empty composition");
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 1);

    std::vector<Shuffle> out;
    std::vector<std::vector<int>> parts;
    auto rec = [&](auto&& self, std::size_t block, const std::vector<int>& pool) -> void {
        if (block == composition.size()) {
            out.push_back(Shuffle{parts, concatenated_sign(parts)});
            return;
        }
        for_each_combination(pool, composition[block], [&](const std::vector<int>& pick) {
            parts.push_back(pick);
            self(self, block + 1, remove_all(pool, pick));
            parts.pop_back();
        });
    };
    rec(rec, 0, all);
    return out;
}

std::vector<std::vector<int>> DecodingTable::rows() const {
    std::vector<std::vector<int>> out;
    for (int a : values) {
        std::vector<int> run(a + 1);
        for (int i = 0; i <= a; ++i) run[i] = a - i;
        out.push_back(std::move(run));
    }
    return out;
}

DecodingTable build_decoding_table(const CvForm& sorted, std::vector<int> labels) {
    const int n = sorted.size();
    if (labels.empty()) {
        labels.resize(n);
        std::iota(labels.begin(), labels.end(), 0);
    }
    if (static_cast<int>(labels.size()) != n)
        throw std::invalid_argument("label count does not match form size");
    if (!std::is_sorted(sorted.entries().begin(), sorted.entries().end()))
        throw std::invalid_argument("decoding table needs nondecreasing entries");
    if (sorted[0] == 0)
        throw std::invalid_argument("decoding table needs a zero-free form; remove zeros first");
    DecodingTable table;
    for (int i = 0; i < n; ++i) {
        if (i == 0 || sorted[i] != sorted[i - 1]) {
            table.values.push_back(sorted[i]);
            table.header.emplace_back();
        }
        table.header.back().push_back(labels[i]);
    }
    return table;
}

std::string to_string(const RowBlock& rb, bool with_sign) {
    std::ostringstream out;
    if (with_sign) out << (rb.total_sign < 0 ? '-' : '+');
    out << '|';
    for (const auto& block : rb.blocks) {
        for (std::size_t i = 0; i < block.size(); ++i) {
            if (i) out << ' ';
            out << block[i];
        }
        out << '|';
    }
    return out.str();
}

std::string schur_annotation(const RowBlock& rb) {
    std::ostringstream out;
    for (std::size_t j = 0; j < rb.blocks.size(); ++j) {
        const auto& powers = rb.blocks[j];
        const std::size_t m = powers.size();
        if (j) out << " * ";
        out << "s[";
        for (std::size_t i = 0; i < m; ++i) {
            if (i) out << ',';
            out << powers[i] - static_cast<int>(m - 1 - i);
        }
        out << "](";
        for (std::size_t i = 0; i < rb.var_partition[j].size(); ++i) {
            if (i) out << ',';
            out << 't' << rb.var_partition[j][i] + 1;
        }
        out << ")/(";
        for (int p : powers) out << p << '!';
        out << ')';
    }
    for (const auto& vars : rb.var_partition) {
        if (vars.size() < 2) continue;
        out << " * D(";
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (i) out << ',';
            out << 't' << vars[i] + 1;
        }
        out << ')';
    }
    return out.str();
}

Expansion expand_rowblocks(const CvForm& f) {
    const int n = f.size();
    Expansion result;
    result.factor.nvars = n;

    const ZeroRemoval zr = remove_zeros(f);
    if (zr.is_scalar()) {
        if (zr.sign == 0) {
            result.factor.vanishes = true;
            return result;
        }
        // +-1: a single row-block of empty minors |0|0|...|0|
        const SortedForm s = sort_entries(f);
        RowBlock rb;
        rb.total_sign = zr.sign;
        for (int i = 0; i < n; ++i) {
            rb.blocks.push_back({0});
            rb.var_partition.push_back({s.perm[i] - 1});
            result.factor.vandermonde_blocks.push_back({s.perm[i] - 1});
        }
        result.terms.push_back(std::move(rb));
        return result;
    }

    const SortedForm s = sort_entries(*zr.form);
    std::vector<int> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = s.perm[i] - 1;
    const DecodingTable table = build_decoding_table(s.sorted, labels);
    result.factor.vandermonde_blocks = table.header;
    const int outer_sign = zr.sign * s.sign;

    std::vector<int> all_rows(n);
    std::iota(all_rows.begin(), all_rows.end(), 1);
    std::vector<std::vector<int>> chosen;

    auto rec = [&](auto&& self, std::size_t block, const std::vector<int>& pool) -> void {
        if (block == table.values.size()) {
            RowBlock rb;
            rb.rows = chosen;
            rb.var_partition = table.header;
            rb.total_sign = outer_sign * concatenated_sign(chosen);
            for (std::size_t j = 0; j < chosen.size(); ++j) {
                std::vector<int> powers;
                for (int row : chosen[j]) powers.push_back(table.values[j] - row + 1);
                rb.blocks.push_back(std::move(powers));
            }
            result.terms.push_back(std::move(rb));
            return;
        }
        // rows beyond a_j + 1 would put a zero row into this block's minor
        const int highest_row = table.values[block] + 1;
        std::vector<int> admissible;
        for (int row : pool)
            if (row <= highest_row) admissible.push_back(row);
        const int size = static_cast<int>(table.header[block].size());
        for_each_combination(admissible, size, [&](const std::vector<int>& pick) {
            chosen.push_back(pick);
            self(self, block + 1, remove_all(pool, pick));
            chosen.pop_back();
        });
    };
    rec(rec, 0, all_rows);

    std::sort(result.terms.begin(), result.terms.end(),
              [](const RowBlock& a, const RowBlock& b) { return compare_rowblocks(a, b) > 0; });
    if (result.terms.empty()) result.factor.vanishes = true;
    return result;
}

Polynomial rowblock_value(const RowBlock& rb, const BlockFactorization& factor) {
    if (rb.nvars() != factor.nvars)
        throw std::invalid_argument("row-block size does not match the factorization");
    if (rb.blocks.size() != rb.var_partition.size())
        throw std::invalid_argument("row-block blocks and variable partition disagree");
    Polynomial value = Polynomial::constant(factor.nvars, 1);
    for (std::size_t j = 0; j < rb.blocks.size(); ++j) {
        if (rb.blocks[j].size() != rb.var_partition[j].size())
            throw std::invalid_argument("block size does not match its variable group");
        value *= alternant(factor.nvars, rb.var_partition[j], rb.blocks[j]);
    }
    return value;
}

Polynomial evaluate(const CvForm& f) {
    const Expansion ex = expand_rowblocks(f);
    Polynomial sum(f.size());
    for (const RowBlock& rb : ex.terms) {
        Polynomial v = rowblock_value(rb, ex.factor);
        if (rb.total_sign < 0)
            sum -= v;
        else
            sum += v;
    }
    return sum;
}

Polynomial determinant(const std::vector<std::vector<Polynomial>>& matrix) {
    const int n = static_cast<int>(matrix.size());
    if (n == 0) throw std::invalid_argument("empty matrix");
    if (n > 30) throw std::invalid_argument("matrix too large for subset memoization");
    for (const auto& row : matrix)
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("matrix is not square");
    const int nvars = matrix[0][0].nvars();

    // memo[mask] = determinant of rows in `mask` against the last popcount(mask) columns
    std::map<unsigned, Polynomial> memo;
    auto det = [&](auto&& self, unsigned mask, int col) -> Polynomial {
        if (col == n) return Polynomial::constant(nvars, 1);
        if (auto it = memo.find(mask); it != memo.end()) return it->second;
        Polynomial sum(nvars);
        int position = 0;
        for (int r = 0; r < n; ++r) {
            if (!(mask & (1u << r))) continue;
            const Polynomial& entry = matrix[r][col];
            if (!entry.is_zero()) {
                Polynomial term = entry * self(self, mask & ~(1u << r), col + 1);
                if (position % 2 == 0)
                    sum += term;
                else
                    sum -= term;
            }
            ++position;
        }
        memo.emplace(mask, sum);
        return sum;
    };
    return det(det, (n == 32 ? ~0u : (1u << n) - 1), 0);
}

std::vector<std::vector<Polynomial>> cvform_matrix(const CvForm& f) {
    const int n = f.size();
    std::vector<std::vector<Polynomial>> m(n, std::vector<Polynomial>(n, Polynomial(n)));
    for (int row = 0; row < n; ++row) {
        for (int col = 0; col < n; ++col) {
            const int power = f[col] - row;
            if (power < 0) continue;
            ExponentVector e(n, 0);
            e[col] = power;
            m[row][col] = Polynomial::monomial(e, Rational(Integer(1), factorial(power)));
        }
    }
    return m;
}

Polynomial naive_oracle(const CvForm& f) { return determinant(cvform_matrix(f)); }

std::strong_ordering compare_rowblocks(const RowBlock& a, const RowBlock& b) {
    if (a.blocks.size() != b.blocks.size())
        throw std::invalid_argument("row-blocks come from different expansions");
    for (std::size_t j = 0; j < a.blocks.size(); ++j)
        if (a.blocks[j].size() != b.blocks[j].size())
            throw std::invalid_argument("row-blocks come from different expansions");

    std::vector<int> fa, fb;
    for (const auto& blk : a.blocks) fa.insert(fa.end(), blk.begin(), blk.end());
    for (const auto& blk : b.blocks) fb.insert(fb.end(), blk.begin(), blk.end());
    const int top = std::max(*std::max_element(fa.begin(), fa.end()),
                             *std::max_element(fb.begin(), fb.end()));
    std::vector<int> ca(top + 1, 0), cb(top + 1, 0);
    for (int x : fa) ++ca[x];
    for (int x : fb) ++cb[x];
    for (int k = 0; k <= top; ++k) {
        if (ca[k] != cb[k]) return cb[k] <=> ca[k];
    }
    return fa <=> fb;
}

RowBlock leading_rowblock(const TypeVector& cls) {
    const auto& c = cls.entries;
    if (c.empty()) throw std::invalid_argument("empty class");
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] < 0) throw std::invalid_argument("class entries must be non-negative");
        if (i > 0 && (c[i - 1] - c[i] < 0 || c[i - 1] - c[i] > 1))
            throw std::invalid_argument("not a class: entries must be nonincreasing in unit steps");
    }
    RowBlock rb;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i == 0 || c[i] == c[i - 1]) {
            rb.blocks.emplace_back();
            rb.var_partition.emplace_back();
        }
        rb.blocks.back().push_back(c[i]);
        rb.var_partition.back().push_back(static_cast<int>(i));
    }
    return rb;
}

RowBlock leading_rowblock(const CvForm& f) {
    if (!is_regular(f))
        throw std::invalid_argument("leading row-block needs a regular form: " + to_string(f));
    const SortedForm s = sort_entries(f);
    RowBlock rb;
    for (int i = 0; i < f.size(); ++i) {
        if (i == 0 || s.sorted[i] != s.sorted[i - 1]) {
            rb.blocks.emplace_back();
            rb.var_partition.emplace_back();
        }
        rb.blocks.back().push_back(s.sorted[i] - i);
        rb.var_partition.back().push_back(s.perm[i] - 1);
    }
    return rb;
}

ExponentVector characteristic_monomial(const RowBlock& rb) {
    ExponentVector e(rb.nvars(), 0);
    for (std::size_t j = 0; j < rb.blocks.size(); ++j) {
        if (rb.blocks[j].size() != rb.var_partition[j].size())
            throw std::invalid_argument("block size does not match its variable group");
        for (std::size_t i = 0; i < rb.blocks[j].size(); ++i) {
            const int var = rb.var_partition[j][i];
            if (var < 0 || var >= static_cast<int>(e.size()))
                throw std::invalid_argument("variable index out of range");
            e[var] = rb.blocks[j][i];
        }
    }
    return e;
}

Integer nonzero_leibniz_terms(const CvForm& f) {
    // column j is nonzero exactly in rows 1..n_j+1, a nested family
    std::vector<int> capacity(f.entries());
    std::sort(capacity.begin(), capacity.end());
    Integer count = 1;
    for (std::size_t j = 0; j < capacity.size(); ++j) {
        const long free_rows = capacity[j] + 1 - static_cast<long>(j);
        if (free_rows <= 0) return 0;
        count *= free_rows;
    }
    return count;
}

}  // namespace cvf
