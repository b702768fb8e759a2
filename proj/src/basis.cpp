#include "cvforms/basis.hpp"

#include "cvforms/parallel.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace cvf {

CountSeries q_factorial(int n) {
    if (n < 1) throw std::invalid_argument("N must be positive");
    std::vector<Integer> c{1};
    for (int i = 1; i <= n - 1; ++i) {
        std::vector<Integer> next(c.size() + i, 0);
        for (std::size_t d = 0; d < c.size(); ++d)
            for (int j = 0; j <= i; ++j) next[d + j] += c[d];
        c = std::move(next);
    }
    return CountSeries{std::move(c)};
}

Permutation backward_reading(int n) {
    Permutation p(n);
    for (int k = 0; k < n; ++k) p[k] = n - k;
    return p;
}

Basis generate_basis(int n, std::optional<int> degree, Permutation reading_order, int jobs) {
    if (n < 1) throw std::invalid_argument("N must be positive");
    if (reading_order.empty()) reading_order = backward_reading(n);
    if (static_cast<int>(reading_order.size()) != n || !is_permutation(reading_order))
        throw std::invalid_argument("reading order must be a permutation of 1..N");
    const std::vector<Ribbon> ribbons =
        degree ? ribbons_of_degree(n, *degree) : enumerate_ribbons(n);

    std::vector<std::vector<BasisElement>> per_ribbon(ribbons.size());
    parallel_for(ribbons.size(), jobs, [&](std::size_t i) {
        for (SkewTableau& t : enumerate_tableaux(ribbons[i])) {
            CvForm form = tableau_to_cvform(t, reading_order);
            per_ribbon[i].push_back(BasisElement{std::move(form), std::move(t)});
        }
    });

    Basis b;
    b.n = n;
    b.degree = degree;
    b.reading_order = std::move(reading_order);
    for (auto& chunk : per_ribbon)
        for (auto& e : chunk) b.elements.push_back(std::move(e));
    return b;
}

HarmonicityReport verify_harmonicity(const CvForm& f, int kmax) {
    const int n = f.size();
    if (kmax > n - 1) throw std::invalid_argument("kmax must not exceed N-1");
    HarmonicityReport report;
    const Polynomial value = evaluate(f);
    for (int k = 1; k <= kmax; ++k) {
        if (!symmetrized_derivative(value, k).is_zero()) {
            report = {false, k, "expanded"};
            return report;
        }
        Polynomial sum(n);
        for (int i = 0; i < n; ++i) {
            if (f[i] - k < 0) continue;  // the whole column differentiates away
            std::vector<int> lowered = f.entries();
            lowered[i] -= k;
            sum += evaluate(CvForm(std::move(lowered)));
        }
        if (!sum.is_zero()) {
            report = {false, k, "forms"};
            return report;
        }
    }
    return report;
}

CoefficientMatrix coefficient_matrix(const std::vector<Polynomial>& polys) {
    CoefficientMatrix m;
    std::map<ExponentVector, std::size_t, MonomialOrder> index;
    for (const Polynomial& p : polys)
        for (const auto& [e, c] : p.terms()) index.emplace(e, 0);
    for (auto& [e, i] : index) {
        i = m.columns.size();
        m.columns.push_back(e);
    }
    for (const Polynomial& p : polys) {
        std::vector<std::pair<std::size_t, Rational>> row;
        for (const auto& [e, c] : p.terms()) row.emplace_back(index.at(e), c);
        m.rows.push_back(std::move(row));
    }
    return m;
}

namespace {

using SparseRow = std::vector<std::pair<std::size_t, Integer>>;

void make_primitive(SparseRow& row) {
    if (row.empty()) return;
    Integer g = 0;
    for (const auto& [col, v] : row) {
        g = gcd(g, v);
        if (g == 1) break;
    }
    if (row.front().second < 0) g = -g;
    if (g != 1)
        for (auto& [col, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

SparseRow integer_row(const std::vector<std::pair<std::size_t, Rational>>& row) {
    Integer l = 1;
    for (const auto& [col, v] : row) l = lcm(l, Integer(v.get_den()));
    SparseRow out;
    out.reserve(row.size());
    for (const auto& [col, v] : row) out.emplace_back(col, Integer(v.get_num() * (l / v.get_den())));
    make_primitive(out);
    return out;
}

// row <- b*row - a*pivot, where a and b are the leading entries of row and pivot.
SparseRow eliminate(const SparseRow& row, const SparseRow& pivot) {
    const Integer a = row.front().second;
    const Integer b = pivot.front().second;
    SparseRow out;
    out.reserve(row.size() + pivot.size());
    std::size_t i = 0, j = 0;
    while (i < row.size() || j < pivot.size()) {
        if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
            out.emplace_back(row[i].first, Integer(b * row[i].second));
            ++i;
        } else if (i == row.size() || pivot[j].first < row[i].first) {
            out.emplace_back(pivot[j].first, Integer(-a * pivot[j].second));
            ++j;
        } else {
            Integer v = b * row[i].second - a * pivot[j].second;
            if (v != 0) out.emplace_back(row[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    make_primitive(out);
    return out;
}

}  // namespace

int exact_rank(const CoefficientMatrix& m) {
    std::map<std::size_t, SparseRow> pivots;
    for (const auto& r : m.rows) {
        SparseRow row = integer_row(r);
        while (!row.empty()) {
            auto it = pivots.find(row.front().first);
            if (it == pivots.end()) break;
            row = eliminate(row, it->second);
        }
        if (!row.empty()) {
            const std::size_t lead = row.front().first;
            pivots.emplace(lead, std::move(row));
        }
    }
    return static_cast<int>(pivots.size());
}

IndependenceReport verify_independence(const Basis& b, IndependenceMode mode, int jobs) {
    IndependenceReport report;
    report.size = static_cast<int>(b.elements.size());
    std::map<CvForm, int> seen;
    for (int i = 0; i < report.size; ++i) {
        auto [it, inserted] = seen.emplace(b.elements[i].form, i);
        if (!inserted && !report.duplicate) report.duplicate = std::make_pair(it->second, i);
    }

    std::vector<Polynomial> polys(b.elements.size(), Polynomial(b.n));
    parallel_for(b.elements.size(), jobs, [&](std::size_t i) {
        const CvForm& f = b.elements[i].form;
        if (mode == IndependenceMode::full) {
            polys[i] = evaluate(f);
        } else {
            const RowBlock lead = leading_rowblock(f);
            BlockFactorization factor{b.n, lead.var_partition, false};
            polys[i] = rowblock_value(lead, factor);
        }
    });
    report.rank = exact_rank(coefficient_matrix(polys));
    report.independent = !report.duplicate && report.rank == report.size;
    return report;
}

bool verify_characteristic_uniqueness(const Basis& b) {
    std::set<ExponentVector> seen;
    for (const BasisElement& e : b.elements) {
        if (!seen.insert(characteristic_monomial(leading_rowblock(e.form))).second) return false;
    }
    return true;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<Permutation> out;
    Permutation p = identity_permutation(n);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

BasisComparison compare_bases(int n, const std::vector<Permutation>& orders, int jobs) {
    BasisComparison cmp;
    std::vector<std::set<CvForm>> sets;
    for (const Permutation& order : orders) {
        const Basis b = generate_basis(n, std::nullopt, order, jobs);
        const IndependenceReport r = verify_independence(b, IndependenceMode::full, jobs);
        cmp.bases.push_back({order, r.size, r.rank, r.independent});
        std::set<CvForm> forms;
        for (const auto& e : b.elements) forms.insert(e.form);
        sets.push_back(std::move(forms));
    }
    cmp.distinct_bases = static_cast<int>(std::set<std::set<CvForm>>(sets.begin(), sets.end()).size());
    bool first = true;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        for (std::size_t j = i + 1; j < sets.size(); ++j) {
            std::vector<CvForm> common;
            std::set_intersection(sets[i].begin(), sets[i].end(), sets[j].begin(), sets[j].end(),
                                  std::back_inserter(common));
            const int overlap = static_cast<int>(common.size());
            cmp.min_overlap = first ? overlap : std::min(cmp.min_overlap, overlap);
            cmp.max_overlap = first ? overlap : std::max(cmp.max_overlap, overlap);
            first = false;
        }
    }
    return cmp;
}

}  // namespace cvf
