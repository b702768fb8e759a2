#include "cvforms/ribbon.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cvf {

Ribbon::Ribbon(std::vector<Box> boxes) : boxes_(std::move(boxes)) {
    const int n = size();
    if (n < 1) throw std::invalid_argument("ribbon needs at least one box");
    if (boxes_.back() != Box{0, n - 1})
        throw std::invalid_argument("ribbon must end with its upper-right box at (0, N-1)");
    for (int i = 0; i + 1 < n; ++i) {
        const Box a = boxes_[i];
        const Box b = boxes_[i + 1];
        const bool right = b.row == a.row && b.col == a.col + 1;
        const bool up = b.row == a.row - 1 && b.col == a.col;
        if (!right && !up)
            throw std::invalid_argument("consecutive ribbon boxes must step one right or one up");
    }
}

Integer CountSeries::at(int d) const {
    if (d < 0 || d >= static_cast<int>(coefficients.size())) return 0;
    return coefficients[d];
}

CountSeries BivariateSeries::at_q(int d) const {
    if (d < 0 || d >= static_cast<int>(coefficients.size())) return CountSeries{{0}};
    return CountSeries{coefficients[d]};
}

bool is_valid_class(const std::vector<int>& cls) {
    if (cls.empty() || cls.back() != 0) return false;
    for (std::size_t i = 0; i + 1 < cls.size(); ++i) {
        const int step = cls[i] - cls[i + 1];
        if (step < 0 || step > 1) return false;
    }
    return true;
}

Ribbon class_to_ribbon(const TypeVector& cls) {
    if (!is_valid_class(cls.entries))
        throw std::invalid_argument("not a class (nonincreasing, unit steps, ending in 0): " +
                                    to_string(cls));
    std::vector<Box> boxes;
    for (std::size_t i = 0; i < cls.entries.size(); ++i)
        boxes.push_back(Box{cls.entries[i], cls.entries[i] + static_cast<int>(i)});
    return Ribbon(std::move(boxes));
}

TypeVector ribbon_to_class(const Ribbon& r) {
    TypeVector t;
    t.is_class = true;
    for (const Box& b : r.boxes()) t.entries.push_back(b.row);
    return t;
}

int ribbon_index(const Ribbon& r) {
    int d = 0;
    for (const Box& b : r.boxes()) d += b.row;
    return d;
}

CvForm ribbon_form(const Ribbon& r) {
    std::vector<int> entries;
    for (const Box& b : r.boxes()) entries.push_back(b.col);
    return CvForm(std::move(entries));
}

SkewPartition to_skew_partition(const Ribbon& r) {
    const int shift = r.boxes().front().col;
    const int rows = r.height();
    std::vector<int> lo(rows, 1 << 30), hi(rows, -1);
    for (const Box& b : r.boxes()) {
        lo[b.row] = std::min(lo[b.row], b.col - shift);
        hi[b.row] = std::max(hi[b.row], b.col - shift);
    }
    SkewPartition sp;
    for (int row = 0; row < rows; ++row) {
        sp.lambda.push_back(hi[row] + 1);
        sp.mu.push_back(lo[row]);
    }
    while (!sp.mu.empty() && sp.mu.back() == 0) sp.mu.pop_back();
    return sp;
}

std::string to_string(const SkewPartition& sp) {
    std::ostringstream out;
    auto list = [&](const std::vector<int>& v) {
        out << '(';
        for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
        out << ')';
    };
    list(sp.lambda);
    out << '/';
    list(sp.mu);
    return out.str();
}

Integer count_syt(const SkewPartition& sp) {
    const std::size_t len = sp.lambda.size();
    if (sp.mu.size() > len) throw std::invalid_argument("mu longer than lambda");
    std::vector<int> mu = sp.mu;
    mu.resize(len, 0);
    int boxes = 0;
    for (std::size_t i = 0; i < len; ++i) {
        if (mu[i] > sp.lambda[i]) throw std::invalid_argument("mu does not fit inside lambda");
        if (i > 0 && (sp.lambda[i] > sp.lambda[i - 1] || mu[i] > mu[i - 1]))
            throw std::invalid_argument("partitions must be nonincreasing");
        boxes += sp.lambda[i] - mu[i];
    }
    if (len == 0) return 1;

    std::vector<std::vector<Rational>> a(len, std::vector<Rational>(len));
    for (std::size_t i = 0; i < len; ++i) {
        for (std::size_t j = 0; j < len; ++j) {
            const long k = static_cast<long>(sp.lambda[i]) - mu[j] - static_cast<long>(i) +
                           static_cast<long>(j);
            a[i][j] = k < 0 ? Rational(0) : Rational(Integer(1), factorial(static_cast<int>(k)));
        }
    }
    Rational det = 1;
    for (std::size_t c = 0; c < len; ++c) {
        std::size_t pivot = c;
        while (pivot < len && a[pivot][c] == 0) ++pivot;
        if (pivot == len) return 0;
        if (pivot != c) {
            std::swap(a[pivot], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t r = c + 1; r < len; ++r) {
            if (a[r][c] == 0) continue;
            const Rational factor = a[r][c] / a[c][c];
            for (std::size_t k = c; k < len; ++k) a[r][k] -= factor * a[c][k];
        }
    }
    Rational count = det * Rational(factorial(boxes));
    if (count.get_den() != 1) throw std::logic_error("non-integral tableau count");
    return count.get_num();
}

bool is_standard(const SkewTableau& t) {
    const int n = t.ribbon.size();
    if (static_cast<int>(t.filling.size()) != n) return false;
    if (!is_permutation(t.filling)) return false;
    for (int i = 0; i + 1 < n; ++i) {
        const bool up = t.ribbon.step_is_up(i);
        // rows increase rightward, columns increase downward
        if (up ? t.filling[i + 1] > t.filling[i] : t.filling[i + 1] < t.filling[i]) return false;
    }
    return true;
}

std::vector<SkewTableau> enumerate_tableaux(const Ribbon& r) {
    const int n = r.size();
    // box i must be filled after these neighbours
    std::vector<std::vector<int>> before(n);
    for (int i = 0; i + 1 < n; ++i) {
        if (r.step_is_up(i))
            before[i].push_back(i + 1);
        else
            before[i + 1].push_back(i);
    }
    std::vector<std::vector<int>> fillings;
    std::vector<int> filling(n, 0);
    auto grow = [&](auto&& self, int value) -> void {
        if (value > n) {
            fillings.push_back(filling);
            return;
        }
        for (int i = 0; i < n; ++i) {
            if (filling[i] != 0) continue;
            bool ready = true;
            for (int j : before[i]) ready = ready && filling[j] != 0;
            if (!ready) continue;
            filling[i] = value;
            self(self, value + 1);
            filling[i] = 0;
        }
    };
    grow(grow, 1);
    std::sort(fillings.begin(), fillings.end());
    std::vector<SkewTableau> out;
    out.reserve(fillings.size());
    for (auto& f : fillings) out.push_back(SkewTableau{r, std::move(f)});
    return out;
}

CvForm tableau_to_cvform(const SkewTableau& t, const Permutation& reading_order) {
    if (!is_standard(t)) throw std::invalid_argument("tableau filling is not standard");
    const int n = t.ribbon.size();
    Permutation order = reading_order;
    if (order.empty()) {
        order.resize(n);
        for (int k = 0; k < n; ++k) order[k] = n - k;
    }
    if (static_cast<int>(order.size()) != n || !is_permutation(order))
        throw std::invalid_argument("reading order must be a permutation of 1..N");
    std::vector<int> box_of(n + 1);
    for (int i = 0; i < n; ++i) box_of[t.filling[i]] = i;
    std::vector<int> entries(n);
    for (int k = 0; k < n; ++k) entries[k] = t.ribbon.boxes()[box_of[order[k]]].col;
    return CvForm(std::move(entries));
}

TypeVector tableau_to_type(const SkewTableau& t) {
    if (!is_standard(t)) throw std::invalid_argument("tableau filling is not standard");
    const int n = t.ribbon.size();
    std::vector<int> box_of(n + 1);
    for (int i = 0; i < n; ++i) box_of[t.filling[i]] = i;
    TypeVector type;
    for (int value = n; value >= 1; --value) type.entries.push_back(t.ribbon.boxes()[box_of[value]].row);
    return type;
}

Ribbon flip_shape(const Ribbon& r) {
    const int n = r.size();
    std::vector<Box> boxes(n);
    boxes[n - 1] = Box{0, n - 1};
    for (int i = n - 2; i >= 0; --i) {
        const Box next = boxes[i + 1];
        // the reflection turns right steps into up steps and vice versa
        boxes[i] = r.step_is_up(i) ? Box{next.row, next.col - 1} : Box{next.row + 1, next.col};
    }
    return Ribbon(std::move(boxes));
}

SkewTableau flip(const SkewTableau& t) {
    if (!is_standard(t)) throw std::invalid_argument("tableau filling is not standard");
    const int n = t.ribbon.size();
    std::vector<int> filling(n);
    for (int i = 0; i < n; ++i) filling[i] = n + 1 - t.filling[i];
    return SkewTableau{flip_shape(t.ribbon), std::move(filling)};
}

namespace {

std::vector<Ribbon> ribbons_from_classes(std::vector<std::vector<int>> classes) {
    std::sort(classes.begin(), classes.end(), std::greater<>());
    std::vector<Ribbon> out;
    for (auto& c : classes) out.push_back(class_to_ribbon(TypeVector{std::move(c), true}));
    return out;
}

}  // namespace

std::vector<Ribbon> enumerate_ribbons(int n) {
    if (n < 1) throw std::invalid_argument("N must be positive");
    if (n > 24) throw std::invalid_argument("N too large to enumerate all ribbons");
    std::vector<std::vector<int>> classes;
    for (unsigned long mask = 0; mask < (1ul << (n - 1)); ++mask) {
        std::vector<int> cls(n, 0);
        // bit i set: the step from box i to box i+1 goes up
        for (int i = n - 2; i >= 0; --i) cls[i] = cls[i + 1] + ((mask >> i) & 1ul ? 1 : 0);
        classes.push_back(std::move(cls));
    }
    return ribbons_from_classes(std::move(classes));
}

std::vector<std::vector<int>> bounded_partitions(int total, int max_parts, int max_part) {
    std::vector<std::vector<int>> out;
    if (total < 0) return out;
    std::vector<int> current;
    auto rec = [&](auto&& self, int remaining, int cap) -> void {
        if (remaining == 0) {
            out.push_back(current);
            return;
        }
        if (static_cast<int>(current.size()) == max_parts) return;
        for (int part = std::min(remaining, cap); part >= 1; --part) {
            current.push_back(part);
            self(self, remaining - part, part);
            current.pop_back();
        }
    };
    rec(rec, total, max_part);
    return out;
}

std::vector<Ribbon> ribbons_of_degree(int n, int d) {
    if (n < 1) throw std::invalid_argument("N must be positive");
    if (d < 0 || d > n * (n - 1) / 2)
        throw std::invalid_argument("degree " + std::to_string(d) + " outside [0, " +
                                    std::to_string(n * (n - 1) / 2) + "]");
    std::vector<std::vector<int>> classes;
    for (int l = 0; l < n; ++l) {
        const int lower = l * (l + 1) / 2;
        const int upper = l * (2 * n - l - 1) / 2;
        if (d < lower || d > upper) continue;
        for (const auto& p : bounded_partitions(d - lower, n - l - 1, l)) {
            // each row k holds one box plus the extra boxes recorded in the partition
            std::vector<int> multiplicity(l + 1, 1);
            for (int part : p) ++multiplicity[part];
            multiplicity[0] += n - l - 1 - static_cast<int>(p.size());
            std::vector<int> cls;
            for (int k = l; k >= 0; --k) cls.insert(cls.end(), multiplicity[k], k);
            classes.push_back(std::move(cls));
        }
    }
    return ribbons_from_classes(std::move(classes));
}

BivariateSeries ribbon_generating_function(int n) {
    if (n < 1) throw std::invalid_argument("N must be positive");
    const int top = n * (n - 1) / 2;
    std::vector<std::vector<Integer>> c(top + 1, std::vector<Integer>(n, 0));
    c[0][0] = 1;
    for (int k = 1; k <= n - 1; ++k) {
        // multiply by (1 + q^k t), descending so each factor is used once
        for (int d = top; d >= k; --d)
            for (int l = n - 1; l >= 1; --l) c[d][l] += c[d - k][l - 1];
    }
    return BivariateSeries{std::move(c)};
}

CountSeries q_binomial(int n, int k) {
    if (k < 0 || k > n) return CountSeries{{0}};
    // [n,k] = [n-1,k-1] + q^k [n-1,k]
    std::vector<std::vector<CountSeries>> table(n + 1, std::vector<CountSeries>(n + 1));
    for (int m = 0; m <= n; ++m) {
        for (int j = 0; j <= m; ++j) {
            std::vector<Integer> coeff(j * (m - j) + 1, 0);
            if (j == 0 || j == m) {
                coeff[0] = 1;
            } else {
                const auto& a = table[m - 1][j - 1].coefficients;
                const auto& b = table[m - 1][j].coefficients;
                for (std::size_t i = 0; i < a.size(); ++i) coeff[i] += a[i];
                for (std::size_t i = 0; i < b.size(); ++i) coeff[i + j] += b[i];
            }
            table[m][j] = CountSeries{std::move(coeff)};
        }
    }
    return table[n][k];
}

BivariateSeries ribbon_generating_function_by_height(int n) {
    if (n < 1) throw std::invalid_argument("N must be positive");
    const int top = n * (n - 1) / 2;
    std::vector<std::vector<Integer>> c(top + 1, std::vector<Integer>(n, 0));
    for (int k = 0; k <= n - 1; ++k) {
        const CountSeries qb = q_binomial(n - 1, k);
        const int shift = k * (k + 1) / 2;
        for (std::size_t i = 0; i < qb.coefficients.size(); ++i) c[i + shift][k] += qb.coefficients[i];
    }
    return BivariateSeries{std::move(c)};
}

std::string series_in_t(const CountSeries& s) {
    std::ostringstream out;
    bool first = true;
    for (int l = static_cast<int>(s.coefficients.size()) - 1; l >= 0; --l) {
        const Integer& c = s.coefficients[l];
        if (c == 0) continue;
        if (!first) out << " + ";
        first = false;
        if (l == 0) {
            out << c.get_str();
            continue;
        }
        if (c != 1) out << c.get_str();
        out << 't';
        if (l > 1) out << '^' << l;
    }
    return first ? "0" : out.str();
}

namespace {

std::string render_cells(const Ribbon& r, const std::vector<std::string>& labels) {
    const int shift = r.boxes().front().col;
    const int rows = r.height();
    const int cols = r.width();
    std::size_t cell = 2;
    for (const auto& s : labels) cell = std::max(cell, s.size() + 1);
    std::vector<std::vector<std::string>> grid(rows, std::vector<std::string>(cols));
    for (int i = 0; i < r.size(); ++i) {
        const Box b = r.boxes()[i];
        grid[b.row][b.col - shift] = labels[i];
    }
    auto pad = [&](const std::string& s) { return std::string(cell - s.size(), ' ') + s; };
    std::ostringstream out;
    for (int row = 0; row < rows; ++row) {
        std::string line;
        for (int c = 0; c < cols; ++c) line += grid[row][c].empty() ? std::string(cell, ' ') : pad(grid[row][c]);
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << line << '\n';
    }
    std::string footer;
    for (int c = 0; c < cols; ++c) footer += pad(std::to_string(c + shift));
    out << footer << '\n';
    return out.str();
}

}  // namespace

std::string render(const Ribbon& r) {
    return render_cells(r, std::vector<std::string>(r.size(), "#"));
}

std::string render(const SkewTableau& t) {
    std::vector<std::string> labels;
    for (int v : t.filling) labels.push_back(std::to_string(v));
    return render_cells(t.ribbon, labels);
}

std::optional<SkewTableau> tableau_of_standard_form(const CvForm& f) {
    const int n = f.size();
    const TypeVector type = type_of(f);
    std::vector<std::pair<Box, int>> placed;
    for (int k = 0; k < n; ++k) placed.push_back({Box{type.entries[k], f[k]}, n - k});
    // lower-left to upper-right: columns ascending, rows descending
    std::sort(placed.begin(), placed.end(), [](const auto& a, const auto& b) {
        if (a.first.col != b.first.col) return a.first.col < b.first.col;
        return a.first.row > b.first.row;
    });
    std::vector<Box> boxes;
    std::vector<int> filling;
    for (const auto& [box, value] : placed) {
        boxes.push_back(box);
        filling.push_back(value);
    }
    try {
        SkewTableau t{Ribbon(std::move(boxes)), std::move(filling)};
        if (!is_standard(t) || tableau_to_cvform(t) != f) return std::nullopt;
        return t;
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

}  // namespace cvf
