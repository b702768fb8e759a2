#include "cvforms/cvform.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cvf {

int permutation_sign(const Permutation& p) {
    int inversions = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

bool is_permutation(const Permutation& p) {
    std::vector<bool> seen(p.size() + 1, false);
    for (int v : p) {
        if (v < 1 || v > static_cast<int>(p.size()) || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

Permutation identity_permutation(int n) {
    Permutation p(n);
    std::iota(p.begin(), p.end(), 1);
    return p;
}

CvForm::CvForm(std::vector<int> entries) : entries_(std::move(entries)) {
    const int n = size();
    if (n < 1) throw std::invalid_argument("cv-form needs at least one entry");
    for (int e : entries_) {
        if (e < 0 || e >= n)
            throw std::invalid_argument("cv-form entry " + std::to_string(e) + " outside [0, " +
                                        std::to_string(n - 1) + "]");
    }
}

std::vector<int> parse_int_list(std::string_view text) {
    std::vector<int> values;
    std::size_t i = 0;
    auto skip_separators = [&] {
        while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
            ++i;
    };
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    char close = 0;
    if (i < text.size() && (text[i] == '[' || text[i] == '(')) {
        close = text[i] == '[' ? ']' : ')';
        ++i;
    }
    bool closed = false;
    while (true) {
        skip_separators();
        if (i >= text.size()) break;
        if (close != 0 && text[i] == close) {
            closed = true;
            ++i;
            skip_separators();
            if (i != text.size()) throw std::invalid_argument("trailing characters after list");
            break;
        }
        bool negative = false;
        if (text[i] == '-') {
            negative = true;
            ++i;
        }
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
            throw std::invalid_argument("malformed integer list: '" + std::string(text) + "'");
        long value = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            value = value * 10 + (text[i] - '0');
            if (value > 1'000'000) throw std::invalid_argument("integer too large");
            ++i;
        }
        values.push_back(static_cast<int>(negative ? -value : value));
        if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != ',' &&
            text[i] != close)
            throw std::invalid_argument("malformed integer list: '" + std::string(text) + "'");
    }
    if (close != 0 && !closed) throw std::invalid_argument("unterminated list");
    if (values.empty()) throw std::invalid_argument("empty list");
    return values;
}

CvForm parse_form(std::string_view text) { return CvForm(parse_int_list(text)); }

namespace {

std::string join(const std::vector<int>& v, char open, char close) {
    std::ostringstream out;
    out << open;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << ' ';
        out << v[i];
    }
    out << close;
    return out.str();
}

}  // namespace

std::string to_string(const CvForm& f) { return join(f.entries(), '[', ']'); }
std::string to_string(const TypeVector& t) { return join(t.entries, '(', ')'); }
std::string to_string(const Permutation& p, char open, char close) { return join(p, open, close); }

int degree(const CvForm& f) {
    const int n = f.size();
    return std::accumulate(f.entries().begin(), f.entries().end(), 0) - n * (n - 1) / 2;
}

ZeroRemoval remove_zeros(const CvForm& f) {
    const int n = f.size();
    const int step_sign = (n - 1) % 2 == 0 ? 1 : -1;
    std::vector<int> entries = f.entries();
    ZeroRemoval result;
    // A zero reappears at most N times before the form is zero-free or scalar.
    for (int guard = 0; guard <= n + 1; ++guard) {
        const auto zeros = std::count(entries.begin(), entries.end(), 0);
        if (zeros == 0) {
            result.form = CvForm(entries);
            return result;
        }
        if (zeros >= 2) {
            result.sign = 0;
            return result;
        }
        std::vector<int> sorted = entries;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()) {
            // entries are a permutation of 0..N-1: triangular up to column order
            Permutation p(n);
            for (int i = 0; i < n; ++i) p[i] = entries[i] + 1;
            result.sign *= permutation_sign(p);
            return result;
        }
        const auto zero = std::find(entries.begin(), entries.end(), 0);
        for (auto it = entries.begin(); it != entries.end(); ++it) {
            *it = (it == zero) ? n - 1 : *it - 1;
        }
        result.sign *= step_sign;
        ++result.steps;
    }
    throw std::logic_error("zero removal did not terminate for " + to_string(f));
}

Permutation standard_permutation(const CvForm& f) {
    const int n = f.size();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return f[a] < f[b]; });
    Permutation s(n);
    for (int rank = 0; rank < n; ++rank) s[order[rank]] = rank + 1;
    return s;
}

TypeVector type_of(const CvForm& f) {
    const Permutation s = standard_permutation(f);
    TypeVector t;
    t.entries.resize(f.size());
    for (int i = 0; i < f.size(); ++i) t.entries[i] = f[i] - s[i] + 1;
    return t;
}

bool is_regular(const CvForm& f) {
    std::vector<int> sorted = f.entries();
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i] - sorted[i - 1] > 1) return false;
    return true;
}

TypeVector class_of(const CvForm& f) {
    if (!is_regular(f))
        throw std::invalid_argument("class is defined only for regular forms: " + to_string(f));
    TypeVector t = type_of(f);
    std::sort(t.entries.begin(), t.entries.end(), std::greater<>());
    t.is_class = true;
    return t;
}

SortedForm sort_entries(const CvForm& f) {
    const int n = f.size();
    Permutation perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    std::stable_sort(perm.begin(), perm.end(),
                     [&](int a, int b) { return f[a - 1] < f[b - 1]; });
    std::vector<int> sorted(n);
    for (int i = 0; i < n; ++i) sorted[i] = f[perm[i] - 1];
    return SortedForm{CvForm(std::move(sorted)), perm, permutation_sign(perm)};
}

}  // namespace cvf
