// cvf: command-line front end for cv-form evaluation, ribbons and bases.
//
// Exit codes: 0 success, 1 a verification check failed, 2 bad usage or input.

#include "cvforms/basis.hpp"
#include "cvforms/io.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

using namespace cvf;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

// Desk-scale caps; larger N is refused with exit code 2.
constexpr int kMaxEvalN = 10;
constexpr int kMaxBasisN = 9;
constexpr int kMaxCountN = 24;
constexpr int kMaxRankN = 6;
constexpr int kMaxLeadingRankN = 7;
constexpr int kMaxHarmonicN = 6;
constexpr int kMaxOracleN = 7;
constexpr int kMaxFlipN = 8;
constexpr int kMaxCharsN = 8;
constexpr int kMaxReadingsN = 5;
constexpr int kMaxBenchN = 8;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string format = "text";
    int jobs = 1;
    std::uint64_t seed = 20240607;
    std::string form;
    bool trace = false;
    int n = 0;
    std::optional<int> degree;
    std::string order;
    bool count_only = false;
    std::string what;
    std::string at;
    std::string suite;
    int samples = 200;
    bool leading = false;
    std::string input;
    std::vector<std::string> forms;
    int random_n = 0;
    std::string strategy = "both";
};

bool json_out(const Options& o) { return o.format == "json"; }

void emit(json j, const std::string& schema) {
    j["schema"] = schema;
    std::cout << j.dump(2) << "\n";
}

json int_json(const Integer& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

void require_n(int n, int cap, const std::string& what) {
    if (n < 1) throw UsageError("N must be positive");
    if (n > cap) throw UsageError(what + " is limited to N <= " + std::to_string(cap));
}

CvForm form_arg(const std::string& text) {
    const CvForm f = parse_form(text);
    require_n(f.size(), kMaxEvalN, "evaluation");
    return f;
}

TypeVector class_arg(const std::string& text) {
    std::vector<int> c = parse_int_list(text);
    if (!is_valid_class(c)) throw UsageError("not a class vector: " + text);
    if (static_cast<int>(c.size()) > kMaxCountN) throw UsageError("class too long");
    return TypeVector{c, true};
}

int parse_power(const std::string& text) {
    std::string s = text;
    if (s.rfind("q^", 0) == 0) s = s.substr(2);
    else if (s == "q") s = "1";
    try {
        std::size_t used = 0;
        const int d = std::stoi(s, &used);
        if (used != s.size()) throw UsageError("bad power: " + text);
        return d;
    } catch (const std::logic_error&) {
        throw UsageError("bad power: " + text);
    }
}

json series_json(const CountSeries& s) {
    json a = json::array();
    for (const Integer& c : s.coefficients) a.push_back(int_json(c));
    return a;
}

std::string join(const std::vector<Integer>& v) {
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
    return out.str();
}

// --- eval / expand / type / class -----------------------------------------

int cmd_eval(const Options& o) {
    const CvForm f = form_arg(o.form);
    const Polynomial p = evaluate(f);
    if (json_out(o)) {
        json j{{"form", to_json(f)}, {"degree", degree(f)}, {"polynomial", to_json(p)}, {"text", canonical_text(p)}};
        if (o.trace) j["trace"] = to_json(expand_rowblocks(f));
        emit(j, "cvf.eval/1");
        return 0;
    }
    if (o.trace) {
        for (const RowBlock& rb : expand_rowblocks(f).terms)
            std::cout << to_string(rb) << "  " << schur_annotation(rb) << "\n";
    }
    std::cout << canonical_text(p) << "\n";
    return 0;
}

int cmd_expand(const Options& o) {
    const CvForm f = form_arg(o.form);
    const Expansion ex = expand_rowblocks(f);
    if (json_out(o)) {
        json j = to_json(ex);
        j["form"] = to_json(f);
        emit(j, "cvf.expand/1");
        return 0;
    }
    if (ex.terms.empty()) std::cout << "0\n";
    for (const RowBlock& rb : ex.terms) std::cout << to_string(rb) << "\n";
    return 0;
}

int cmd_type(const Options& o) {
    const CvForm f = form_arg(o.form);
    const TypeVector t = type_of(f);
    if (json_out(o)) {
        emit({{"form", to_json(f)}, {"type", t.entries}, {"standard_permutation", standard_permutation(f)}},
             "cvf.type/1");
        return 0;
    }
    std::cout << to_string(t) << "\n";
    return 0;
}

int cmd_class(const Options& o) {
    const CvForm f = form_arg(o.form);
    if (!is_regular(f)) throw UsageError("class is defined for regular forms only: " + to_string(f));
    const TypeVector c = class_of(f);
    if (json_out(o)) {
        emit({{"form", to_json(f)}, {"class", c.entries}}, "cvf.class/1");
        return 0;
    }
    std::cout << to_string(c) << "\n";
    return 0;
}

// --- ribbon / tableaux ---------------------------------------------------

int cmd_ribbon(const Options& o) {
    const TypeVector c = class_arg(o.form);
    const Ribbon r = class_to_ribbon(c);
    const SkewPartition sp = to_skew_partition(r);
    const Integer syt = count_syt(sp);
    if (json_out(o)) {
        emit({{"class", c.entries},
              {"form", to_json(ribbon_form(r))},
              {"index", ribbon_index(r)},
              {"height", r.height()},
              {"skew", {{"lambda", sp.lambda}, {"mu", sp.mu}}},
              {"syt", int_json(syt)},
              {"ribbon", to_json(r)}},
             "cvf.ribbon/1");
        return 0;
    }
    std::cout << "class " << to_string(c) << "\n"
              << "form " << to_string(ribbon_form(r)) << "\n"
              << "index " << ribbon_index(r) << "\n"
              << "height " << r.height() << "\n"
              << "skew " << to_string(sp) << "\n"
              << "tableaux " << syt << "\n"
              << render(r);
    return 0;
}

int cmd_tableaux(const Options& o) {
    const TypeVector c = class_arg(o.form);
    const Ribbon r = class_to_ribbon(c);
    if (o.count_only) {
        const Integer syt = count_syt(to_skew_partition(r));
        if (json_out(o))
            emit({{"class", c.entries}, {"count", int_json(syt)}}, "cvf.tableaux/1");
        else
            std::cout << syt << "\n";
        return 0;
    }
    require_n(r.size(), kMaxBasisN, "tableau listing");
    const auto tabs = enumerate_tableaux(r);
    if (json_out(o)) {
        json list = json::array();
        for (const auto& t : tabs) {
            json e = to_json(t);
            e["form"] = tableau_to_cvform(t).entries();
            e["type"] = tableau_to_type(t).entries;
            list.push_back(e);
        }
        emit({{"class", c.entries}, {"count", tabs.size()}, {"tableaux", list}}, "cvf.tableaux/1");
        return 0;
    }
    std::cout << "class " << to_string(c) << " tableaux " << tabs.size() << "\n";
    for (const auto& t : tabs) {
        std::cout << "\n" << render(t) << "form " << to_string(tableau_to_cvform(t)) << " type "
                  << to_string(tableau_to_type(t)) << "\n";
    }
    return 0;
}

// --- basis / count -------------------------------------------------------

Permutation order_arg(const std::string& text, int n) {
    if (text.empty()) return backward_reading(n);
    Permutation p = parse_int_list(text);
    if (static_cast<int>(p.size()) != n || !is_permutation(p))
        throw UsageError("--order must be a permutation of 1.." + std::to_string(n));
    return p;
}

void check_degree(int n, const std::optional<int>& d) {
    if (d && (*d < 0 || *d > n * (n - 1) / 2))
        throw UsageError("degree " + std::to_string(*d) + " outside 0.." + std::to_string(n * (n - 1) / 2));
}

int cmd_basis(const Options& o) {
    require_n(o.n, o.count_only ? kMaxCountN : kMaxBasisN, "basis");
    check_degree(o.n, o.degree);
    const Permutation order = order_arg(o.order, o.n);

    if (o.count_only) {
        const std::vector<Ribbon> ribbons = o.degree ? ribbons_of_degree(o.n, *o.degree) : enumerate_ribbons(o.n);
        Integer total = 0;
        json classes = json::array();
        std::ostringstream lines;
        for (const Ribbon& r : ribbons) {
            const SkewPartition sp = to_skew_partition(r);
            const Integer c = count_syt(sp);
            total += c;
            classes.push_back({{"class", ribbon_to_class(r).entries}, {"skew", to_string(sp)}, {"count", int_json(c)}});
            lines << to_string(ribbon_to_class(r)) << "  " << to_string(sp) << "  " << c << "\n";
        }
        if (json_out(o)) {
            json j{{"N", o.n}, {"count", int_json(total)}, {"classes", classes}};
            j["d"] = o.degree ? json(*o.degree) : json(nullptr);
            emit(j, "cvf.basis-count/1");
        } else {
            std::cout << "N=" << o.n << " d=" << (o.degree ? std::to_string(*o.degree) : "all") << " forms=" << total
                      << "\n"
                      << lines.str();
        }
        return 0;
    }

    const Basis b = generate_basis(o.n, o.degree, order, o.jobs);
    const bool backward = order == backward_reading(o.n);
    if (json_out(o)) {
        emit(to_json(b), "cvf.basis/1");
        return 0;
    }
    std::cout << "N=" << o.n << " d=" << (o.degree ? std::to_string(*o.degree) : "all")
              << " order=" << to_string(order) << " forms=" << b.elements.size() << "\n";
    for (const auto& e : b.elements) {
        std::cout << to_string(e.form);
        if (backward) std::cout << "  type " << to_string(type_of(e.form));
        std::cout << "  class " << to_string(ribbon_to_class(e.tableau.ribbon)) << "  degree " << degree(e.form)
                  << "  filling " << to_string(e.tableau.filling) << "\n";
    }
    return 0;
}

int cmd_count(const Options& o) {
    require_n(o.n, kMaxCountN, "counting");
    const bool at = !o.at.empty();
    const int ad = at ? parse_power(o.at) : 0;
    const int top = o.n * (o.n - 1) / 2;
    if (ad < 0 || ad > top) throw UsageError("power outside 0.." + std::to_string(top));

    if (o.what == "mahonian") {
        const CountSeries t = q_factorial(o.n);
        if (json_out(o)) {
            json j{{"N", o.n}, {"what", o.what}, {"coefficients", series_json(t)}};
            if (at) j["at"] = {{"q", ad}, {"value", int_json(t.at(ad))}};
            emit(j, "cvf.count/1");
        } else {
            std::cout << (at ? t.at(ad).get_str() : join(t.coefficients)) << "\n";
        }
        return 0;
    }
    if (o.what == "ribbons") {
        const BivariateSeries gf = ribbon_generating_function(o.n);
        Integer total = 0;
        std::vector<Integer> by_degree;
        for (const auto& row : gf.coefficients) {
            Integer s = 0;
            for (const Integer& c : row) s += c;
            by_degree.push_back(s);
            total += s;
        }
        if (json_out(o)) {
            json j{{"N", o.n}, {"what", o.what}, {"count", int_json(total)}, {"by_degree", series_json({by_degree})}};
            if (at) j["at"] = {{"q", ad}, {"value", int_json(by_degree[ad])}};
            emit(j, "cvf.count/1");
        } else {
            std::cout << (at ? by_degree[ad] : total) << "\n";
        }
        return 0;
    }
    if (o.what == "gf") {
        const BivariateSeries gf = ribbon_generating_function(o.n);
        if (json_out(o)) {
            json rows = json::array();
            for (int d = 0; d <= top; ++d) rows.push_back({{"q", d}, {"t", series_json(gf.at_q(d))}, {"text", series_in_t(gf.at_q(d))}});
            json j{{"N", o.n}, {"what", o.what}, {"coefficients", rows}};
            if (at) j["at"] = {{"q", ad}, {"text", series_in_t(gf.at_q(ad))}};
            emit(j, "cvf.count/1");
        } else if (at) {
            std::cout << series_in_t(gf.at_q(ad)) << "\n";
        } else {
            for (int d = top; d >= 0; --d) std::cout << "q^" << d << ": " << series_in_t(gf.at_q(d)) << "\n";
        }
        return 0;
    }
    throw UsageError("unknown count: " + o.what);
}

// --- verify --------------------------------------------------------------

struct Report {
    bool passed = true;
    long checked = 0;
    long good = 0;
    std::vector<std::string> failures;
    std::vector<std::string> lines;
    json details = json::object();

    void record(bool ok, const std::string& what) {
        ++checked;
        if (ok) ++good;
        else {
            passed = false;
            if (failures.size() < 20) failures.push_back(what);
        }
    }
};

Report verify_harmonic(int n) {
    require_n(n, kMaxHarmonicN, "harmonic verification");
    Report rep;
    for (const auto& e : generate_basis(n).elements) {
        const HarmonicityReport h = verify_harmonicity(e.form, n - 1);
        rep.record(h.passed, to_string(e.form) + " k=" + std::to_string(h.failing_k) + " " + h.failing_check);
    }
    rep.lines.push_back(std::to_string(rep.good) + "/" + std::to_string(rep.checked) +
                        " standard forms annihilated for k=1.." + std::to_string(n - 1));
    return rep;
}

Report verify_rank(int n, bool leading, int jobs) {
    require_n(n, leading ? kMaxLeadingRankN : kMaxRankN, "rank verification");
    const IndependenceMode mode = leading ? IndependenceMode::leading_rowblocks : IndependenceMode::full;
    Report rep;
    const Basis b = generate_basis(n);
    const IndependenceReport full = verify_independence(b, mode, jobs);
    rep.record(full.independent, "full basis rank " + std::to_string(full.rank));
    rep.lines.push_back("rank " + std::to_string(full.rank) + " of " + std::to_string(full.size));
    json slices = json::array();
    const CountSeries t = q_factorial(n);
    for (int d = 0; d <= n * (n - 1) / 2; ++d) {
        const IndependenceReport s = verify_independence(generate_basis(n, d), mode, jobs);
        const bool ok = s.independent && t.at(d) == s.rank;
        rep.record(ok, "degree " + std::to_string(d) + " rank " + std::to_string(s.rank));
        rep.lines.push_back("d=" + std::to_string(d) + " rank " + std::to_string(s.rank) + " of " +
                            t.at(d).get_str());
        slices.push_back({{"d", d}, {"rank", s.rank}, {"expected", int_json(t.at(d))}});
    }
    rep.details = {{"rank", full.rank}, {"size", full.size}, {"mode", leading ? "leading" : "full"}, {"slices", slices}};
    return rep;
}

Report verify_oracle(int n, int samples, std::uint64_t seed) {
    require_n(n, kMaxOracleN, "oracle verification");
    Report rep;
    std::vector<CvForm> forms;
    if (n <= 4) {
        std::vector<int> e(n, 0);
        while (true) {
            forms.emplace_back(e);
            int i = n - 1;
            while (i >= 0 && e[i] == n - 1) e[i--] = 0;
            if (i < 0) break;
            ++e[i];
        }
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> entry(0, n - 1);
        for (int s = 0; s < samples; ++s) {
            std::vector<int> e(n);
            for (int& x : e) x = entry(rng);
            forms.emplace_back(e);
        }
    }
    for (const CvForm& f : forms) rep.record(evaluate(f) == naive_oracle(f), to_string(f));
    rep.lines.push_back(std::to_string(rep.good) + "/" + std::to_string(rep.checked) +
                        " forms match naive determinant" + (n <= 4 ? "" : " (seed " + std::to_string(seed) + ")"));
    return rep;
}

Report verify_flip(int n) {
    require_n(n, kMaxFlipN, "flip verification");
    Report rep;
    const int top = n * (n - 1) / 2;
    const Basis b = generate_basis(n);
    std::set<CvForm> forms;
    for (const auto& e : b.elements) forms.insert(e.form);
    for (const auto& e : b.elements) {
        const SkewTableau ft = flip(e.tableau);
        const CvForm g = tableau_to_cvform(ft);
        const bool ok = is_standard(ft) && flip(ft) == e.tableau && degree(g) == top - degree(e.form) &&
                        forms.count(g) == 1;
        rep.record(ok, to_string(e.form));
    }
    rep.lines.push_back(std::to_string(rep.good) + "/" + std::to_string(rep.checked) +
                        " tableaux flip to basis forms of complementary degree");
    return rep;
}

Report verify_chars(int n) {
    require_n(n, kMaxCharsN, "characteristic monomial verification");
    Report rep;
    const Basis b = generate_basis(n);
    rep.record(verify_characteristic_uniqueness(b), "duplicate characteristic monomial");
    rep.lines.push_back(std::string(rep.passed ? "distinct" : "repeated") + " characteristic monomials across " +
                        std::to_string(b.elements.size()) + " forms");
    return rep;
}

Report verify_readings(int n, int jobs) {
    require_n(n, kMaxReadingsN, "reading-order verification");
    Report rep;
    const BasisComparison c = compare_bases(n, all_permutations(n), jobs);
    json bases = json::array();
    for (const auto& e : c.bases) {
        rep.record(e.independent && e.size == e.rank, "order " + to_string(e.order));
        bases.push_back({{"order", e.order}, {"size", e.size}, {"rank", e.rank}});
    }
    rep.lines.push_back(std::to_string(rep.good) + "/" + std::to_string(rep.checked) + " reading orders give full-rank bases");
    rep.lines.push_back("distinct bases " + std::to_string(c.distinct_bases) + ", pairwise overlap " +
                        std::to_string(c.min_overlap) + ".." + std::to_string(c.max_overlap));
    rep.details = {{"bases", bases},
                   {"distinct_bases", c.distinct_bases},
                   {"min_overlap", c.min_overlap},
                   {"max_overlap", c.max_overlap}};
    return rep;
}

int cmd_verify(const Options& o) {
    Report rep;
    if (o.suite == "harmonic") rep = verify_harmonic(o.n);
    else if (o.suite == "rank") rep = verify_rank(o.n, o.leading, o.jobs);
    else if (o.suite == "oracle") rep = verify_oracle(o.n, o.samples, o.seed);
    else if (o.suite == "flip") rep = verify_flip(o.n);
    else if (o.suite == "chars") rep = verify_chars(o.n);
    else if (o.suite == "readings") rep = verify_readings(o.n, o.jobs);
    else throw UsageError("unknown suite: " + o.suite);

    if (json_out(o)) {
        emit({{"N", o.n},
              {"suite", o.suite},
              {"passed", rep.passed},
              {"checked", rep.checked},
              {"good", rep.good},
              {"failures", rep.failures},
              {"summary", rep.lines},
              {"details", rep.details}},
             "cvf.verify/1");
    } else {
        std::cout << o.suite << " N=" << o.n << "\n";
        for (const auto& l : rep.lines) std::cout << "  " << l << "\n";
        for (const auto& f : rep.failures) std::cout << "  failed: " << f << "\n";
        std::cout << (rep.passed ? "PASS" : "FAIL") << "\n";
    }
    return rep.passed ? 0 : kExitFail;
}

// --- flip ----------------------------------------------------------------

SkewTableau tableau_input(const std::string& input) {
    std::string text = input;
    if (!text.empty() && text.front() != '{' && text.front() != '[' && text.front() != '(' &&
        !std::isdigit(static_cast<unsigned char>(text.front()))) {
        std::ifstream in(input);
        if (!in) throw UsageError("cannot read " + input);
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::exception& e) {
            throw UsageError(std::string("bad JSON: ") + e.what());
        }
        if (j.contains("tableau")) j = j["tableau"];
        return tableau_from_json(j);
    }
    const CvForm f = form_arg(text);
    auto t = tableau_of_standard_form(f);
    if (!t) throw UsageError("not a standard form: " + to_string(f));
    return *t;
}

int cmd_flip(const Options& o) {
    const SkewTableau t = tableau_input(o.input);
    require_n(t.ribbon.size(), kMaxCountN, "flip");
    const SkewTableau ft = flip(t);
    const CvForm f = tableau_to_cvform(t), g = tableau_to_cvform(ft);
    if (json_out(o)) {
        emit({{"input", {{"tableau", to_json(t)}, {"form", f.entries()}, {"degree", degree(f)}}},
              {"flipped", {{"tableau", to_json(ft)}, {"form", g.entries()}, {"degree", degree(g)}}}},
             "cvf.flip/1");
        return 0;
    }
    std::cout << render(t) << "form " << to_string(f) << " degree " << degree(f) << "\n\n"
              << render(ft) << "form " << to_string(g) << " degree " << degree(g) << "\n\n"
              << "degrees " << degree(f) << " + " << degree(g) << " = " << degree(f) + degree(g) << "\n";
    return 0;
}

// --- bench ---------------------------------------------------------------

struct BenchRow {
    std::string form;
    std::string strategy;
    Integer terms;
    Integer leibniz;
    long micros;
};

template <class F>
long time_micros(F&& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    const auto stop = std::chrono::steady_clock::now();
    return static_cast<long>(std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count());
}

int cmd_bench(const Options& o) {
    if (o.strategy != "naive" && o.strategy != "blocks" && o.strategy != "both")
        throw UsageError("strategy must be naive, blocks or both");
    std::vector<CvForm> forms;
    for (const auto& s : o.forms) forms.push_back(form_arg(s));
    if (o.random_n > 0) {
        require_n(o.random_n, kMaxBenchN, "bench");
        std::vector<CvForm> pool;
        for (const auto& e : generate_basis(o.random_n).elements)
            if (degree(e.form) > 0) pool.push_back(e.form);
        std::mt19937_64 rng(o.seed);
        std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
        for (int s = 0; s < o.samples; ++s) forms.push_back(pool[pick(rng)]);
    }
    if (forms.empty()) forms = {CvForm({2, 2, 4, 4, 5, 5}), CvForm({0, 1, 2, 3, 4, 5})};
    for (const CvForm& f : forms) require_n(f.size(), kMaxBenchN, "bench");

    std::vector<BenchRow> rows;
    int fewer = 0;
    for (const CvForm& f : forms) {
        const Integer leibniz = factorial(f.size());
        Integer naive_terms = 0, block_terms = 0;
        if (o.strategy != "blocks") {
            naive_terms = nonzero_leibniz_terms(f);
            const long us = time_micros([&] { naive_oracle(f); });
            rows.push_back({to_string(f), "naive", naive_terms, leibniz, us});
        }
        if (o.strategy != "naive") {
            Expansion ex;
            const long us = time_micros([&] {
                ex = expand_rowblocks(f);
                evaluate(f);
            });
            block_terms = static_cast<long>(ex.terms.size());
            rows.push_back({to_string(f), "blocks", block_terms, leibniz, us});
        }
        if (o.strategy == "both") fewer += block_terms < naive_terms;
    }

    if (json_out(o)) {
        json list = json::array();
        for (const auto& r : rows)
            list.push_back({{"form", r.form},
                            {"strategy", r.strategy},
                            {"terms", int_json(r.terms)},
                            {"leibniz_terms", int_json(r.leibniz)},
                            {"micros", r.micros}});
        json j{{"rows", list}};
        if (o.strategy == "both") j["blocks_fewer"] = {{"count", fewer}, {"of", forms.size()}};
        emit(j, "cvf.bench/1");
        return 0;
    }
    std::cout << "form,strategy,terms,leibniz_terms,micros\n";
    for (const auto& r : rows)
        std::cout << '"' << r.form << "\"," << r.strategy << ',' << r.terms << ',' << r.leibniz << ',' << r.micros
                  << "\n";
    if (o.strategy == "both")
        std::cout << "# blocks fewer terms in " << fewer << "/" << forms.size() << " forms\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact evaluation of confluent Vandermonde forms, ribbon tableaux and standard-form bases"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1, 256));
    app.add_option("--seed", o.seed, "Seed for randomized modes");
    app.fallthrough();

    auto* eval = app.add_subcommand("eval", "Evaluate a cv-form to its canonical polynomial");
    eval->add_option("form", o.form, "Form literal, e.g. \"[2 2 3 3]\" or 2,2,3,3")->required();
    eval->add_flag("--trace", o.trace, "Print the signed row-blocks first");

    auto* expand = app.add_subcommand("expand", "List the signed row-blocks of a cv-form");
    expand->add_option("form", o.form)->required();

    auto* type = app.add_subcommand("type", "Type vector of a cv-form");
    type->add_option("form", o.form)->required();

    auto* klass = app.add_subcommand("class", "Class of a regular cv-form");
    klass->add_option("form", o.form)->required();

    auto* ribbon = app.add_subcommand("ribbon", "Ribbon diagram of a class");
    ribbon->add_option("class", o.form, "Class vector, e.g. \"(4 4 3 2 1 1 1 0)\"")->required();

    auto* tableaux = app.add_subcommand("tableaux", "Standard tableaux of a ribbon");
    tableaux->add_option("class", o.form)->required();
    tableaux->add_flag("--count-only", o.count_only);

    auto* basis = app.add_subcommand("basis", "Standard-form basis");
    basis->add_option("N", o.n)->required();
    basis->add_option("--degree", o.degree);
    basis->add_option("--order", o.order, "Reading order, a permutation of 1..N (default backward)");
    basis->add_flag("--count-only", o.count_only, "Print counts per class only");

    auto* count = app.add_subcommand("count", "Counting series");
    count->add_option("N", o.n)->required();
    count->add_option("what", o.what)->required()->check(CLI::IsMember({"mahonian", "ribbons", "gf"}));
    count->add_option("--at", o.at, "Coefficient of q^d only");

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("N", o.n)->required();
    verify->add_option("suite", o.suite)
        ->required()
        ->check(CLI::IsMember({"harmonic", "rank", "oracle", "flip", "chars", "readings"}));
    verify->add_option("--samples", o.samples, "Random forms for the oracle suite at N > 4")->check(CLI::Range(1, 100000));
    verify->add_flag("--leading", o.leading, "Rank of leading row-blocks only");

    auto* flipc = app.add_subcommand("flip", "Flip a standard tableau or standard form");
    flipc->add_option("input", o.input, "Form literal, tableau JSON, or a JSON file")->required();

    auto* bench = app.add_subcommand("bench", "Term counts and timings, naive versus row-blocks");
    bench->add_option("forms", o.forms);
    bench->add_option("--random", o.random_n, "Sample random standard forms of positive degree at this N");
    bench->add_option("--samples", o.samples)->check(CLI::Range(1, 100000));
    bench->add_option("--strategy", o.strategy);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*eval) return cmd_eval(o);
        if (*expand) return cmd_expand(o);
        if (*type) return cmd_type(o);
        if (*klass) return cmd_class(o);
        if (*ribbon) return cmd_ribbon(o);
        if (*tableaux) return cmd_tableaux(o);
        if (*basis) return cmd_basis(o);
        if (*count) return cmd_count(o);
        if (*verify) return cmd_verify(o);
        if (*flipc) return cmd_flip(o);
        if (*bench) return cmd_bench(o);
    } catch (const UsageError& e) {
        std::cerr << "cvf: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "cvf: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "cvf: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
