#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cvforms/laplace.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace cvf;
using Entries = std::vector<int>;

namespace {

std::vector<std::string> texts(const Expansion& ex) {
    std::vector<std::string> out;
    for (const auto& rb : ex.terms) out.push_back(to_string(rb));
    return out;
}

Polynomial t(int n, int i) { return Polynomial::variable(n, i - 1); }

}  // namespace

TEST_CASE("shuffles") {
    const auto s22 = shuffles({2, 2});
    REQUIRE(s22.size() == 6);
    const std::vector<std::vector<std::vector<int>>> parts{
        {{1, 2}, {3, 4}}, {{1, 3}, {2, 4}}, {{1, 4}, {2, 3}},
        {{2, 3}, {1, 4}}, {{2, 4}, {1, 3}}, {{3, 4}, {1, 2}}};
    const std::vector<int> signs{1, -1, 1, 1, -1, 1};
    for (std::size_t i = 0; i < 6; ++i) {
        CHECK(s22[i].parts == parts[i]);
        CHECK(s22[i].sign == signs[i]);
    }

    const auto s13 = shuffles({1, 3});
    REQUIRE(s13.size() == 4);
    CHECK(s13[1].parts == std::vector<std::vector<int>>{{2}, {1, 3, 4}});
    CHECK(std::vector<int>{s13[0].sign, s13[1].sign, s13[2].sign, s13[3].sign} ==
          std::vector<int>{1, -1, 1, -1});

    const auto s4 = shuffles({4});
    REQUIRE(s4.size() == 1);
    CHECK(s4[0].sign == 1);

    CHECK(shuffles({1, 2, 3}).size() == 60);  // 6!/(1!2!3!)
    CHECK_THROWS_AS(shuffles({2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(shuffles({}), std::invalid_argument);
}

TEST_CASE("decoding tables") {
    const DecodingTable a = build_decoding_table(CvForm(Entries{2, 2, 4, 4, 5, 5}));
    CHECK(a.rows() == std::vector<std::vector<int>>{{2, 1, 0}, {4, 3, 2, 1, 0}, {5, 4, 3, 2, 1, 0}});
    CHECK(a.header == std::vector<std::vector<int>>{{0, 1}, {2, 3}, {4, 5}});

    const DecodingTable b = build_decoding_table(CvForm(Entries{1, 3, 3, 3}));
    CHECK(b.rows() == std::vector<std::vector<int>>{{1, 0}, {3, 2, 1, 0}});
    CHECK(b.header == std::vector<std::vector<int>>{{0}, {1, 2, 3}});

    const DecodingTable c = build_decoding_table(CvForm(Entries{2, 2, 3, 3}));
    CHECK(c.rows() == std::vector<std::vector<int>>{{2, 1, 0}, {3, 2, 1, 0}});
    CHECK(c.header == std::vector<std::vector<int>>{{0, 1}, {2, 3}});

    // relabelled columns of [4 5 3 5 3 2]: t6 | t3 t5 | t1 | t2 t4
    const DecodingTable d = build_decoding_table(CvForm(Entries{2, 3, 3, 4, 5, 5}), {5, 2, 4, 0, 1, 3});
    CHECK(d.header == std::vector<std::vector<int>>{{5}, {2, 4}, {0}, {1, 3}});

    CHECK_THROWS_AS(build_decoding_table(CvForm(Entries{0, 1, 3, 3})), std::invalid_argument);
    CHECK_THROWS_AS(build_decoding_table(CvForm(Entries{3, 3, 1, 2})), std::invalid_argument);
}

TEST_CASE("expansion of [2 2 4 4 5 5]") {
    const Expansion ex = expand_rowblocks(CvForm(Entries{2, 2, 4, 4, 5, 5}));
    CHECK(texts(ex) == std::vector<std::string>{"+|2 1|2 1|1 0|", "-|2 1|2 0|2 0|", "+|2 1|1 0|3 0|",
                                                "-|2 0|3 1|1 0|", "+|1 0|4 1|1 0|", "+|2 0|3 0|2 0|",
                                                "-|2 0|1 0|4 0|", "-|1 0|4 0|2 0|", "+|1 0|1 0|5 0|"});
    CHECK(ex.factor.vandermonde_blocks == std::vector<std::vector<int>>{{0, 1}, {2, 3}, {4, 5}});
    // the row shuffle behind |2 1|1 0|3 0|
    CHECK(ex.terms[2].rows == std::vector<std::vector<int>>{{1, 2}, {4, 5}, {3, 6}});
}

TEST_CASE("worked expansions") {
    CHECK(texts(expand_rowblocks(CvForm(Entries{1, 3, 3, 3}))) ==
          std::vector<std::string>{"+|1|2 1 0|", "-|0|3 1 0|"});
    CHECK(texts(expand_rowblocks(CvForm(Entries{2, 2, 3, 3}))) ==
          std::vector<std::string>{"+|2 1|1 0|", "-|2 0|2 0|", "+|1 0|3 0|"});
    const Expansion e3221 = expand_rowblocks(CvForm(Entries{3, 2, 2, 1}));
    CHECK(texts(e3221) == std::vector<std::string>{"-|1|1 0|0|", "+|0|2 0|0|"});
    CHECK(e3221.factor.vandermonde_blocks == std::vector<std::vector<int>>{{3}, {1, 2}, {0}});

    const Expansion zero = expand_rowblocks(CvForm(Entries{0, 0, 3, 3}));
    CHECK(zero.terms.empty());
    CHECK(zero.factor.vanishes);

    const Expansion one = expand_rowblocks(CvForm(Entries{0, 1, 2, 3}));
    CHECK(texts(one) == std::vector<std::string>{"+|0|0|0|0|"});
}

TEST_CASE("row-block values") {
    BlockFactorization two{2, {{0, 1}}, false};
    RowBlock b21{{{2, 1}}, {{0, 1}}, 1, {}};
    // s_[1,1] * (t1 - t2) / (2! 1!) = t1 t2 (t1 - t2) / 2
    CHECK(rowblock_value(b21, two) ==
          t(2, 1) * t(2, 2) * (t(2, 1) - t(2, 2)) * Rational(1, 2));
    RowBlock b10{{{1, 0}}, {{0, 1}}, 1, {}};
    CHECK(rowblock_value(b10, two) == t(2, 1) - t(2, 2));
    RowBlock b20{{{2, 0}}, {{0, 1}}, -1, {}};
    CHECK(canonical_text(rowblock_value(b20, two)) == "1/2*t1^2 - 1/2*t2^2");
    CHECK(schur_annotation(b21) == "s[1,1](t1,t2)/(2!1!) * D(t1,t2)");

    BlockFactorization three{3, {{0, 1}}, false};
    CHECK_THROWS_AS(rowblock_value(b21, three), std::invalid_argument);
}

TEST_CASE("evaluation examples") {
    CHECK(canonical_text(evaluate(CvForm(Entries{0, 1, 3, 3}))) == "t3 - t4");
    const int n = 4;
    const Polynomial expected = -t(n, 4) * (t(n, 2) - t(n, 3)) +
                                (t(n, 2) * t(n, 2) - t(n, 3) * t(n, 3)) * Rational(1, 2);
    CHECK(evaluate(CvForm(Entries{3, 2, 2, 1})) == expected);
    for (int m = 1; m <= 6; ++m)
        CHECK(evaluate(CvForm(Entries(m, m - 1))) == normalized_vandermonde(m));
    CHECK(evaluate(CvForm(Entries{0, 0, 3, 3})).is_zero());
    CHECK(evaluate(CvForm(Entries{1, 0, 2, 3})) == Polynomial::constant(4, -1));
}

TEST_CASE("naive oracle examples") {
    CHECK(naive_oracle(CvForm(Entries{0, 1, 2, 3})) == Polynomial::constant(4, 1));
    CHECK(naive_oracle(CvForm(Entries{1, 1})) == t(2, 1) - t(2, 2));
    CHECK(naive_oracle(CvForm(Entries{3, 3, 3, 3})) == normalized_vandermonde(4));
}

TEST_CASE("evaluate agrees with the determinant and the derivative route") {
    for (int n = 1; n <= 4; ++n) {
        for (const CvForm& f : testing::all_forms(n)) {
            const Polynomial v = evaluate(f);
            CHECK(v == naive_oracle(f));
            CHECK(v == testing::derivative_oracle(f));
            CHECK(v == testing::leibniz_oracle(f));
            CHECK(v == testing::unpruned_laplace(f));
        }
    }
    std::mt19937 rng(2024);
    for (int n : {5, 6}) {
        for (int i = 0; i < 30; ++i) {
            const CvForm f = testing::random_form(rng, n);
            CHECK(evaluate(f) == naive_oracle(f));
        }
    }
}

TEST_CASE("[2 2 4 4 5 5] has nine row-blocks") {
    CHECK(expand_rowblocks(CvForm(Entries{2, 2, 4, 4, 5, 5})).terms.size() == 9);
    CHECK(evaluate(CvForm(Entries{2, 2, 4, 4, 5, 5})) == naive_oracle(CvForm(Entries{2, 2, 4, 4, 5, 5})));
    CHECK(nonzero_leibniz_terms(CvForm(Entries{2, 2, 4, 4, 5, 5})) == 72);
    CHECK(nonzero_leibniz_terms(CvForm(Entries{0, 1, 2, 3})) == 1);
    CHECK(nonzero_leibniz_terms(CvForm(Entries{3, 3, 3, 3})) == 24);
}

TEST_CASE("row-block entries are powers of distinct variables") {
    for (int n = 2; n <= 5; ++n) {
        for (const CvForm& f : testing::all_forms(n)) {
            const Expansion ex = expand_rowblocks(f);
            for (const RowBlock& rb : ex.terms) {
                std::vector<int> powers;
                for (const auto& b : rb.blocks) powers.insert(powers.end(), b.begin(), b.end());
                std::sort(powers.begin(), powers.end());
                const Polynomial value = rowblock_value(rb, ex.factor);
                for (const auto& [e, c] : value.terms()) {
                    std::vector<int> got = e;
                    std::sort(got.begin(), got.end());
                    CHECK(got == powers);
                }
            }
        }
    }
}

TEST_CASE("row-block order is a strict total order") {
    std::mt19937 rng(99);
    std::vector<CvForm> forms = testing::all_forms(4);
    for (int i = 0; i < 150; ++i) forms.push_back(testing::random_form(rng, 5));
    for (int i = 0; i < 60; ++i) forms.push_back(testing::random_form(rng, 6));
    for (const CvForm& f : forms) {
        const auto terms = expand_rowblocks(f).terms;
        for (std::size_t i = 0; i < terms.size(); ++i) {
            CHECK(compare_rowblocks(terms[i], terms[i]) == std::strong_ordering::equal);
            for (std::size_t j = 0; j < terms.size(); ++j) {
                const auto ij = compare_rowblocks(terms[i], terms[j]);
                const auto ji = compare_rowblocks(terms[j], terms[i]);
                CHECK((ij > 0) == (ji < 0));
                CHECK((ij == 0) == (ji == 0));
                if (i != j) CHECK(ij != 0);
                // sorted descending
                if (i < j) CHECK(ij > 0);
                for (std::size_t k = 0; k < terms.size() && terms.size() <= 12; ++k) {
                    if (ij > 0 && compare_rowblocks(terms[j], terms[k]) > 0)
                        CHECK(compare_rowblocks(terms[i], terms[k]) > 0);
                }
            }
        }
    }
}

TEST_CASE("row-block comparison examples") {
    const auto terms = expand_rowblocks(CvForm(Entries{2, 2, 4, 4, 5, 5})).terms;
    CHECK(compare_rowblocks(terms[0], terms[1]) > 0);
    for (std::size_t i = 0; i + 1 < terms.size(); ++i) CHECK(compare_rowblocks(terms[8], terms[i]) < 0);
    CHECK(to_string(terms[8], false) == "|1 0|1 0|5 0|");
    const RowBlock other{{{1}, {2, 1, 0}}, {{0}, {1, 2, 3}}, 1, {}};
    CHECK_THROWS_AS(compare_rowblocks(terms[0], other), std::invalid_argument);
}

TEST_CASE("leading row-blocks") {
    CHECK(to_string(leading_rowblock(TypeVector{{3, 2, 2, 2, 2, 1, 0, 0}, true}), false) ==
          "|3 2|2|2|2 1 0|0|");
    CHECK(to_string(leading_rowblock(class_of(CvForm(Entries{6, 3, 7, 5, 4, 3, 6, 6}))), false) ==
          "|3 2|2|2|2 1 0|0|");
    CHECK(to_string(leading_rowblock(TypeVector{{2, 1, 1, 0}, true}), false) == "|2 1|1 0|");
    CHECK(to_string(leading_rowblock(TypeVector{{0, 0, 0, 0}, true}), false) == "|0|0|0|0|");
    CHECK_THROWS_AS(leading_rowblock(TypeVector{{2, 0, 0}, true}), std::invalid_argument);
    CHECK_THROWS_AS(leading_rowblock(TypeVector{{0, 1}, true}), std::invalid_argument);
}

TEST_CASE("the leading row-block is the largest term of every regular form") {
    for (int n = 1; n <= 6; ++n) {
        for (const CvForm& f : testing::all_forms(n)) {
            if (!is_regular(f)) continue;
            const auto terms = expand_rowblocks(f).terms;
            if (terms.empty()) continue;
            const RowBlock from_class = leading_rowblock(class_of(f));
            CHECK(terms.front().blocks == from_class.blocks);
            const RowBlock from_form = leading_rowblock(f);
            CHECK(terms.front().blocks == from_form.blocks);
            CHECK(terms.front().var_partition == from_form.var_partition);
        }
    }
}

TEST_CASE("characteristic monomials") {
    const RowBlock lead = leading_rowblock(CvForm(Entries{2, 3, 3, 4, 5, 5}));
    CHECK(characteristic_monomial(lead) == ExponentVector{2, 2, 1, 1, 1, 0});

    // leading term of the non-regular [2 2 4 4 5 5]; the explicit matrix diagonal
    // has powers n_i - i + 1
    const CvForm f(Entries{2, 2, 4, 4, 5, 5});
    const RowBlock first = expand_rowblocks(f).terms.front();
    CHECK(characteristic_monomial(first) == ExponentVector{2, 1, 2, 1, 1, 0});
    ExponentVector diagonal(6);
    const auto m = cvform_matrix(f);
    for (int i = 0; i < 6; ++i) {
        REQUIRE(m[i][i].size() == 1);
        diagonal[i] = m[i][i].terms().begin()->first[i];
    }
    CHECK(characteristic_monomial(first) == diagonal);

    const CvForm example(Entries{5, 7, 7, 5, 4, 5, 6, 5});
    CHECK(characteristic_monomial(leading_rowblock(example)) == ExponentVector{4, 1, 0, 3, 4, 2, 1, 1});
    CHECK(characteristic_monomial(leading_rowblock(CvForm(Entries{0, 1, 2, 3}))) == ExponentVector(4, 0));
}
