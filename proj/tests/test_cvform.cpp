#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cvforms/cvform.hpp"
#include "cvforms/laplace.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace cvf;
using Entries = std::vector<int>;

TEST_CASE("construction and parsing") {
    CHECK_THROWS_AS(CvForm(Entries{}), std::invalid_argument);
    CHECK_THROWS_AS(CvForm(Entries{0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(CvForm(Entries{-1, 1}), std::invalid_argument);
    CHECK(parse_form("[2 2 3 3]") == CvForm(Entries{2, 2, 3, 3}));
    CHECK(parse_form("2,2,3,3") == CvForm(Entries{2, 2, 3, 3}));
    CHECK(parse_form("  [ 2, 2 3 ,3 ] ") == CvForm(Entries{2, 2, 3, 3}));
    CHECK(parse_form("(1 0)") == CvForm(Entries{1, 0}));
    CHECK_THROWS_AS(parse_form("[2 2 3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_form("[2 x 3]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_form("[]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_form("[2 2] 3"), std::invalid_argument);
    CHECK(to_string(CvForm(Entries{5, 7, 7, 5, 4, 5, 6, 5})) == "[5 7 7 5 4 5 6 5]");
}

TEST_CASE("degree") {
    CHECK(degree(CvForm(Entries{0, 1, 2, 3})) == 0);
    CHECK(degree(CvForm(Entries{3, 3, 3, 3})) == 6);
    CHECK(degree(CvForm(Entries{2, 2, 4, 4, 5, 5})) == 7);
}

TEST_CASE("remove_zeros") {
    const ZeroRemoval a = remove_zeros(CvForm(Entries{0, 1, 3, 3}));
    REQUIRE_FALSE(a.is_scalar());
    CHECK(a.sign == 1);
    CHECK(*a.form == CvForm(Entries{2, 3, 1, 1}));
    CHECK(a.steps == 2);

    const ZeroRemoval b = remove_zeros(CvForm(Entries{0, 0, 3, 3}));
    CHECK(b.is_scalar());
    CHECK(b.sign == 0);

    const ZeroRemoval c = remove_zeros(CvForm(Entries{0, 1, 2, 3}));
    CHECK(c.is_scalar());
    CHECK(c.sign == 1);

    const ZeroRemoval d = remove_zeros(CvForm(Entries{1, 0, 2, 3}));
    CHECK(d.is_scalar());
    CHECK(d.sign == -1);

    const ZeroRemoval e = remove_zeros(CvForm(Entries{2, 2, 3, 3}));
    CHECK(e.sign == 1);
    CHECK(e.steps == 0);
    CHECK(*e.form == CvForm(Entries{2, 2, 3, 3}));
}

TEST_CASE("remove_zeros terminates and preserves the value") {
    for (int n = 1; n <= 6; ++n) {
        for (const CvForm& f : testing::all_forms(n)) {
            const ZeroRemoval z = remove_zeros(f);
            CHECK(z.steps <= n);
            if (!z.is_scalar()) {
                const auto& e = z.form->entries();
                CHECK(std::find(e.begin(), e.end(), 0) == e.end());
            }
            if (n <= 4) {
                const Polynomial direct = naive_oracle(f);
                const Polynomial reduced = z.is_scalar()
                                               ? Polynomial::constant(n, z.sign)
                                               : naive_oracle(*z.form) * Rational(z.sign);
                CHECK(direct == reduced);
            }
        }
    }
}

TEST_CASE("standard permutation") {
    CHECK(standard_permutation(CvForm(Entries{4, 5, 5, 3, 3, 2})) == Permutation{4, 5, 6, 2, 3, 1});
    CHECK(standard_permutation(CvForm(Entries{0, 1, 2, 3})) == Permutation{1, 2, 3, 4});
    CHECK(standard_permutation(CvForm(Entries{3, 3, 3, 3})) == Permutation{1, 2, 3, 4});
}

TEST_CASE("type") {
    CHECK(type_of(CvForm(Entries{4, 5, 5, 3, 3, 2})).entries == Entries{1, 1, 0, 2, 1, 2});
    CHECK(type_of(CvForm(Entries{2, 2, 3, 3})).entries == Entries{2, 1, 1, 0});
    CHECK(type_of(CvForm(Entries{0, 1, 2, 3, 4})).entries == Entries{0, 0, 0, 0, 0});
    // the six forms of the second-order syzygy
    const std::vector<std::pair<Entries, Entries>> table{
        {{2, 2, 3, 3}, {2, 1, 1, 0}}, {{2, 3, 2, 3}, {2, 1, 1, 0}}, {{2, 3, 3, 2}, {2, 1, 0, 1}},
        {{3, 2, 2, 3}, {1, 2, 1, 0}}, {{3, 2, 3, 2}, {1, 2, 0, 1}}, {{3, 3, 2, 2}, {1, 0, 2, 1}}};
    for (const auto& [form, type] : table) CHECK(type_of(CvForm(form)).entries == type);
}

TEST_CASE("class") {
    CHECK(class_of(CvForm(Entries{4, 5, 5, 3, 3, 2})).entries == Entries{2, 2, 1, 1, 1, 0});
    CHECK(class_of(CvForm(Entries{4, 5, 5, 5, 5, 6, 7, 7})).entries == Entries{4, 4, 3, 2, 1, 1, 1, 0});
    CHECK(class_of(CvForm(Entries{0, 1, 2, 3})).entries == Entries{0, 0, 0, 0});
    CHECK(class_of(CvForm(Entries{6, 3, 7, 5, 4, 3, 6, 6})).entries == Entries{3, 2, 2, 2, 2, 1, 0, 0});
    CHECK(class_of(CvForm(Entries{0, 1, 2, 3})).is_class);
    CHECK_THROWS_AS(class_of(CvForm(Entries{2, 2, 4, 4, 5, 5})), std::invalid_argument);
}

TEST_CASE("regularity") {
    CHECK_FALSE(is_regular(CvForm(Entries{2, 2, 4, 4, 5, 5})));
    CHECK(is_regular(CvForm(Entries{2, 3, 3, 4, 5, 5})));
    CHECK_FALSE(is_regular(CvForm(Entries{1, 3, 3, 3})));
    CHECK(type_of(CvForm(Entries{2, 3, 3, 4, 5, 5})).entries == Entries{2, 2, 1, 1, 1, 0});
}

TEST_CASE("sort_entries") {
    const SortedForm a = sort_entries(CvForm(Entries{4, 5, 3, 5, 3, 2}));
    CHECK(a.sorted == CvForm(Entries{2, 3, 3, 4, 5, 5}));
    CHECK(a.perm == Permutation{6, 3, 5, 1, 2, 4});
    CHECK(a.sign == permutation_sign(Permutation{6, 3, 5, 1, 2, 4}));
    CHECK(a.sign == 1);  // 10 inversions

    const SortedForm b = sort_entries(CvForm(Entries{0, 1, 2, 3}));
    CHECK(b.perm == identity_permutation(4));
    CHECK(b.sign == 1);

    const SortedForm c = sort_entries(CvForm(Entries{3, 2, 2, 1}));
    CHECK(c.sorted == CvForm(Entries{1, 2, 2, 3}));
    CHECK(c.perm == Permutation{4, 2, 3, 1});
    CHECK(testing::inversions(c.perm) == 5);
    CHECK(c.sign == -1);
}

TEST_CASE("type entries of nonzero forms are non-negative and sum to the degree") {
    for (int n = 1; n <= 5; ++n) {
        for (const CvForm& f : testing::all_forms(n)) {
            if (naive_oracle(f).is_zero()) continue;
            const auto k = type_of(f).entries;
            CHECK(std::all_of(k.begin(), k.end(), [](int x) { return x >= 0; }));
            CHECK(std::accumulate(k.begin(), k.end(), 0) == degree(f));
        }
    }
}

TEST_CASE("class is invariant under entry permutations") {
    std::mt19937 rng(17);
    for (int n = 2; n <= 6; ++n) {
        for (const CvForm& f : testing::all_forms(n)) {
            if (!is_regular(f)) continue;
            std::vector<int> e = f.entries();
            std::shuffle(e.begin(), e.end(), rng);
            CHECK(class_of(CvForm(e)) == class_of(f));
        }
    }
}

TEST_CASE("permutation helpers") {
    CHECK(permutation_sign({2, 1}) == -1);
    CHECK(permutation_sign({1, 2, 3}) == 1);
    CHECK(is_permutation({3, 1, 2}));
    CHECK_FALSE(is_permutation({3, 3, 1}));
    CHECK_FALSE(is_permutation({0, 1}));
}
