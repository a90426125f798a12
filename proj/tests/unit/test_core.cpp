#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "parikh/core.hpp"
#include "parikh/errors.hpp"

using namespace parikh;

namespace {

ParikhVector pv(std::vector<Count> c) { return ParikhVector(std::move(c)); }

const PropertyCheck* find_check(const PropertyReport& r, const std::string& label) {
    for (const auto& c : r.checks)
        if (c.label == label) return &c;
    return nullptr;
}

} // namespace

TEST_CASE("alphabetic map over an explicit alphabet") {
    auto av = alphabetic_map("baacab", "abc");
    CHECK(std::vector<Count>(av.counts().begin(), av.counts().end()) == std::vector<Count>{3, 2, 1});
    CHECK(av.total() == 6);
}

TEST_CASE("alphabetic map edge cases") {
    auto empty = alphabetic_map("", "ab");
    CHECK(empty.size() == 2);
    CHECK(empty.total() == 0);

    auto single = alphabetic_map("aaa");
    REQUIRE(single.alphabet().size() == 1);
    CHECK(single.alphabet()[0] == 'a');
    CHECK(single.counts()[0] == 3);

    auto first_occurrence = alphabetic_map("baacab");
    CHECK(std::string(first_occurrence.alphabet().begin(), first_occurrence.alphabet().end()) == "bac");
    CHECK(std::vector<Count>(first_occurrence.counts().begin(), first_occurrence.counts().end()) ==
          std::vector<Count>{2, 3, 1});

    CHECK_THROWS_AS(alphabetic_map("abd", "abc"), InvalidLetter);
    CHECK_THROWS_AS(AlphabeticVector({'a', 'a'}, {1, 2}), InvalidArgument);
}

TEST_CASE("alphabetic-basis map") {
    CHECK(alphabetic_basis_map(alphabetic_map("baacab", "abc"), Basis(4)) == pv({0, 1, 1, 1}));
    CHECK(alphabetic_basis_map(AlphabeticVector({'a', 'b', 'c'}, {0, 0, 0}), Basis(3)) == pv({3, 0, 0}));
    AlphabeticVector big({'a', 'b'}, {5, 1});
    CHECK(alphabetic_basis_map(big, Basis(4), MappingMode::IgnoreOutOfRange) == pv({0, 1, 0, 0}));
    try {
        alphabetic_basis_map(big, Basis(4));
        FAIL("expected OutOfRangeCount");
    } catch (const OutOfRangeCount& e) {
        CHECK(e.letter() == 'a');
        CHECK(e.count() == 5);
    }
}

TEST_CASE("basis map examples") {
    CHECK(basis_map(pv({0, 1, 1, 1})) == pv({1, 3, 0, 0}));
    CHECK(basis_map(pv({1, 2, 1, 0})) == pv({1, 2, 1, 0}));
    CHECK(basis_map(pv({4, 0, 0, 0}), MappingMode::IgnoreOutOfRange) == pv({3, 0, 0, 0}));
    try {
        basis_map(pv({4, 0, 0, 0}));
        FAIL("expected OutOfRangeComponent");
    } catch (const OutOfRangeComponent& e) {
        CHECK(e.index() == 0);
        CHECK(e.value() == 4);
    }
    CHECK_FALSE(try_basis_map(pv({0, 2})).has_value());
}

TEST_CASE("sums") {
    CHECK(plain_sum(pv({1, 2, 1, 0})) == 4);
    CHECK(plain_sum(pv({0, 0, 0, 0})) == 0);
    CHECK(plain_sum(pv({6, 2, 1, 0, 0, 0, 1, 0, 0, 0})) == 10);
    CHECK(weighted_sum(pv({1, 2, 1, 0})) == 4);
    CHECK(weighted_sum(pv({2, 1, 0, 1})) == 4);
    CHECK(weighted_sum(pv({5, 0, 0, 0, 0})) == 0);
}

TEST_CASE("basis map agrees with a direct histogram and is permutation invariant") {
    std::mt19937_64 rng(11);
    for (std::size_t n = 1; n <= 12; ++n) {
        std::uniform_int_distribution<Count> digit(0, n - 1);
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<Count> c(n);
            for (auto& x : c) x = digit(rng);
            const ParikhVector v(c);
            const ParikhVector image = basis_map(v);
            CHECK(oracle::components(image) == oracle::histogram(c));
            CHECK(plain_sum(image) == n);
            CHECK(weighted_sum(image) == plain_sum(v));
            std::shuffle(c.begin(), c.end(), rng);
            CHECK(basis_map(ParikhVector(c)) == image);
        }
    }
}

TEST_CASE("ignore mode drops out-of-range components") {
    std::mt19937_64 rng(5);
    for (std::size_t n = 2; n <= 9; ++n) {
        std::uniform_int_distribution<Count> value(0, 2 * n);
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<Count> c(n);
            for (auto& x : c) x = value(rng);
            const ParikhVector image = basis_map(ParikhVector(c), MappingMode::IgnoreOutOfRange);
            CHECK(oracle::components(image) == oracle::histogram(c));
            Count in_range_total = 0;
            for (auto x : c)
                if (x < n) in_range_total += x;
            CHECK(weighted_sum(image) == in_range_total);
        }
    }
}

TEST_CASE("stage property checks") {
    StageContext ctx{6, 3, 4};
    auto alpha = check_stage_properties(alphabetic_map("baacab", "abc"), ctx);
    CHECK(alpha.all_passed());
    CHECK(alpha.plain_sum == 6);

    auto steady = check_stage_properties(Stage::Steady, pv({1, 2, 1, 0}), ctx);
    CHECK(steady.all_passed());
    CHECK(find_check(steady, "(vi)") != nullptr);
    CHECK(find_check(steady, "(vii)") != nullptr);

    auto beta = check_stage_properties(Stage::AlphabeticBasis, pv({0, 1, 1, 1}), ctx);
    CHECK(beta.all_passed());
    CHECK(beta.plain_sum == 3);
    CHECK(beta.weighted_sum == 6);

    // (2,1,0,1) read as the first basis image of a three-letter word: plain
    // sum 4 = n holds, its weighted sum 4 is not the letter count 3.
    auto first = check_stage_properties(Stage::FirstBasis, pv({2, 1, 0, 1}), ctx);
    REQUIRE(find_check(first, "(iv)") != nullptr);
    REQUIRE(find_check(first, "(v)") != nullptr);
    CHECK(find_check(first, "(iv)")->passed);
    CHECK_FALSE(find_check(first, "(v)")->passed);
    const PropertyCheck* info = find_check(first, "(vii)");
    REQUIRE(info != nullptr);
    CHECK(info->informational);
    CHECK(info->passed);

    auto genuine_first = check_stage_properties(Stage::FirstBasis, pv({1, 3, 0, 0}), ctx);
    CHECK(genuine_first.all_passed());
}

TEST_CASE("vector text forms") {
    CHECK(parse_vector("1,2,1,0") == pv({1, 2, 1, 0}));
    CHECK(parse_vector("1210") == pv({1, 2, 1, 0}));
    CHECK(parse_vector("821000001000", 12) == pv({8, 2, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0}));
    CHECK(parse_vector("10,0,0,0,0,0,0,0,0,0,1", 11)[0] == 10);
    CHECK(parse_vector("1", 1) == pv({1}));
    CHECK_THROWS_AS(parse_vector("12a0"), ParseError);
    CHECK_THROWS_AS(parse_vector("1210", 5), ParseError);
    CHECK_THROWS_AS(parse_vector("1,,0"), ParseError);
    CHECK_THROWS_AS(parse_vector(""), ParseError);

    CHECK(format_vector(pv({1, 2, 1, 0})) == "1210");
    CHECK(format_vector(pv({10, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1})) == "10,0,0,0,0,0,0,0,0,0,1");
    CHECK(format_comma(pv({2, 0, 2, 0})) == "2,0,2,0");
    CHECK(parse_vector(format_vector(pv({6, 2, 1, 0, 0, 0, 1, 0, 0, 0}))) ==
          pv({6, 2, 1, 0, 0, 0, 1, 0, 0, 0}));
}

TEST_CASE("modes and ordering") {
    CHECK(parse_mode("strict") == MappingMode::Strict);
    CHECK(parse_mode("ignore") == MappingMode::IgnoreOutOfRange);
    CHECK_THROWS_AS(parse_mode("lenient"), ParseError);
    CHECK(pv({1, 2, 1, 0}) < pv({2, 0, 2, 0}));
    CHECK(pv({9, 9, 9}) < pv({0, 0, 0, 0}));
    CHECK_THROWS_AS(Basis(0), InvalidArgument);
    CHECK(pv({1, 2, 1, 0}).strict_valid());
    CHECK_FALSE(pv({4, 0, 0, 0}).strict_valid());
}
