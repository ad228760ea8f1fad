#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "penner/trace_paths.hpp"
#include "penner/twist_calculus.hpp"
#include "penner/verify.hpp"
#include "test_support.hpp"

using namespace penner;
using penner::testing::a3;
using penner::testing::letters;

namespace {

using Component = std::pair<std::string, ShiftExpr>;

std::vector<Component> multiset(const CocoreComplex& c, const PlumbingSpec& spec) {
    std::vector<Component> out;
    for (const auto& t : c.terms) out.emplace_back(spec.name(t.vertex), t.shift);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Component> expected(std::vector<std::pair<std::string, std::string>> raw) {
    std::vector<Component> out;
    for (auto& [v, s] : raw) out.emplace_back(v, parse_shift(s));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_SUITE("twist_calculus") {

TEST_CASE("staged complexes of the four-letter word on L_3") {
    auto spec = a3();
    auto v3 = spec.index_of("3");
    auto word = letters(spec, "3+ 2- 1+ 3+");
    std::vector<std::vector<Component>> stages{
        expected({{"2", "0"}, {"3", "1-n"}}),
        expected({{"1", "n-2"}, {"2", "n-1"}, {"3", "0"}, {"3", "1-n"}}),
        expected({{"1", "-1"}, {"2", "0"}, {"2", "n-1"}, {"3", "0"}, {"3", "1-n"}}),
        expected({{"1", "-1"}, {"2", "0"}, {"2", "n-1"}, {"2", "0"}, {"3", "1-n"}, {"2", "1-n"}, {"3", "2-2n"}}),
    };
    auto complex = singleton_complex(v3);
    for (std::size_t k = 0; k < word.size(); ++k) {
        complex = apply_twist(complex, word[k].vertex, word[k].sign, spec, k + 1);
        CHECK(multiset(complex, spec) == stages[k]);
        auto prefix = TwistWord(word.begin(), word.begin() + static_cast<long>(k) + 1);
        CHECK(multiset(apply_word(prefix, v3, 1, spec), spec) == stages[k]);
    }
}

TEST_CASE("shifts are symbolic in n") {
    auto word3 = letters(a3(3), "3+ 2- 1+ 3+");
    auto c3 = apply_word(word3, 2, 1, a3(3));
    auto c8 = apply_word(word3, 2, 1, a3(8));
    CHECK(multiset(c3, a3(3)) == multiset(c8, a3(8)));
    std::vector<std::int64_t> evaluated;
    for (const auto& t : c8.terms) {
        if (t.vertex == 1) evaluated.push_back(t.shift.eval(8));
    }
    CHECK(shift_spectrum(c8, 1, 8) == evaluated);
}

TEST_CASE("twists away from the complex act trivially") {
    auto spec = a3();
    auto c = apply_twist(singleton_complex(0), 2, 1, spec);
    REQUIRE(c.terms.size() == 1);
    CHECK(c.terms[0].vertex == 0);
    CHECK(c.terms[0].shift == ShiftExpr{});
}

TEST_CASE("m = 0 leaves the cocore alone") {
    auto spec = a3();
    auto c = apply_word(letters(spec, "3+ 2- 1+"), 1, 0, spec);
    CHECK(count_vector(c, 3) == std::vector<std::size_t>{0, 1, 0});
}

TEST_CASE("one twist multiplies the twisted term count by 1 + degree") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        auto c = random_case(rng);
        if (c.word.empty()) continue;
        auto complex = singleton_complex(c.word.front().vertex);
        for (std::size_t k = 0; k < c.word.size(); ++k) {
            auto u = c.word[k].vertex;
            auto before = count_vector(complex, c.spec.size());
            complex = apply_twist(complex, u, c.word[k].sign, c.spec, k + 1);
            auto after = count_vector(complex, c.spec.size());
            std::size_t total_before = 0, total_after = 0;
            for (auto x : before) total_before += x;
            for (auto x : after) total_after += x;
            CHECK(total_after == total_before + before[u] * c.spec.tree().degree(u));
        }
    }
}

TEST_CASE("weighted length against a hand sum") {
    auto spec = a3(3);
    auto c = apply_word(letters(spec, "3+ 2- 1+"), spec.index_of("3"), 1, spec);
    // terms L1[-1], L2[0], L2[n-1], L3[0], L3[1-n] at n = 3
    double expected_t1 = std::exp(-1.0) + 1.0 + std::exp(2.0) + 1.0 + std::exp(-2.0);
    CHECK(weighted_length(c, 1.0, 3) == doctest::Approx(expected_t1).epsilon(1e-14));
    CHECK(weighted_length(c, 0.0, 3) == 5.0);
}

TEST_CASE("twist increments") {
    auto spec = a3();
    auto v1 = spec.index_of("1"), v2 = spec.index_of("2");
    CHECK(twist_increment(spec, v1, v1, 1) == ShiftExpr{1, -1});
    CHECK(twist_increment(spec, v2, v2, -1) == ShiftExpr{-1, 1});
    CHECK(twist_increment(spec, v2, v1, -1) == ShiftExpr{-2, 1});
    CHECK(twist_increment(spec, v1, v2, 1) == ShiftExpr{2, -1});
}

TEST_CASE("count matrix of the worked word") {
    auto spec = a3();
    CHECK(count_matrix(letters(spec, "3+ 2- 1+"), 1, spec) ==
          penner::testing::int_matrix({{1, 1, 1}, {1, 2, 2}, {0, 1, 2}}));
}

}
