#include <doctest.h>

#include <random>

#include "penner/errors.hpp"
#include "penner/trace_paths.hpp"
#include "penner/twist_calculus.hpp"
#include "penner/verify.hpp"
#include "test_support.hpp"

using namespace penner;
using penner::testing::a3;
using penner::testing::letters;

TEST_SUITE("trace_paths") {

TEST_CASE("the seven paths of the four-letter word") {
    auto spec = a3();
    auto word = letters(spec, "3+ 2- 1+ 3+");
    auto traces = enumerate_traces(word, 1, spec.index_of("3"), spec);
    std::vector<std::string> shown;
    for (const auto& t : traces) shown.push_back(format_trace(t, spec));
    CHECK(shown == std::vector<std::string>{"[1,1,2,3]", "[2,1,2,3]", "[2,2,3]", "[2,3,2,3]", "[3,3,2,3]", "[2,3,3]",
                                            "[3,3,3]"});

    std::vector<std::string> shifts{"-1", "0", "n-1", "0", "1-n", "1-n", "2-2n"};
    REQUIRE(traces.size() == shifts.size());
    for (std::size_t i = 0; i < traces.size(); ++i) {
        CHECK(shift_of_trace(traces[i], word, spec) == parse_shift(shifts[i]));
    }
}

TEST_CASE("trace indices record the spawning positions") {
    auto spec = a3();
    auto traces = enumerate_traces(letters(spec, "3+ 2- 1+ 3+"), 1, spec.index_of("3"), spec);
    CHECK(traces.front().indices == std::vector<std::size_t>{1, 2, 3});
    CHECK(traces.back().indices == std::vector<std::size_t>{1, 4});
}

TEST_CASE("a source absent from the word has the trivial path") {
    auto spec = a3();
    auto traces = enumerate_traces(letters(spec, "1+ 3+"), 2, spec.index_of("2"), spec);
    REQUIRE(traces.size() == 1);
    CHECK(format_trace(traces[0], spec) == "[2]");
    CHECK(shift_of_trace(traces[0], {}, spec) == ShiftExpr{});
}

TEST_CASE("inconsistent traces are rejected") {
    auto spec = a3();
    auto word = letters(spec, "3+ 2- 1+ 3+");
    CHECK_THROWS_AS(shift_of_trace(TracePath{{2, 0}, {1}}, word, spec), Error);  // 3 -> 1 is not an edge
    CHECK_THROWS_AS(shift_of_trace(TracePath{{2, 1}, {2}}, word, spec), Error);  // letter 2 is not tau_3
    CHECK_THROWS_AS(shift_of_trace(TracePath{{2, 1}, {9}}, word, spec), Error);  // out of range
}

TEST_CASE("geometric shift") {
    auto spec = a3();
    for (VertexIndex v = 0; v < 3; ++v) CHECK(geometric_shift(spec, v, v) == ShiftExpr{});
    // components of the worked complex agree with c(3, w) modulo n - 1
    auto complex = apply_word(letters(spec, "3+ 2- 1+ 3+"), 2, 1, spec);
    for (const auto& t : complex.terms) {
        auto diff = (t.shift - geometric_shift(spec, 2, t.vertex)).eval(spec.n());
        CHECK(diff % (spec.n() - 1) == 0);
    }
}

TEST_CASE("enumeration matches rewriting on random cases") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 80; ++trial) {
        auto c = random_case(rng);
        auto expanded = repeat_word(c.word, c.m);
        for (VertexIndex v = 0; v < c.spec.size(); ++v) {
            auto complex = apply_word(c.word, v, c.m, c.spec);
            auto traces = enumerate_traces(c.word, c.m, v, c.spec);
            REQUIRE(traces.size() == complex.terms.size());
            std::vector<TracePath> from_rewriting;
            for (const auto& t : complex.terms) from_rewriting.push_back(t.trace);
            std::sort(from_rewriting.begin(), from_rewriting.end());
            CHECK(from_rewriting == traces);
            for (const auto& t : complex.terms) CHECK(shift_of_trace(t.trace, expanded, c.spec) == t.shift);
        }
    }
}

}
