#include <doctest.h>

#include <cmath>
#include <random>

#include "penner/entropy.hpp"
#include "penner/errors.hpp"
#include "penner/transfer.hpp"
#include "penner/verify.hpp"
#include "test_support.hpp"

using namespace penner;
using penner::testing::a3;
using penner::testing::letters;

namespace {

const double kLogTwoPlusRootThree = std::log(2.0 + std::sqrt(3.0));

bool encloses(const RadiusEnclosure& e, double x, double slack = 1e-12) {
    return e.lo.get_d() <= x + slack && x - slack <= e.hi.get_d();
}

}  // namespace

TEST_SUITE("entropy") {

TEST_CASE("worked word") {
    for (long n : {3L, 4L, 5L, 6L, 9L}) {
        auto spec = a3(n);
        auto e = exact_entropy(letters(spec, "3+ 2- 1+"), spec);
        CHECK(encloses(e, kLogTwoPlusRootThree));
        CHECK(e.width() <= Rational(1, 1000000000));
        CHECK(e == exact_entropy(letters(a3(3), "3+ 2- 1+"), a3(3)));
    }
}

TEST_CASE("empirical sequence") {
    auto spec = a3();
    auto seq = empirical_entropy_sequence(letters(spec, "3+ 2- 1+"), spec, 40);
    REQUIRE(seq.size() == 40);
    CHECK(seq[0].m == 1);
    CHECK(seq[0].value == doctest::Approx(std::log(11.0)).epsilon(1e-15));
    auto exact = exact_entropy(letters(spec, "3+ 2- 1+"), spec);
    for (const auto& p : seq) CHECK(p.value >= exact.lo.get_d() - 1e-12);  // sum of A^m >= rho^m
    CHECK(std::abs(seq.back().value - kLogTwoPlusRootThree) < 0.05);
}

TEST_CASE("degenerate words") {
    auto spec = a3();
    auto empty = exact_entropy({}, spec);
    CHECK(empty.lo == 0);
    CHECK(empty.hi == 0);
    for (VertexIndex v = 0; v < 3; ++v) {
        for (int sign : {1, -1}) {
            auto e = exact_entropy({{v, sign}}, spec);
            CHECK(e.lo == 0);
            CHECK(e.hi == 0);
        }
    }
    auto single = build_plumbing({"x"}, {}, 4);
    auto e = exact_entropy({{0, 1}, {0, 1}}, single);
    CHECK(e.lo == 0);
    CHECK(e.hi == 0);
}

TEST_CASE("non-Penner words are refused unless allowed") {
    auto spec = a3();
    auto word = letters(spec, "3+ 2+ 1+");
    CHECK_THROWS_AS(exact_entropy(word, spec), Error);
    auto e = exact_entropy(word, spec, 1e-9, true);
    CHECK(e.lo >= 0);
    auto report = entropy_report(spec, word, {.m_max = 5, .tol = 1e-9, .t_values = {}, .allow_non_penner = true});
    CHECK_FALSE(report.penner.is_penner);
    bool noted = false;
    for (const auto& note : report.notes) noted = noted || note.find("NOT PENNER TYPE") != std::string::npos;
    CHECK(noted);
}

TEST_CASE("relabeling leaves the entropy unchanged") {
    auto spec = a3();
    auto renamed = build_plumbing({"c", "a", "b"}, {{"c", "a"}, {"a", "b"}}, 5, {{{"c", "a"}, 1}, {{"a", "b"}, 1}});
    auto e1 = exact_entropy(letters(spec, "3+ 2- 1+"), spec);
    auto e2 = exact_entropy(letters(renamed, "b+ a- c+"), renamed);
    CHECK(e1.intersects(e2));
    CHECK(abs(e1.midpoint() - e2.midpoint()) <= Rational(2, 1000000000));
}

TEST_CASE("inverse word has the same entropy") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        auto c = random_case(rng);
        auto forward = exact_entropy(repeat_word(c.word, 1), c.spec);
        auto backward = exact_entropy(invert_word(c.word), c.spec);
        CHECK(forward.intersects(backward));
    }
}

TEST_CASE("report contents") {
    auto spec = a3(5);
    auto report = entropy_report(spec, letters(spec, "3+ 2- 1+"), {.m_max = 4, .tol = 1e-9, .t_values = {0.5}});
    CHECK(report.empirical.size() == 4);
    CHECK(report.signed_odd.n == 5);
    CHECK(report.signed_even.n == 6);
    CHECK(report.signed_odd.radius.intersects(report.radius));
    CHECK(report.signed_even.radius.contains(1));
    REQUIRE(report.t_weighted.size() == 1);
    CHECK(report.t_weighted[0].t == 0.5);
    CHECK(encloses(report.exact, kLogTwoPlusRootThree));
    auto even = entropy_report(a3(4), letters(a3(4), "3+ 2- 1+"), {.m_max = 2});
    CHECK(even.signed_even.n == 4);
    CHECK(even.signed_odd.n == 5);
}

TEST_CASE("log enclosure") {
    auto zero = log_enclosure({1, 1, RadiusMethod::charpoly});
    CHECK(zero.lo == 0);
    CHECK(zero.hi == 0);
    auto e = log_enclosure({Rational(2), Rational(2), RadiusMethod::charpoly});
    CHECK(encloses(e, std::log(2.0)));
    CHECK(e.width() < Rational(1, 1000000000));
}

}
