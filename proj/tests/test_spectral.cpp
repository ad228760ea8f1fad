#include <doctest.h>

#include <cmath>
#include <random>

#include "penner/polynomial.hpp"
#include "penner/spectral.hpp"
#include "penner/transfer.hpp"
#include "penner/word.hpp"
#include "test_support.hpp"

using namespace penner;
using penner::testing::int_matrix;

namespace {

const Rational kTol(1, 1000000000);

bool encloses(const RadiusEnclosure& e, double x, double slack = 1e-12) {
    return e.lo.get_d() <= x + slack && x - slack <= e.hi.get_d();
}

Matrix<Rational> to_rational(const Matrix<BigInt>& a) {
    return a.map([](const BigInt& x) { return Rational(x); });
}

}  // namespace

TEST_SUITE("spectral") {

TEST_CASE("identity has radius exactly one") {
    auto e = spectral_radius(Matrix<BigInt>::identity(3), kTol);
    CHECK(e.lo == 1);
    CHECK(e.hi == 1);
}

TEST_CASE("integer Perron roots come out exact") {
    auto e = spectral_radius(int_matrix({{2, 1}, {1, 2}}), kTol);
    CHECK(e.lo == 3);
    CHECK(e.hi == 3);
}

TEST_CASE("worked product has radius 2 + sqrt 3") {
    auto a = int_matrix({{1, 1, 1}, {1, 2, 2}, {0, 1, 2}});
    auto e = spectral_radius(a, kTol);
    CHECK(e.width() <= kTol);
    CHECK(encloses(e, 2.0 + std::sqrt(3.0)));
    CHECK(e.lo * e.lo - 4 * e.lo + 1 <= 0);  // lo below the root, hi above
    CHECK(e.hi * e.hi - 4 * e.hi + 1 >= 0);

    auto cw = spectral_radius(a, kTol, RadiusMethod::collatz_wielandt);
    CHECK(cw.method == RadiusMethod::collatz_wielandt);
    CHECK(cw.intersects(e));
}

TEST_CASE("golden ratio") {
    auto e = spectral_radius(int_matrix({{1, 1}, {1, 0}}), kTol);
    CHECK(encloses(e, (1.0 + std::sqrt(5.0)) / 2.0));
}

TEST_CASE("signed matrices use root moduli") {
    // even-n product: x^3 + x^2 + x + 1 = (x + 1)(x^2 + 1)
    auto e = spectral_radius(int_matrix({{-1, -1, -1}, {1, 0, 0}, {0, 1, 0}}), kTol);
    CHECK(e.contains(1));
    CHECK(e.width() <= kTol);
    auto rotation = spectral_radius(int_matrix({{0, -2}, {2, 0}}), kTol);
    CHECK(rotation.contains(2));
    auto neg = spectral_radius(int_matrix({{-3, 0}, {0, 1}}), kTol);
    CHECK(neg.contains(3));
}

TEST_CASE("root modulus of complex roots") {
    // x^2 - 2x + 5 has roots 1 +- 2i
    auto e = max_root_modulus(IntPolynomial({5, -2, 1}), kTol);
    CHECK(encloses(e, std::sqrt(5.0)));
    CHECK(roots_inside_disk(IntPolynomial({5, -2, 1}), Rational(23, 10)));
    CHECK_FALSE(roots_inside_disk(IntPolynomial({5, -2, 1}), Rational(22, 10)));
    CHECK_FALSE(largest_real_root(IntPolynomial({5, -2, 1}), kTol).has_value());
}

TEST_CASE("largest real root") {
    auto r = largest_real_root(IntPolynomial({-2, 0, 1}), kTol);
    REQUIRE(r.has_value());
    CHECK(encloses(*r, std::sqrt(2.0)));
    auto exact = largest_real_root(IntPolynomial({6, -5, 1}), kTol);  // (x-2)(x-3)
    REQUIRE(exact.has_value());
    CHECK(exact->lo == 3);
    CHECK(exact->hi == 3);
    auto repeated = largest_real_root(IntPolynomial({1, -2, 1}) * IntPolynomial({-2, 0, 1}), kTol);
    REQUIRE(repeated.has_value());
    CHECK(encloses(*repeated, std::sqrt(2.0)));
}

TEST_CASE("Tarjan components") {
    std::vector<std::vector<std::size_t>> graph{{1}, {2}, {0, 3}, {4}, {3}, {}};
    auto sccs = strongly_connected_components(graph);
    REQUIRE(sccs.size() == 3);
    for (auto& c : sccs) std::sort(c.begin(), c.end());
    // reverse topological order: sinks first
    CHECK(sccs[0] == std::vector<std::size_t>{3, 4});
    CHECK(sccs[1] == std::vector<std::size_t>{0, 1, 2});
    CHECK(sccs[2] == std::vector<std::size_t>{5});
}

TEST_CASE("Collatz-Wielandt on reducible matrices") {
    // block triangular with diagonal blocks of radius 2 and 3, plus a zero row
    auto a = int_matrix({{1, 1, 5, 0}, {1, 1, 0, 7}, {0, 0, 3, 0}, {0, 0, 0, 0}});
    auto cw = collatz_wielandt(to_rational(a), kTol);
    CHECK(cw.contains(3));
    CHECK(cw.width() <= kTol);
    auto zero = collatz_wielandt(Matrix<Rational>(3), kTol);
    CHECK(zero.contains(0));
}

TEST_CASE("Collatz-Wielandt agrees with the characteristic polynomial") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t k = 1 + rng() % 8;
        Matrix<BigInt> a(k);
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) a(i, j) = rng() % 3 == 0 ? static_cast<long>(rng() % 4) : 0L;
        }
        auto cp = spectral_radius(a, kTol, RadiusMethod::charpoly);
        auto cw = spectral_radius(a, kTol, RadiusMethod::collatz_wielandt);
        CHECK(cp.width() <= kTol);
        CHECK(cw.width() <= kTol);
        CHECK(cp.intersects(cw));
    }
}

TEST_CASE("large nonnegative matrices take the Collatz-Wielandt route") {
    std::size_t k = kCharpolyCutoff + 3;
    Matrix<BigInt> a(k);
    for (std::size_t i = 0; i < k; ++i) a(i, (i + 1) % k) = 2;  // radius 2
    auto e = spectral_radius(a, kTol);
    CHECK(e.method == RadiusMethod::collatz_wielandt);
    CHECK(e.contains(2));
    auto forced = spectral_radius(a, kTol, RadiusMethod::charpoly);
    CHECK(forced.contains(2));
}

TEST_CASE("unreachable tolerance reports the best enclosure") {
    auto a = to_rational(int_matrix({{1, 1, 1}, {1, 2, 2}, {0, 1, 2}}));
    Rational tiny(1);
    mpz_ui_pow_ui(tiny.get_den_mpz_t(), 10, 400);
    tiny.canonicalize();
    try {
        collatz_wielandt(a, tiny);
        FAIL("expected IterationLimitError");
    } catch (const IterationLimitError& e) {
        CHECK(e.code() == ErrorCode::IterationLimit);
        CHECK(encloses(e.best(), 2.0 + std::sqrt(3.0), 1e-9));
    }
}

}
