#include <doctest.h>

#include <random>

#include "penner/errors.hpp"
#include "penner/polynomial.hpp"
#include "penner/transfer.hpp"
#include "penner/twist_calculus.hpp"
#include "penner/verify.hpp"
#include "test_support.hpp"

using namespace penner;
using penner::testing::a3;
using penner::testing::int_matrix;
using penner::testing::letters;

namespace {

long neg1(long k) { return k % 2 == 0 ? 1 : -1; }

// Fraction-free Gaussian elimination, independent of char_poly.
BigInt bareiss_det(Matrix<BigInt> a) {
    const std::size_t k = a.size();
    if (k == 0) return 1;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t p = 0; p + 1 < k; ++p) {
        if (a(p, p) == 0) {
            std::size_t r = p + 1;
            while (r < k && a(r, p) == 0) ++r;
            if (r == k) return 0;
            for (std::size_t c = 0; c < k; ++c) std::swap(a(p, c), a(r, c));
            sign = -sign;
        }
        for (std::size_t i = p + 1; i < k; ++i) {
            for (std::size_t j = p + 1; j < k; ++j) {
                BigInt num = a(i, j) * a(p, p) - a(i, p) * a(p, j);
                mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = a(p, p);
    }
    return sign * a(k - 1, k - 1);
}

Matrix<BigInt> naive_power(const Matrix<BigInt>& a, long m) {
    auto out = Matrix<BigInt>::identity(a.size());
    for (long i = 0; i < m; ++i) out = out * a;
    return out;
}

}  // namespace

TEST_SUITE("transfer") {

TEST_CASE("elementary signed matrices match the displayed forms") {
    for (long n : {4L, 5L, 6L, 7L}) {
        auto spec = a3(n);
        auto b1 = int_matrix({{neg1(1 - n), 0, 0}, {neg1(2 - n), 1, 0}, {0, 0, 1}});
        auto b2 = int_matrix({{1, neg1(n - 2), 0}, {0, neg1(n - 1), 0}, {0, 1, 1}});
        auto b3 = int_matrix({{1, 0, 0}, {0, 1, 1}, {0, 0, neg1(1 - n)}});
        auto kind = TransferKind::signed_at(n);
        CHECK(elementary_matrix(0, 1, kind, spec).integers() == b1);
        CHECK(elementary_matrix(1, -1, kind, spec).integers() == b2);
        CHECK(elementary_matrix(2, 1, kind, spec).integers() == b3);
        CHECK(word_matrix(letters(spec, "3+ 2- 1+"), 1, kind, spec).integers() == b1 * b2 * b3);
    }
}

TEST_CASE("worked word products") {
    auto spec = a3();
    auto w = letters(spec, "3+ 2- 1+");
    CHECK(word_matrix(w, 1, TransferKind::unsigned_count(), spec).integers() ==
          int_matrix({{1, 1, 1}, {1, 2, 2}, {0, 1, 2}}));
    CHECK(word_matrix(w, 1, TransferKind::signed_at(5), spec).integers() ==
          int_matrix({{1, -1, -1}, {-1, 2, 2}, {0, 1, 2}}));
    CHECK(word_matrix(w, 1, TransferKind::signed_at(4), spec).integers() ==
          int_matrix({{-1, -1, -1}, {1, 0, 0}, {0, 1, 0}}));
    CHECK(word_matrix(w, 0, TransferKind::unsigned_count(), spec).integers() == Matrix<BigInt>::identity(3));
}

TEST_CASE("signed matrices need a dimension") {
    auto spec = a3();
    CHECK_THROWS_AS(elementary_matrix(0, 1, TransferKind{MatrixKind::signed_homology, std::nullopt, std::nullopt}, spec),
                    Error);
    auto weighted = word_matrix(letters(spec, "1+"), 1, TransferKind::weighted_at(0.5, 5), spec);
    CHECK_THROWS_AS(weighted.integers(), Error);
}

TEST_CASE("matrix powers against naive multiplication") {
    auto fib = int_matrix({{1, 1}, {1, 0}});
    CHECK(power(fib, 5) == int_matrix({{8, 5}, {5, 3}}));
    CHECK(power(fib, 90) == naive_power(fib, 90));
    auto spec = a3();
    auto one = word_matrix(letters(spec, "3+ 2- 1+"), 1, TransferKind::unsigned_count(), spec);
    CHECK(matrix_power(one, 7).integers() == naive_power(one.integers(), 7));
    CHECK(word_matrix(letters(spec, "3+ 2- 1+"), 7, TransferKind::unsigned_count(), spec).integers() ==
          naive_power(one.integers(), 7));
}

TEST_CASE("characteristic polynomial") {
    auto spec = a3();
    auto one = word_matrix(letters(spec, "3+ 2- 1+"), 1, TransferKind::unsigned_count(), spec);
    // (x - 1)(x^2 - 4x + 1)
    CHECK(char_poly(one) == IntPolynomial({-1, 5, -5, 1}));
    CHECK(char_poly(one).to_string() == "x^3 - 5x^2 + 5x - 1");
    auto even = word_matrix(letters(spec, "3+ 2- 1+"), 1, TransferKind::signed_at(4), spec);
    CHECK(char_poly(even) == IntPolynomial({1, 1, 1, 1}));
    CHECK(char_poly(Matrix<BigInt>(0)) == IntPolynomial({1}));
}

TEST_CASE("char_poly agrees with a Bareiss determinant oracle") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t k = 1 + rng() % 7;
        Matrix<BigInt> a(k);
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) a(i, j) = static_cast<long>(rng() % 11) - 5;
        }
        auto p = char_poly(a);
        CHECK(p.degree() == static_cast<long>(k));
        for (long x = -static_cast<long>(k); x <= static_cast<long>(k); ++x) {
            Matrix<BigInt> shifted(k);
            for (std::size_t i = 0; i < k; ++i) {
                for (std::size_t j = 0; j < k; ++j) shifted(i, j) = (i == j ? BigInt(x) : BigInt(0)) - a(i, j);
            }
            CHECK(p(BigInt(x)) == bareiss_det(shifted));
        }
    }
}

TEST_CASE("weighted matrices") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 30; ++trial) {
        auto c = random_case(rng);
        long n = c.spec.n();
        auto weighted = word_matrix(c.word, c.m, TransferKind::weighted_at(0.0, n), c.spec).weights();
        auto counts = count_matrix(c.word, c.m, c.spec);
        auto at_zero = evaluate_weighted(weighted, 0.0, n);
        for (std::size_t i = 0; i < c.spec.size(); ++i) {
            for (std::size_t j = 0; j < c.spec.size(); ++j) {
                CHECK(weighted(i, j).total() == counts(i, j));
                CHECK(at_zero(i, j) == Rational(counts(i, j)));
            }
        }
    }
}

TEST_CASE("weight formatting") {
    auto w = Weight::unit(ShiftExpr{}) ;
    w += Weight::unit(ShiftExpr{1, -1}, 2);
    CHECK(w.to_string() == "E(0)+2E(1-n)");
    CHECK(Weight{}.to_string() == "0");
    CHECK((w * w).total() == 9);
    CHECK(w.evaluate(0.0, 5) == 3.0);
    CHECK(to_string(MatrixKind::signed_homology) == "signed");
}

}
