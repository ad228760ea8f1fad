#pragma once

#include <string>
#include <vector>

#include "penner/matrix.hpp"
#include "penner/numeric.hpp"

namespace penner {

/// Integer polynomial, coefficients in ascending degree.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> ascending);

    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<BigInt>& coefficients() const { return coeffs_; }
    const BigInt& coefficient(long k) const;
    bool is_zero() const { return coeffs_.empty(); }

    BigInt operator()(const BigInt& x) const;
    Rational operator()(const Rational& x) const;

    IntPolynomial operator*(const IntPolynomial& o) const;
    bool operator==(const IntPolynomial& o) const { return coeffs_ == o.coeffs_; }

    /// "x^3 - 5x^2 + 5x - 1"
    std::string to_string(const std::string& var = "x") const;

private:
    std::vector<BigInt> coeffs_;
};

/// det(xI - A), computed with the Faddeev-LeVerrier recurrence in exact
/// integer arithmetic (every division by k is exact).
IntPolynomial char_poly(const Matrix<BigInt>& a);

}  // namespace penner
