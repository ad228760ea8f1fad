#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace penner {

/// A homological shift a + b*n, kept symbolic in the dimension n.
struct ShiftExpr {
    std::int64_t a = 0;
    std::int64_t b = 0;

    constexpr ShiftExpr() = default;
    constexpr ShiftExpr(std::int64_t constant, std::int64_t n_coeff) : a(constant), b(n_coeff) {}

    static constexpr ShiftExpr constant(std::int64_t c) { return {c, 0}; }
    static constexpr ShiftExpr dimension() { return {0, 1}; }

    constexpr std::int64_t eval(std::int64_t n) const { return a + b * n; }

    constexpr ShiftExpr operator+(const ShiftExpr& o) const { return {a + o.a, b + o.b}; }
    constexpr ShiftExpr operator-(const ShiftExpr& o) const { return {a - o.a, b - o.b}; }
    constexpr ShiftExpr operator-() const { return {-a, -b}; }
    constexpr ShiftExpr& operator+=(const ShiftExpr& o) {
        a += o.a;
        b += o.b;
        return *this;
    }

    constexpr auto operator<=>(const ShiftExpr&) const = default;
};

/// Normal form used for display: "0", "-1", "n-1", "1-n", "2-2n", "-n".
std::string to_string(const ShiftExpr& s);

/// Inverse of to_string; throws penner::Error(ParseError) on malformed text.
ShiftExpr parse_shift(const std::string& text);

}  // namespace penner
