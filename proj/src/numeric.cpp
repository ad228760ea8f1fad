#include "penner/numeric.hpp"

#include <charconv>
#include <cmath>
#include <system_error>

#include "penner/errors.hpp"

namespace penner {

namespace {

BigInt pow10(int digits) {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    return p;
}

BigInt scaled_integer(const Rational& q, int digits, Rounding mode) {
    BigInt num = q.get_num() * pow10(digits);
    BigInt den = q.get_den();
    BigInt out;
    switch (mode) {
        case Rounding::down: mpz_fdiv_q(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t()); break;
        case Rounding::up: mpz_cdiv_q(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t()); break;
        case Rounding::nearest: {
            BigInt twice = 2 * num + den;
            BigInt d2 = 2 * den;
            mpz_fdiv_q(out.get_mpz_t(), twice.get_mpz_t(), d2.get_mpz_t());
            break;
        }
    }
    return out;
}

}  // namespace

Rational round_decimal(const Rational& q, int digits, Rounding mode) {
    Rational out(scaled_integer(q, digits, mode), pow10(digits));
    out.canonicalize();
    return out;
}

std::string to_decimal(const Rational& q, int digits, Rounding mode) {
    BigInt scaled = scaled_integer(q, digits, mode);
    bool negative = scaled < 0;
    if (negative) scaled = -scaled;
    std::string body = scaled.get_str();
    if (digits > 0) {
        if (body.size() <= static_cast<std::size_t>(digits)) {
            body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
        }
        body.insert(body.size() - static_cast<std::size_t>(digits), ".");
        // trim trailing zeros but keep at least one fractional digit
        while (body.back() == '0' && body[body.size() - 2] != '.') body.pop_back();
    }
    return (negative ? "-" : "") + body;
}

Rational parse_decimal(const std::string& text) {
    auto fail = [&] { throw Error(ErrorCode::ParseError, "malformed decimal '" + text + "'"); };
    if (text.empty()) fail();
    std::size_t i = 0;
    bool negative = false;
    if (text[0] == '-' || text[0] == '+') {
        negative = text[0] == '-';
        i = 1;
    }
    std::string digits;
    int fraction = 0;
    bool dot = false;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (c == '.' && !dot) {
            dot = true;
        } else if (c >= '0' && c <= '9') {
            digits += c;
            if (dot) ++fraction;
        } else {
            fail();
        }
    }
    if (digits.empty()) fail();
    Rational out(BigInt(digits, 10), pow10(fraction));
    out.canonicalize();
    return negative ? Rational(-out) : out;
}

double log_bigint(const BigInt& x) {
    long exponent = 0;
    double mantissa = mpz_get_d_2exp(&exponent, x.get_mpz_t());
    return std::log(mantissa) + static_cast<double>(exponent) * std::log(2.0);
}

double to_double(const Rational& q, Rounding mode) {
    double d = q.get_d();
    if (mode == Rounding::nearest) return d;
    Rational back(d);
    if (mode == Rounding::down && back > q) d = std::nextafter(d, -HUGE_VAL);
    if (mode == Rounding::up && back < q) d = std::nextafter(d, HUGE_VAL);
    return d;
}

std::string format_double(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

double parse_double(const std::string& text) {
    double out = 0;
    auto res = std::from_chars(text.data(), text.data() + text.size(), out);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
        throw Error(ErrorCode::ParseError, "malformed number '" + text + "'");
    }
    return out;
}

}  // namespace penner
