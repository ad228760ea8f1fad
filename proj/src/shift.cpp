#include "penner/shift.hpp"

#include <cctype>
#include <cstdlib>

#include "penner/errors.hpp"

namespace penner {

namespace {

std::string n_term(std::int64_t b) {
    if (b == 1) return "n";
    if (b == -1) return "-n";
    return std::to_string(b) + "n";
}

}  // namespace

std::string to_string(const ShiftExpr& s) {
    if (s.b == 0) return std::to_string(s.a);
    if (s.a == 0) return n_term(s.b);
    if (s.b > 0) {
        // "n-1", "2n+3"
        return n_term(s.b) + (s.a > 0 ? "+" : "") + std::to_string(s.a);
    }
    // "1-n", "2-2n"
    return std::to_string(s.a) + n_term(s.b);
}

ShiftExpr parse_shift(const std::string& text) {
    ShiftExpr out;
    std::size_t i = 0;
    bool any = false;
    auto fail = [&] { throw Error(ErrorCode::ParseError, "malformed shift '" + text + "'"); };
    while (i < text.size()) {
        std::int64_t sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
        } else if (any) {
            fail();
        }
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        bool has_digits = i > start;
        std::int64_t value = has_digits ? std::strtoll(text.substr(start, i - start).c_str(), nullptr, 10) : 1;
        if (i < text.size() && text[i] == 'n') {
            out.b += sign * value;
            ++i;
        } else {
            if (!has_digits) fail();
            out.a += sign * value;
        }
        any = true;
    }
    if (!any) fail();
    return out;
}

}  // namespace penner
