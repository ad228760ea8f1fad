#include "penner/entropy.hpp"

#include <cfloat>
#include <cmath>

#include "penner/errors.hpp"
#include "penner/numeric.hpp"
#include "penner/transfer.hpp"

namespace penner {

std::vector<EmpiricalPoint> empirical_entropy_sequence(const TwistWord& word, const PlumbingSpec& spec, long m_max) {
    if (m_max < 1) throw std::invalid_argument("m_max must be at least 1");
    const auto base = word_matrix(word, 1, TransferKind::unsigned_count(), spec).integers();
    std::vector<EmpiricalPoint> out;
    // running product base^m, one multiplication per step
    auto current = Matrix<BigInt>::identity(base.size());
    for (long m = 1; m <= m_max; ++m) {
        current = base * current;
        BigInt total = 0;
        for (std::size_t r = 0; r < current.size(); ++r) {
            for (std::size_t c = 0; c < current.size(); ++c) total += current(r, c);
        }
        out.push_back({m, log_bigint(total) / static_cast<double>(m)});
    }
    return out;
}

namespace {

Rational rational_tol(double tol) {
    if (!(tol > 0) || !std::isfinite(tol)) throw std::invalid_argument("tolerance must be positive");
    return Rational(tol);
}

RadiusEnclosure rounded(const RadiusEnclosure& e) {
    return {round_decimal(e.lo, kReportDigits, Rounding::down), round_decimal(e.hi, kReportDigits, Rounding::up),
            e.method};
}

double padded_log(double x, int direction) {
    double l = std::log(x);
    double pad = 4 * DBL_EPSILON * std::max(1.0, std::abs(l));
    return direction < 0 ? l - pad : l + pad;
}

}  // namespace

RadiusEnclosure log_enclosure(const RadiusEnclosure& radius) {
    if (radius.lo == 1 && radius.hi == 1) return {0, 0, radius.method};
    double lo = to_double(radius.lo, Rounding::down);
    double hi = to_double(radius.hi, Rounding::up);
    RadiusEnclosure out;
    out.method = radius.method;
    out.lo = lo > 0 ? Rational(padded_log(lo, -1)) : Rational(-1000);
    out.hi = Rational(padded_log(hi, +1));
    return rounded(out);
}

namespace {

RadiusEnclosure unsigned_radius(const TwistWord& word, const PlumbingSpec& spec, double tol) {
    auto matrix = word_matrix(word, 1, TransferKind::unsigned_count(), spec);
    // rho >= 1, so a radius width of tol/2 keeps the log width under tol
    auto radius = spectral_radius(matrix, rational_tol(tol) / 2);
    // unit diagonal: rho >= 1
    if (radius.lo < 1) radius.lo = 1;
    return radius;
}

void require_penner(const PennerReport& report, bool allow) {
    if (!report.is_penner && !allow) {
        throw Error(ErrorCode::NotPennerType,
                    "word is not of Penner type; pass the non-Penner override to get the heuristic value");
    }
}

}  // namespace

RadiusEnclosure exact_entropy(const TwistWord& word, const PlumbingSpec& spec, double tol, bool allow_non_penner) {
    require_penner(validate_penner(word, spec), allow_non_penner);
    return log_enclosure(unsigned_radius(word, spec, tol));
}

EntropyReport entropy_report(const PlumbingSpec& spec, const TwistWord& word, const EntropyOptions& options) {
    EntropyReport report;
    report.word = word;
    report.penner = validate_penner(word, spec);
    require_penner(report.penner, options.allow_non_penner);

    report.empirical = empirical_entropy_sequence(word, spec, options.m_max);
    auto radius = unsigned_radius(word, spec, options.tol);
    report.radius = rounded(radius);
    report.exact = log_enclosure(radius);

    const Rational tol = rational_tol(options.tol);
    const long odd_n = spec.n() % 2 == 1 ? spec.n() : spec.n() + 1;
    const long even_n = spec.n() % 2 == 0 ? spec.n() : spec.n() + 1;
    auto signed_radius = [&](long n) {
        auto m = word_matrix(word, 1, TransferKind::signed_at(n), spec);
        return SignedRadius{n, rounded(spectral_radius(m, tol))};
    };
    report.signed_odd = signed_radius(odd_n);
    report.signed_even = signed_radius(even_n);

    for (double t : options.t_values) {
        auto m = word_matrix(word, 1, TransferKind::weighted_at(t, spec.n()), spec);
        RadiusEnclosure r;
        try {
            r = spectral_radius(m, tol / 2);
        } catch (const IterationLimitError& e) {
            r = e.best();
        }
        report.t_weighted.push_back({t, log_enclosure(r)});
    }

    if (report.penner.is_penner) {
        report.notes.push_back(
            "h_cat <= h_top: the categorical entropy is a lower bound for the topological entropy of every "
            "representative of this mapping class");
        report.notes.push_back(
            "computed on the wrapped Fukaya category; the compact Fukaya category has the same categorical entropy");
    } else {
        report.notes.push_back(
            "NOT PENNER TYPE: the log spectral radius of the unsigned transfer matrix is only a heuristic here");
    }
    if (!report.t_weighted.empty()) {
        report.notes.push_back(
            "t_weighted values are EXPLORATORY: growth rates of len_t of the rewritten complexes, not claimed "
            "values of h_t");
    }
    return report;
}

}  // namespace penner
