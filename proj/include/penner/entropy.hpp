#pragma once

#include <string>
#include <vector>

#include "penner/plumbing.hpp"
#include "penner/spectral.hpp"
#include "penner/word.hpp"

namespace penner {

struct EmpiricalPoint {
    long m = 0;
    double value = 0.0;  // (1/m) log of the total component count of phi^m

    bool operator==(const EmpiricalPoint&) const = default;
};

struct SignedRadius {
    long n = 0;
    RadiusEnclosure radius;

    bool operator==(const SignedRadius&) const = default;
};

/// Growth rate of len_t along the word. Exploratory: only t = 0 is a theorem.
struct WeightedRadius {
    double t = 0.0;
    RadiusEnclosure log_radius;

    bool operator==(const WeightedRadius&) const = default;
};

struct EntropyOptions {
    long m_max = 30;
    double tol = 1e-9;
    std::vector<double> t_values;
    bool allow_non_penner = false;
};

struct EntropyReport {
    TwistWord word;
    PennerReport penner;
    std::vector<EmpiricalPoint> empirical;
    RadiusEnclosure radius;  // spectral radius of the unsigned word matrix
    RadiusEnclosure exact;   // natural log of `radius`: the categorical entropy
    SignedRadius signed_odd;
    SignedRadius signed_even;
    std::vector<std::string> notes;
    std::vector<WeightedRadius> t_weighted;

    bool operator==(const EntropyReport&) const = default;
};

/// Decimal places kept by report enclosures (rounded outward).
inline constexpr int kReportDigits = 18;

std::vector<EmpiricalPoint> empirical_entropy_sequence(const TwistWord& word, const PlumbingSpec& spec, long m_max);

/// Outward-rounded natural log of a radius enclosure with lo >= 1 - tol.
/// Exactly [0, 0] when the radius is exactly 1.
RadiusEnclosure log_enclosure(const RadiusEnclosure& radius);

/// log rho of the unsigned word matrix, enclosure width <= tol.
/// Throws NotPennerType unless the word is Penner or allow_non_penner is set.
RadiusEnclosure exact_entropy(const TwistWord& word, const PlumbingSpec& spec, double tol = 1e-9,
                              bool allow_non_penner = false);

EntropyReport entropy_report(const PlumbingSpec& spec, const TwistWord& word, const EntropyOptions& options = {});

}  // namespace penner
