#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "penner/plumbing.hpp"
#include "penner/spec_io.hpp"
#include "penner/word.hpp"

namespace penner {

/// One randomized instance: a small tree with random grading, a Penner word
/// of random polarity and a power.
struct VerifyCase {
    PlumbingSpec spec;
    TwistWord word;
    long m = 0;
};

struct CheckResult {
    std::string name;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::vector<std::string> failures;  // first few, for diagnostics
};

struct VerifyReport {
    std::size_t cases = 0;
    std::vector<CheckResult> checks;

    bool ok() const;
    std::string summary() const;
};

struct CaseLimits {
    std::size_t max_vertices = 7;
    std::size_t max_word_length = 6;
    long max_power = 4;
    std::vector<long> dimensions{3, 4, 5};
    std::size_t max_terms = 200000;  // m is lowered until the total term count fits
};

VerifyCase random_case(std::mt19937_64& rng, const CaseLimits& limits = {});

/// Runs the oracle-equivalence and invariant checks on one case, appending
/// to the named results in `report`.
void verify_case(const VerifyCase& c, VerifyReport& report);

/// `cases` random cases from `seed`; when `extra` is given its own word is
/// also checked for m = 0..3.
VerifyReport run_verification(std::uint64_t seed, std::size_t cases, const ProblemSpec* extra = nullptr,
                              const CaseLimits& limits = {});

}  // namespace penner
