#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "penner/entropy.hpp"
#include "penner/matrix.hpp"
#include "penner/numeric.hpp"
#include "penner/plumbing.hpp"
#include "penner/spectral.hpp"

namespace penner {

/// Deterministic JSON for an entropy report. Big numbers and enclosures are
/// decimal strings; empty optional sections are omitted, never null.
std::string emit_json(const EntropyReport& report, const PlumbingSpec& spec);
EntropyReport parse_report_json(std::string_view bytes, const PlumbingSpec& spec);

/// {"rows":[["1","0"],["0","1"]]}
std::string emit_json(const Matrix<BigInt>& m);

}  // namespace penner
