#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "penner/plumbing.hpp"

namespace penner {

struct Letter {
    VertexIndex vertex;
    int sign;  // +1 for a positive twist, -1 for an inverse twist

    bool operator==(const Letter&) const = default;
};

/// A Dehn-twist word stored in application order: letters[0] is applied first.
/// The composition tau_{v_s} o ... o tau_{v_1} corresponds to letters [v_1, ..., v_s].
using TwistWord = std::vector<Letter>;

enum class Polarity { standard, inverted, none };

std::string to_string(Polarity p);

struct PennerViolation {
    std::size_t index;  // 0-based letter position
    std::string reason;

    bool operator==(const PennerViolation&) const = default;
};

struct PennerReport {
    bool is_penner = true;
    Polarity polarity = Polarity::standard;
    std::vector<PennerViolation> violations;
    bool covers_all_vertices = false;  // informational: every vertex occurs in the word

    bool operator==(const PennerReport&) const = default;
};

/// Penner iff the signs agree with the bipartition in one global polarity.
/// Violations are reported against whichever polarity has fewer of them
/// (standard on ties).
PennerReport validate_penner(const TwistWord& word, const PlumbingSpec& spec);

/// Sign each vertex carries under the given polarity (+1 on plus vertices for standard).
int penner_sign(const PlumbingSpec& spec, VertexIndex v, Polarity polarity);

TwistWord invert_word(const TwistWord& word);
TwistWord repeat_word(const TwistWord& word, long m);

/// "[(3,+),(2,-)]" using the spec's vertex names.
std::string format_word(const TwistWord& word, const PlumbingSpec& spec);

}  // namespace penner
