#include "penner/word.hpp"

#include <algorithm>

#include "penner/errors.hpp"

namespace penner {

std::string to_string(Polarity p) {
    switch (p) {
        case Polarity::standard: return "standard";
        case Polarity::inverted: return "inverted";
        case Polarity::none: return "none";
    }
    return "none";
}

int penner_sign(const PlumbingSpec& spec, VertexIndex v, Polarity polarity) {
    int s = spec.parts().sign.at(v);
    return polarity == Polarity::inverted ? -s : s;
}

PennerReport validate_penner(const TwistWord& word, const PlumbingSpec& spec) {
    std::vector<PennerViolation> against_standard;
    std::vector<PennerViolation> against_inverted;
    std::vector<bool> seen(spec.size(), false);
    for (std::size_t i = 0; i < word.size(); ++i) {
        const auto& letter = word[i];
        if (letter.vertex >= spec.size()) {
            throw Error(ErrorCode::UnknownVertex, "letter " + std::to_string(i) + " references an unknown vertex");
        }
        seen[letter.vertex] = true;
        const auto& name = spec.name(letter.vertex);
        bool plus = spec.parts().is_plus(letter.vertex);
        std::string where = "vertex " + name + (plus ? " in V+" : " in V-");
        std::string sign = letter.sign > 0 ? "+" : "-";
        if (letter.sign != penner_sign(spec, letter.vertex, Polarity::standard)) {
            against_standard.push_back({i, where + " with sign " + sign});
        }
        if (letter.sign != penner_sign(spec, letter.vertex, Polarity::inverted)) {
            against_inverted.push_back({i, where + " with sign " + sign});
        }
    }

    PennerReport report;
    report.covers_all_vertices = std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
    if (against_standard.empty()) {
        report.polarity = Polarity::standard;
    } else if (against_inverted.empty()) {
        report.polarity = Polarity::inverted;
    } else {
        report.is_penner = false;
        report.polarity = Polarity::none;
        report.violations =
            against_inverted.size() < against_standard.size() ? against_inverted : against_standard;
    }
    return report;
}

TwistWord invert_word(const TwistWord& word) {
    TwistWord out(word.rbegin(), word.rend());
    for (auto& letter : out) letter.sign = -letter.sign;
    return out;
}

TwistWord repeat_word(const TwistWord& word, long m) {
    if (m < 0) throw Error(ErrorCode::NegativePower, "power " + std::to_string(m) + " is negative");
    TwistWord out;
    out.reserve(word.size() * static_cast<std::size_t>(m));
    for (long i = 0; i < m; ++i) out.insert(out.end(), word.begin(), word.end());
    return out;
}

std::string format_word(const TwistWord& word, const PlumbingSpec& spec) {
    std::string out = "[";
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) out += ",";
        out += "(" + spec.name(word[i].vertex) + "," + (word[i].sign > 0 ? "+" : "-") + ")";
    }
    return out + "]";
}

}  // namespace penner
