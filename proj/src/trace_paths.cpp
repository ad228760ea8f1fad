#include "penner/trace_paths.hpp"

#include <algorithm>

#include "penner/errors.hpp"

namespace penner {

std::string format_trace(const TracePath& trace, const PlumbingSpec& spec) {
    std::string out = "[";
    for (auto it = trace.vertices.rbegin(); it != trace.vertices.rend(); ++it) {
        if (it != trace.vertices.rbegin()) out += ",";
        out += spec.name(*it);
    }
    return out + "]";
}

namespace {

class TraceEnumerator {
public:
    TraceEnumerator(const TwistWord& expanded, const PlumbingSpec& spec) : spec_(spec), occurrences_(spec.size()) {
        for (std::size_t i = 0; i < expanded.size(); ++i) {
            if (expanded[i].vertex >= spec.size()) {
                throw Error(ErrorCode::UnknownVertex, "word letter " + std::to_string(i) + " is not a vertex");
            }
            occurrences_[expanded[i].vertex].push_back(i + 1);
        }
    }

    std::vector<TracePath> run(VertexIndex source) {
        TracePath path{{source}, {}};
        extend(path, 0);
        return std::move(found_);
    }

private:
    // First position strictly after `after` at which x is twisted; 0 if none.
    std::size_t next_occurrence(VertexIndex x, std::size_t after) const {
        const auto& occ = occurrences_[x];
        auto it = std::upper_bound(occ.begin(), occ.end(), after);
        return it == occ.end() ? 0 : *it;
    }

    void extend(TracePath& path, std::size_t created_at) {
        VertexIndex x = path.vertices.back();
        std::size_t position = next_occurrence(x, created_at);
        if (position == 0) {
            found_.push_back(path);
            return;
        }
        path.indices.push_back(position);
        auto descend = [&](VertexIndex y) {
            path.vertices.push_back(y);
            extend(path, position);
            path.vertices.pop_back();
        };
        descend(x);
        for (auto y : spec_.tree().neighbors(x)) descend(y);
        path.indices.pop_back();
    }

    const PlumbingSpec& spec_;
    std::vector<std::vector<std::size_t>> occurrences_;
    std::vector<TracePath> found_;
};

ShiftExpr step_shift(const PlumbingSpec& spec, VertexIndex from, VertexIndex to, int sign) {
    const long n_coeff = sign > 0 ? -1 : 1;
    if (from == to) return ShiftExpr{-n_coeff, n_coeff};  // (1-n) or (n-1)
    ShiftExpr s = spec.s(from, to);
    return sign > 0 ? ShiftExpr{1 + s.a, s.b - 1} : ShiftExpr{s.a - 1, s.b};
}

}  // namespace

std::vector<TracePath> enumerate_traces(const TwistWord& word, long m, VertexIndex source, const PlumbingSpec& spec) {
    if (source >= spec.size()) throw Error(ErrorCode::UnknownVertex, "unknown source vertex");
    auto expanded = repeat_word(word, m);
    auto traces = TraceEnumerator(expanded, spec).run(source);
    std::sort(traces.begin(), traces.end(), [](const TracePath& a, const TracePath& b) {
        if (a.vertices != b.vertices) return a.vertices < b.vertices;
        return a.indices < b.indices;
    });
    return traces;
}

ShiftExpr shift_of_trace(const TracePath& trace, const TwistWord& expanded_word, const PlumbingSpec& spec) {
    auto fail = [](const std::string& why) -> ShiftExpr { throw Error(ErrorCode::InconsistentTrace, why); };
    if (trace.vertices.empty()) return fail("empty trace");
    if (trace.indices.size() + 1 != trace.vertices.size()) return fail("index count does not match vertex count");
    ShiftExpr total;
    std::size_t previous = 0;
    for (std::size_t i = 0; i < trace.indices.size(); ++i) {
        std::size_t position = trace.indices[i];
        if (position <= previous || position > expanded_word.size()) return fail("indices must increase within the word");
        previous = position;
        const auto& letter = expanded_word[position - 1];
        VertexIndex from = trace.vertices[i];
        VertexIndex to = trace.vertices[i + 1];
        if (from >= spec.size() || to >= spec.size()) return fail("vertex out of range");
        if (letter.vertex != from) {
            return fail("letter at position " + std::to_string(position) + " twists " + spec.name(letter.vertex) +
                        ", not " + spec.name(from));
        }
        if (from != to && !spec.tree().adjacent(from, to)) return fail("step is neither a loop nor an edge");
        total += step_shift(spec, from, to, letter.sign);
    }
    return total;
}

ShiftExpr geometric_shift(const PlumbingSpec& spec, VertexIndex v, VertexIndex w, Polarity polarity) {
    auto path = geometric_path(spec, v, w);
    ShiftExpr total;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        int sign = penner_sign(spec, path[i], polarity == Polarity::none ? Polarity::standard : polarity);
        total += step_shift(spec, path[i], path[i + 1], sign);
    }
    return total;
}

}  // namespace penner
