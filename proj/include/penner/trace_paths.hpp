#pragma once

#include <vector>

#include "penner/plumbing.hpp"
#include "penner/shift.hpp"
#include "penner/trace_path.hpp"
#include "penner/word.hpp"

namespace penner {

/// All trace paths of components of phi^m(L_source), enumerated from the path
/// rules directly (no rewriting):
///  - the first spawn happens at the first occurrence of the source;
///  - a component created at position j with vertex x is next twisted at the
///    first occurrence of x after j, spawning x itself or a neighbor of x;
///  - a component whose vertex never occurs again after its creation survives
///    and ends the path.
/// Sorted by creation-order vertex sequence, then indices.
std::vector<TracePath> enumerate_traces(const TwistWord& word, long m, VertexIndex source, const PlumbingSpec& spec);

/// Shift accumulated along a trace, reading signs from the expanded word.
/// Throws InconsistentTrace if the trace does not match the word or the tree.
ShiftExpr shift_of_trace(const TracePath& trace, const TwistWord& expanded_word, const PlumbingSpec& spec);

/// Shift contribution of the unique tree path from v to w, with each step
/// signed by the Penner sign of the vertex it leaves. Zero when v == w.
ShiftExpr geometric_shift(const PlumbingSpec& spec, VertexIndex v, VertexIndex w,
                          Polarity polarity = Polarity::standard);

}  // namespace penner
