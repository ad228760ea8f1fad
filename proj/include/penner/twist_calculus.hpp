#pragma once

#include <cstdint>
#include <vector>

#include "penner/matrix.hpp"
#include "penner/numeric.hpp"
#include "penner/plumbing.hpp"
#include "penner/shift.hpp"
#include "penner/trace_path.hpp"
#include "penner/word.hpp"

namespace penner {

/// One component L_w[d] of a twisted complex, with its provenance.
struct Term {
    VertexIndex vertex;
    ShiftExpr shift;
    TracePath trace;

    bool operator==(const Term&) const = default;
};

/// Object part of the twisted complex representing phi^m(L_source).
/// Morphism data is not modeled.
struct CocoreComplex {
    VertexIndex source;
    std::vector<Term> terms;
};

CocoreComplex singleton_complex(VertexIndex v);

/// Applies one twist letter (u, sign) to every L_u term. Replacement terms are
/// emitted in place: the self-term first, then one term per neighbor in vertex
/// order. position is the 1-based word position recorded in the traces.
CocoreComplex apply_twist(const CocoreComplex& complex, VertexIndex u, int sign, const PlumbingSpec& spec,
                          std::size_t position = 0);

/// phi^m(L_v) obtained by rewriting {L_v[0]} letter by letter.
CocoreComplex apply_word(const TwistWord& word, VertexIndex source, long m, const PlumbingSpec& spec);

/// Number of terms per vertex.
std::vector<std::size_t> count_vector(const CocoreComplex& complex, std::size_t vertex_count);

/// Entry (w, v) counts the L_w terms of apply_word(word, v, m).
Matrix<BigInt> count_matrix(const TwistWord& word, long m, const PlumbingSpec& spec);

/// Sum over terms of exp(t * shift(n)).
double weighted_length(const CocoreComplex& complex, double t, long n);

/// Evaluated shifts of the L_w terms, in term order.
std::vector<std::int64_t> shift_spectrum(const CocoreComplex& complex, VertexIndex w, long n);

/// Shift increment of one twist step from `from` to `to` (equal for the
/// self-term) under a letter of the given sign.
ShiftExpr twist_increment(const PlumbingSpec& spec, VertexIndex from, VertexIndex to, int sign);

}  // namespace penner
