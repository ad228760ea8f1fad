#include "penner/twist_calculus.hpp"

#include <cmath>
#include <cstdlib>
#include <thread>

#include "penner/errors.hpp"

namespace penner {

ShiftExpr twist_increment(const PlumbingSpec& spec, VertexIndex from, VertexIndex to, int sign) {
    const ShiftExpr one_minus_n{1, -1};
    if (from == to) return sign > 0 ? one_minus_n : -one_minus_n;
    ShiftExpr s = spec.s(from, to);
    return sign > 0 ? one_minus_n + s : s - ShiftExpr::constant(1);
}

CocoreComplex singleton_complex(VertexIndex v) {
    return CocoreComplex{v, {Term{v, ShiftExpr{}, TracePath{{v}, {}}}}};
}

namespace {

void emit_replacements(std::vector<Term>& out, const Term& term, VertexIndex u, int sign, const PlumbingSpec& spec,
                       std::size_t position) {
    auto spawn = [&](VertexIndex target) {
        Term t{target, term.shift + twist_increment(spec, u, target, sign), term.trace};
        t.trace.vertices.push_back(target);
        t.trace.indices.push_back(position);
        out.push_back(std::move(t));
    };
    spawn(u);
    for (const auto& nb : spec.neighbors(u)) spawn(nb.vertex);
}

std::vector<Term> twist_terms(std::vector<Term>&& terms, VertexIndex u, int sign, const PlumbingSpec& spec,
                              std::size_t position) {
    std::vector<Term> out;
    out.reserve(terms.size() + terms.size() / 2);
    for (auto& term : terms) {
        if (term.vertex == u) {
            emit_replacements(out, term, u, sign, spec, position);
        } else {
            out.push_back(std::move(term));
        }
    }
    return out;
}

void check_letter(VertexIndex u, int sign, const PlumbingSpec& spec) {
    if (u >= spec.size()) throw Error(ErrorCode::UnknownVertex, "twist at unknown vertex index " + std::to_string(u));
    if (sign != 1 && sign != -1) throw Error(ErrorCode::InconsistentTrace, "twist sign must be +1 or -1");
}

}  // namespace

CocoreComplex apply_twist(const CocoreComplex& complex, VertexIndex u, int sign, const PlumbingSpec& spec,
                          std::size_t position) {
    check_letter(u, sign, spec);
    auto terms = complex.terms;
    return CocoreComplex{complex.source, twist_terms(std::move(terms), u, sign, spec, position)};
}

CocoreComplex apply_word(const TwistWord& word, VertexIndex source, long m, const PlumbingSpec& spec) {
    if (source >= spec.size()) throw Error(ErrorCode::UnknownVertex, "unknown source vertex");
    auto expanded = repeat_word(word, m);
    for (const auto& letter : expanded) check_letter(letter.vertex, letter.sign, spec);
    CocoreComplex complex = singleton_complex(source);
    for (std::size_t i = 0; i < expanded.size(); ++i) {
        complex.terms = twist_terms(std::move(complex.terms), expanded[i].vertex, expanded[i].sign, spec, i + 1);
    }
    return complex;
}

std::vector<std::size_t> count_vector(const CocoreComplex& complex, std::size_t vertex_count) {
    std::vector<std::size_t> counts(vertex_count, 0);
    for (const auto& term : complex.terms) ++counts.at(term.vertex);
    return counts;
}

namespace {

unsigned worker_count(std::size_t jobs) {
    unsigned threads = 1;
    if (const char* env = std::getenv("PENNER_ENTROPY_THREADS")) {
        long requested = std::strtol(env, nullptr, 10);
        if (requested > 1) threads = static_cast<unsigned>(requested);
    }
    return static_cast<unsigned>(std::min<std::size_t>(threads, jobs));
}

}  // namespace

Matrix<BigInt> count_matrix(const TwistWord& word, long m, const PlumbingSpec& spec) {
    if (m < 0) throw Error(ErrorCode::NegativePower, "power " + std::to_string(m) + " is negative");
    const std::size_t n = spec.size();
    std::vector<std::vector<std::size_t>> columns(n);
    auto fill = [&](VertexIndex v) { columns[v] = count_vector(apply_word(word, v, m, spec), n); };

    // Columns are independent; each worker owns a disjoint stride of them.
    unsigned workers = worker_count(n);
    if (workers <= 1) {
        for (VertexIndex v = 0; v < n; ++v) fill(v);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(workers);
        for (unsigned k = 0; k < workers; ++k) {
            pool.emplace_back([&, k] {
                try {
                    for (VertexIndex v = k; v < n; v += workers) fill(v);
                } catch (...) {
                    errors[k] = std::current_exception();
                }
            });
        }
        for (auto& t : pool) t.join();
        for (auto& e : errors) {
            if (e) std::rethrow_exception(e);
        }
    }

    Matrix<BigInt> out(n);
    for (VertexIndex v = 0; v < n; ++v) {
        for (VertexIndex w = 0; w < n; ++w) out(w, v) = static_cast<unsigned long>(columns[v][w]);
    }
    return out;
}

double weighted_length(const CocoreComplex& complex, double t, long n) {
    double total = 0.0;
    for (const auto& term : complex.terms) total += std::exp(t * static_cast<double>(term.shift.eval(n)));
    return total;
}

std::vector<std::int64_t> shift_spectrum(const CocoreComplex& complex, VertexIndex w, long n) {
    std::vector<std::int64_t> out;
    for (const auto& term : complex.terms) {
        if (term.vertex == w) out.push_back(term.shift.eval(n));
    }
    return out;
}

}  // namespace penner
