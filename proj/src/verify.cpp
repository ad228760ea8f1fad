#include "penner/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <tuple>

#include "penner/entropy.hpp"
#include "penner/trace_paths.hpp"
#include "penner/transfer.hpp"
#include "penner/twist_calculus.hpp"

namespace penner {

bool VerifyReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.failed == 0; });
}

std::string VerifyReport::summary() const {
    std::ostringstream out;
    out << "cases: " << cases << "\n";
    for (const auto& c : checks) {
        out << (c.failed == 0 ? "PASS " : "FAIL ") << c.name << "  (" << c.passed << " passed, " << c.failed
            << " failed)\n";
        for (const auto& f : c.failures) out << "    " << f << "\n";
    }
    return out.str();
}

namespace {

std::size_t draw(std::mt19937_64& rng, std::size_t bound) { return static_cast<std::size_t>(rng() % bound); }

BigInt total_entries(const Matrix<BigInt>& m) {
    BigInt total = 0;
    for (std::size_t r = 0; r < m.size(); ++r) {
        for (std::size_t c = 0; c < m.size(); ++c) total += m(r, c);
    }
    return total;
}

class Recorder {
public:
    Recorder(VerifyReport& report, const VerifyCase& c) : report_(report), case_(c) {}

    void expect(const std::string& check, bool ok, const std::string& detail = {}) {
        auto& result = slot(check);
        if (ok) {
            ++result.passed;
            return;
        }
        ++result.failed;
        if (result.failures.size() < 5) {
            result.failures.push_back(format_word(case_.word, case_.spec) + " m=" + std::to_string(case_.m) +
                                      " n=" + std::to_string(case_.spec.n()) + (detail.empty() ? "" : ": " + detail));
        }
    }

private:
    CheckResult& slot(const std::string& name) {
        for (auto& c : report_.checks) {
            if (c.name == name) return c;
        }
        report_.checks.push_back({name, 0, 0, {}});
        return report_.checks.back();
    }

    VerifyReport& report_;
    const VerifyCase& case_;
};

long floor_mod(long a, long m) { return ((a % m) + m) % m; }

}  // namespace

VerifyCase random_case(std::mt19937_64& rng, const CaseLimits& limits) {
    std::size_t k = 1 + draw(rng, limits.max_vertices);
    std::vector<std::string> labels;
    for (char c = 'a'; c < static_cast<char>('a' + limits.max_vertices); ++c) labels.emplace_back(1, c);
    std::shuffle(labels.begin(), labels.end(), rng);
    labels.resize(k);

    std::vector<Edge> edges;
    for (std::size_t i = 1; i < k; ++i) edges.push_back({labels[i], labels[draw(rng, i)]});
    long n = limits.dimensions[draw(rng, limits.dimensions.size())];
    std::vector<GradingOverride> overrides;
    for (const auto& e : edges) {
        if (draw(rng, 2) == 0) continue;
        Edge oriented = draw(rng, 2) == 0 ? e : Edge{e.second, e.first};
        overrides.push_back({oriented, 1 + static_cast<long>(draw(rng, static_cast<std::size_t>(n - 1)))});
    }
    PlumbingSpec spec = build_plumbing(labels, edges, n, overrides);

    Polarity polarity = draw(rng, 2) == 0 ? Polarity::standard : Polarity::inverted;
    std::size_t length = draw(rng, limits.max_word_length + 1);
    TwistWord word;
    for (std::size_t i = 0; i < length; ++i) {
        VertexIndex v = draw(rng, k);
        word.push_back({v, penner_sign(spec, v, polarity)});
    }
    long m = static_cast<long>(draw(rng, static_cast<std::size_t>(limits.max_power + 1)));
    auto one = word_matrix(word, 1, TransferKind::unsigned_count(), spec).integers();
    while (m > 0 && total_entries(power(one, static_cast<unsigned long>(m))) > BigInt(limits.max_terms)) --m;
    return VerifyCase{std::move(spec), std::move(word), m};
}

void verify_case(const VerifyCase& c, VerifyReport& report) {
    Recorder rec(report, c);
    const auto& spec = c.spec;
    const std::size_t size = spec.size();
    const long n = spec.n();
    const auto penner = validate_penner(c.word, spec);
    const auto expanded = repeat_word(c.word, c.m);

    // Rewriting against independent trace-path enumeration.
    std::vector<CocoreComplex> complexes;
    for (VertexIndex v = 0; v < size; ++v) {
        complexes.push_back(apply_word(c.word, v, c.m, spec));
        const auto& complex = complexes.back();
        auto traces = enumerate_traces(c.word, c.m, v, spec);

        std::vector<std::tuple<VertexIndex, ShiftExpr, TracePath>> from_rewriting, from_paths;
        for (const auto& t : complex.terms) from_rewriting.emplace_back(t.vertex, t.shift, t.trace);
        for (const auto& t : traces) from_paths.emplace_back(t.terminal(), shift_of_trace(t, expanded, spec), t);
        std::sort(from_rewriting.begin(), from_rewriting.end());
        std::sort(from_paths.begin(), from_paths.end());
        rec.expect("rewriting terms = trace-path terms", from_rewriting == from_paths,
                   "source " + spec.name(v) + ": " + std::to_string(from_rewriting.size()) + " vs " +
                       std::to_string(from_paths.size()) + " terms");

        if (penner.is_penner) {
            bool loops_ok = true;
            for (const auto& t : traces) {
                if (t.source() == t.terminal()) {
                    auto s = shift_of_trace(t, expanded, spec);
                    loops_ok = loops_ok && s.a == -s.b;
                }
            }
            rec.expect("loop shifts lie in (1-n)Z", loops_ok, "source " + spec.name(v));

            bool residues_ok = true;
            for (const auto& t : complex.terms) {
                auto c_vw = geometric_shift(spec, v, t.vertex, penner.polarity);
                residues_ok = residues_ok && floor_mod(t.shift.eval(n) - c_vw.eval(n), n - 1) == 0;
            }
            rec.expect("shifts congruent to geometric shift mod (n-1)", residues_ok, "source " + spec.name(v));
        }
    }

    // Count matrix against the unsigned transfer product and its power.
    auto counts = count_matrix(c.word, c.m, spec);
    auto unsigned_m = word_matrix(c.word, c.m, TransferKind::unsigned_count(), spec).integers();
    auto unsigned_1 = word_matrix(c.word, 1, TransferKind::unsigned_count(), spec);
    auto powered = matrix_power(unsigned_1, c.m).integers();
    rec.expect("count matrix = unsigned word matrix", counts == unsigned_m);
    rec.expect("count matrix = unsigned matrix power", counts == powered);

    bool trace_counts_ok = true;
    for (VertexIndex v = 0; v < size; ++v) {
        BigInt column = 0;
        for (VertexIndex w = 0; w < size; ++w) column += counts(w, v);
        trace_counts_ok = trace_counts_ok && column == static_cast<unsigned long>(complexes[v].terms.size());
    }
    rec.expect("trace count = column sum", trace_counts_ok);

    // Odd-n sign pattern.
    if (penner.is_penner) {
        const long odd_n = n % 2 == 1 ? n : n + 1;
        const auto odd_spec = spec.with_dimension(odd_n);
        auto signed_m = word_matrix(c.word, c.m, TransferKind::signed_at(odd_n), odd_spec).integers();
        bool pattern_ok = true;
        bool coherent = true;
        for (VertexIndex v = 0; v < size; ++v) {
            for (VertexIndex w = 0; w < size; ++w) {
                auto parity = geometric_shift(odd_spec, v, w, penner.polarity).eval(odd_n);
                BigInt expected = floor_mod(parity, 2) == 0 ? BigInt(counts(w, v)) : BigInt(-counts(w, v));
                pattern_ok = pattern_ok && signed_m(w, v) == expected;
                coherent = coherent && abs(signed_m(w, v)) == counts(w, v);
            }
        }
        rec.expect("odd-n signed entries = (-1)^c(v,w) x counts", pattern_ok);
        rec.expect("|odd-n signed| = unsigned", coherent);
    }

    // Weighted matrices: totals and shift multisets.
    auto weighted = word_matrix(c.word, c.m, TransferKind::weighted_at(0.0, n), spec).weights();
    bool totals_ok = true;
    bool multisets_ok = true;
    for (VertexIndex v = 0; v < size; ++v) {
        std::vector<std::map<ShiftExpr, long>> per_row(size);
        for (const auto& t : complexes[v].terms) ++per_row[t.vertex][t.shift];
        for (VertexIndex w = 0; w < size; ++w) {
            totals_ok = totals_ok && weighted(w, v).total() == counts(w, v);
            std::map<ShiftExpr, long> from_matrix;
            for (const auto& [shift, count] : weighted(w, v).terms()) from_matrix[shift] = count.get_si();
            multisets_ok = multisets_ok && from_matrix == per_row[w];
        }
    }
    rec.expect("weighted at t=0 = unsigned", totals_ok);
    rec.expect("weighted entries = complex shift multisets", multisets_ok);

    // Entropy of the inverse word.
    if (penner.is_penner) {
        auto forward = exact_entropy(c.word, spec, 1e-9);
        auto backward = exact_entropy(invert_word(c.word), spec, 1e-9);
        Rational gap = abs(forward.midpoint() - backward.midpoint());
        rec.expect("entropy(word) = entropy(inverse word)", gap <= Rational(2e-9) && forward.intersects(backward));
    }
}

VerifyReport run_verification(std::uint64_t seed, std::size_t cases, const ProblemSpec* extra,
                              const CaseLimits& limits) {
    VerifyReport report;
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < cases; ++i) {
        verify_case(random_case(rng, limits), report);
        ++report.cases;
    }
    if (extra) {
        auto one = word_matrix(extra->word, 1, TransferKind::unsigned_count(), extra->plumbing).integers();
        for (long m = 0; m <= 3; ++m) {
            if (total_entries(power(one, static_cast<unsigned long>(m))) > BigInt(limits.max_terms)) break;
            verify_case(VerifyCase{extra->plumbing, extra->word, m}, report);
            ++report.cases;
        }
    }
    return report;
}

}  // namespace penner
