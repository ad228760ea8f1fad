#include "penner/cli.hpp"

#include <iomanip>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "penner/entropy.hpp"
#include "penner/errors.hpp"
#include "penner/report_io.hpp"
#include "penner/spec_io.hpp"
#include "penner/trace_paths.hpp"
#include "penner/transfer.hpp"
#include "penner/twist_calculus.hpp"
#include "penner/verify.hpp"

namespace penner {

using ordered_json = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string interval(const RadiusEnclosure& e, int digits = 12) {
    return "[" + to_decimal(e.lo, digits, Rounding::down) + ", " + to_decimal(e.hi, digits, Rounding::up) + "]";
}

ordered_json penner_json(const PennerReport& r) {
    ordered_json j;
    j["is_penner"] = r.is_penner;
    j["polarity"] = to_string(r.polarity);
    j["covers_all_vertices"] = r.covers_all_vertices;
    for (const auto& v : r.violations) j["violations"].push_back({{"index", v.index}, {"reason", v.reason}});
    return j;
}

std::string cmd_check(const ProblemSpec& problem, bool as_json) {
    const auto& p = problem.plumbing;
    auto penner = validate_penner(problem.word, p);
    if (as_json) {
        ordered_json j;
        j["vertices"] = p.tree().names();
        j["n"] = p.n();
        j["plus"] = ordered_json::array();
        j["minus"] = ordered_json::array();
        for (auto v : p.parts().plus) j["plus"].push_back(p.name(v));
        for (auto v : p.parts().minus) j["minus"].push_back(p.name(v));
        j["grading"] = ordered_json::array();
        for (const auto& [v, w] : p.tree().edges()) {
            for (auto [a, b] : {std::pair{v, w}, std::pair{w, v}}) {
                j["grading"].push_back({{"from", p.name(a)},
                                        {"to", p.name(b)},
                                        {"s", to_string(p.s(a, b))},
                                        {"value", p.s(a, b).eval(p.n())}});
            }
        }
        j["penner"] = penner_json(penner);
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    auto names = [&](const std::vector<VertexIndex>& vs) {
        std::string s;
        for (auto v : vs) s += (s.empty() ? "" : " ") + p.name(v);
        return s.empty() ? std::string("(none)") : s;
    };
    std::vector<VertexIndex> all(p.size());
    for (VertexIndex v = 0; v < p.size(); ++v) all[v] = v;
    out << "vertices: " << names(all) << "\n";
    out << "n: " << p.n() << "\n";
    out << "V+: " << names(p.parts().plus) << "\n";
    out << "V-: " << names(p.parts().minus) << "\n";
    out << "grading:\n";
    for (const auto& [v, w] : p.tree().edges()) {
        out << "  s(" << p.name(v) << "," << p.name(w) << ") = " << to_string(p.s(v, w)) << "    s(" << p.name(w)
            << "," << p.name(v) << ") = " << to_string(p.s(w, v)) << "\n";
    }
    out << "word (applied first): " << format_word(problem.word, p) << "\n";
    out << "penner: " << (penner.is_penner ? "yes" : "no") << " (" << to_string(penner.polarity) << ")\n";
    for (const auto& v : penner.violations) out << "  violation at letter " << v.index << ": " << v.reason << "\n";
    out << "every vertex twisted: " << (penner.covers_all_vertices ? "yes" : "no") << "\n";
    return out.str();
}

std::string shift_text(const ShiftExpr& s, std::optional<long> eval_n) {
    return eval_n ? std::to_string(s.eval(*eval_n)) : to_string(s);
}

std::string cmd_complex(const ProblemSpec& problem, const std::string& cocore, long power, std::optional<long> eval_n,
                        bool as_json) {
    const auto& p = problem.plumbing;
    if (eval_n) p.with_dimension(*eval_n);
    auto complex = apply_word(problem.word, p.index_of(cocore), power, p);
    if (as_json) {
        ordered_json j;
        j["cocore"] = cocore;
        j["power"] = power;
        if (eval_n) j["n"] = *eval_n;
        j["terms"] = ordered_json::array();
        for (const auto& t : complex.terms) {
            j["terms"].push_back({{"vertex", p.name(t.vertex)},
                                  {"shift", shift_text(t.shift, eval_n)},
                                  {"path", format_trace(t.trace, p)}});
        }
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "# " << complex.terms.size() << " terms of phi^" << power << "(L_" << cocore << ")\n";
    out << std::left << std::setw(8) << "vertex" << std::setw(10) << "shift"
        << "path\n";
    for (const auto& t : complex.terms) {
        out << std::left << std::setw(8) << p.name(t.vertex) << std::setw(10) << shift_text(t.shift, eval_n)
            << format_trace(t.trace, p) << "\n";
    }
    return out.str();
}

std::string cmd_paths(const ProblemSpec& problem, const std::string& cocore, long power, bool as_json) {
    const auto& p = problem.plumbing;
    auto traces = enumerate_traces(problem.word, power, p.index_of(cocore), p);
    if (as_json) {
        auto expanded = repeat_word(problem.word, power);
        ordered_json j;
        j["cocore"] = cocore;
        j["power"] = power;
        j["paths"] = ordered_json::array();
        for (const auto& t : traces) {
            j["paths"].push_back({{"path", format_trace(t, p)},
                                  {"indices", t.indices},
                                  {"shift", to_string(shift_of_trace(t, expanded, p))}});
        }
        return j.dump(2) + "\n";
    }
    std::string out;
    for (const auto& t : traces) out += format_trace(t, p) + "\n";
    return out;
}

std::string cmd_matrix(const ProblemSpec& problem, const std::string& kind_name, std::optional<long> n,
                       std::optional<double> t, long power, bool as_json) {
    const auto& p = problem.plumbing;
    TransferKind kind;
    if (kind_name == "unsigned") {
        kind = TransferKind::unsigned_count();
    } else if (kind_name == "signed") {
        kind = TransferKind::signed_at(n.value_or(p.n()));
    } else if (kind_name == "weighted") {
        kind = TransferKind{MatrixKind::weighted, n.value_or(p.n()), t};
    } else {
        throw UsageError("--kind must be signed, unsigned or weighted");
    }
    auto matrix = word_matrix(problem.word, power, kind, p);
    std::vector<std::vector<std::string>> rows(matrix.size());
    for (std::size_t r = 0; r < matrix.size(); ++r) {
        for (std::size_t c = 0; c < matrix.size(); ++c) {
            if (kind.kind != MatrixKind::weighted) {
                rows[r].push_back(matrix.integers()(r, c).get_str());
            } else if (t) {
                rows[r].push_back(format_double(matrix.weights()(r, c).evaluate(*t, *kind.n)));
            } else {
                rows[r].push_back(matrix.weights()(r, c).to_string());
            }
        }
    }
    if (as_json) {
        ordered_json j;
        j["kind"] = kind_name;
        if (kind.n) j["n"] = *kind.n;
        if (t) j["t"] = format_double(*t);
        j["power"] = power;
        j["vertices"] = p.tree().names();
        j["rows"] = rows;
        return j.dump(2) + "\n";
    }
    std::size_t width = 1;
    for (const auto& row : rows) {
        for (const auto& cell : row) width = std::max(width, cell.size());
    }
    std::ostringstream out;
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) out << (c ? " " : "") << std::setw(static_cast<int>(width)) << row[c];
        out << "\n";
    }
    return out.str();
}

std::string cmd_entropy(const ProblemSpec& problem, const EntropyOptions& options, bool as_json) {
    const auto& p = problem.plumbing;
    auto report = entropy_report(p, problem.word, options);
    if (as_json) return emit_json(report, p);
    std::ostringstream out;
    out << "word (applied first): " << format_word(report.word, p) << "\n";
    out << "penner: " << (report.penner.is_penner ? "yes" : "no") << " (" << to_string(report.penner.polarity)
        << ")\n";
    out << "empirical entropy (1/m) log(total count):\n";
    for (const auto& e : report.empirical) out << "  m=" << e.m << "  " << format_double(e.value) << "\n";
    out << "spectral radius (unsigned): " << interval(report.radius) << "  [" << to_string(report.radius.method)
        << "]\n";
    out << "categorical entropy (log radius): " << interval(report.exact) << "\n";
    out << "signed radius, n=" << report.signed_odd.n << ": " << interval(report.signed_odd.radius) << "\n";
    out << "signed radius, n=" << report.signed_even.n << ": " << interval(report.signed_even.radius) << "\n";
    for (const auto& w : report.t_weighted) {
        out << "t=" << format_double(w.t) << " log radius (EXPLORATORY): " << interval(w.log_radius) << "\n";
    }
    for (const auto& note : report.notes) out << "note: " << note << "\n";
    return out.str();
}

std::string cmd_verify(const std::optional<ProblemSpec>& problem, std::uint64_t seed, std::size_t cases,
                       bool as_json, bool& ok) {
    auto report = run_verification(seed, cases, problem ? &*problem : nullptr);
    ok = report.ok();
    if (!as_json) return report.summary();
    ordered_json j;
    j["seed"] = seed;
    j["cases"] = report.cases;
    j["ok"] = ok;
    j["checks"] = ordered_json::array();
    for (const auto& c : report.checks) {
        ordered_json entry{{"name", c.name}, {"passed", c.passed}, {"failed", c.failed}};
        if (!c.failures.empty()) entry["failures"] = c.failures;
        j["checks"].push_back(entry);
    }
    return j.dump(2) + "\n";
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& args) {
    CLI::App app{"Categorical entropy of Penner-type Dehn twist words on tree plumbings", "penner-entropy"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string spec_path;
    bool as_json = false;
    app.add_option("--spec", spec_path, "Spec file (JSON)");
    app.add_flag("--json", as_json, "Emit JSON");

    auto* check = app.add_subcommand("check", "Penner validation and bipartition dump");

    std::string cocore;
    long power = 1;
    std::optional<long> eval_n;
    auto* complex = app.add_subcommand("complex", "Components of the rewritten complex phi^M(L_V)");
    complex->add_option("--cocore", cocore, "Source cocore vertex")->required();
    complex->add_option("--power", power, "Power M of the word");
    complex->add_option("--eval-n", eval_n, "Evaluate shifts at this dimension");

    auto* paths = app.add_subcommand("paths", "Trace paths of phi^M(L_V), terminal vertex first");
    paths->add_option("--cocore", cocore, "Source cocore vertex")->required();
    paths->add_option("--power", power, "Power M of the word");

    std::string kind_name = "unsigned";
    std::optional<long> matrix_n;
    std::optional<double> matrix_t;
    auto* matrix = app.add_subcommand("matrix", "Transfer matrix of the word");
    matrix->add_option("--kind", kind_name, "signed, unsigned or weighted")
        ->check(CLI::IsMember({"signed", "unsigned", "weighted"}));
    matrix->add_option("--n", matrix_n, "Dimension for signed/weighted matrices (default: spec n)");
    matrix->add_option("--t", matrix_t, "Evaluate weighted entries at this t");
    matrix->add_option("--power", power, "Power of the word");

    EntropyOptions options;
    auto* entropy = app.add_subcommand("entropy", "Entropy report");
    entropy->add_option("--m-max", options.m_max, "Largest power in the empirical sequence")
        ->check(CLI::PositiveNumber);
    entropy->add_option("--tol", options.tol, "Width of the entropy enclosure")->check(CLI::PositiveNumber);
    entropy->add_option("--t", options.t_values, "Exploratory t-weighted growth rates");
    entropy->add_flag("--allow-non-penner", options.allow_non_penner, "Report the heuristic value for other words");

    std::uint64_t seed = 1;
    std::size_t cases = 200;
    auto* verify = app.add_subcommand("verify", "Randomized oracle-equivalence and invariant suites");
    verify->add_option("--seed", seed, "Random seed");
    verify->add_option("--cases", cases, "Number of random cases");

    std::vector<std::string> argv_storage{"penner-entropy"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_storage) argv.push_back(s.data());

    CommandResult result;
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        std::ostringstream out, err;
        int code = app.exit(e, out, err);
        result.out = out.str();
        result.err = err.str();
        result.exit_code = code == 0 ? 0 : 2;
        return result;
    }

    try {
        std::optional<ProblemSpec> problem;
        if (!spec_path.empty()) {
            problem = load_spec_file(spec_path);
        } else if (!verify->parsed()) {
            throw UsageError("--spec FILE is required");
        }
        if (check->parsed()) {
            result.out = cmd_check(*problem, as_json);
        } else if (complex->parsed()) {
            result.out = cmd_complex(*problem, cocore, power, eval_n, as_json);
        } else if (paths->parsed()) {
            result.out = cmd_paths(*problem, cocore, power, as_json);
        } else if (matrix->parsed()) {
            result.out = cmd_matrix(*problem, kind_name, matrix_n, matrix_t, power, as_json);
        } else if (entropy->parsed()) {
            result.out = cmd_entropy(*problem, options, as_json);
        } else if (verify->parsed()) {
            bool ok = false;
            result.out = cmd_verify(problem, seed, cases, as_json, ok);
            result.exit_code = ok ? 0 : 1;
        }
    } catch (const UsageError& e) {
        result.err = std::string("usage error: ") + e.what() + "\n";
        result.exit_code = 2;
    } catch (const Error& e) {
        result.err = std::string("error: ") + e.what() + "\n";
        result.exit_code = 1;
    } catch (const std::invalid_argument& e) {
        result.err = std::string("usage error: ") + e.what() + "\n";
        result.exit_code = 2;
    }
    return result;
}

}  // namespace penner
