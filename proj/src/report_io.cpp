#include "penner/report_io.hpp"

#include <json.hpp>

#include "penner/errors.hpp"

namespace penner {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string exact_decimal(const Rational& q) { return to_decimal(q, kReportDigits, Rounding::nearest); }

ordered_json enclosure_json(const RadiusEnclosure& e, bool with_method) {
    ordered_json out;
    out["lo"] = exact_decimal(e.lo);
    out["hi"] = exact_decimal(e.hi);
    if (with_method) out["method"] = to_string(e.method);
    return out;
}

RadiusMethod parse_method(const std::string& s) {
    if (s == "charpoly") return RadiusMethod::charpoly;
    if (s == "collatz_wielandt") return RadiusMethod::collatz_wielandt;
    if (s == "automatic") return RadiusMethod::automatic;
    throw Error(ErrorCode::SchemaError, "unknown method '" + s + "'");
}

RadiusEnclosure parse_enclosure(const ordered_json& j, RadiusMethod fallback) {
    RadiusEnclosure e;
    e.lo = parse_decimal(j.at("lo").get<std::string>());
    e.hi = parse_decimal(j.at("hi").get<std::string>());
    e.method = j.contains("method") ? parse_method(j.at("method").get<std::string>()) : fallback;
    return e;
}

Polarity parse_polarity(const std::string& s) {
    if (s == "standard") return Polarity::standard;
    if (s == "inverted") return Polarity::inverted;
    if (s == "none") return Polarity::none;
    throw Error(ErrorCode::SchemaError, "unknown polarity '" + s + "'");
}

}  // namespace

std::string emit_json(const EntropyReport& report, const PlumbingSpec& spec) {
    ordered_json doc;
    doc["word_applied_first"] = ordered_json::array();
    for (const auto& letter : report.word) {
        doc["word_applied_first"].push_back(
            {{"vertex", spec.name(letter.vertex)}, {"sign", letter.sign > 0 ? "+" : "-"}});
    }
    ordered_json penner;
    penner["is_penner"] = report.penner.is_penner;
    penner["polarity"] = to_string(report.penner.polarity);
    penner["covers_all_vertices"] = report.penner.covers_all_vertices;
    if (!report.penner.violations.empty()) {
        for (const auto& v : report.penner.violations) {
            penner["violations"].push_back({{"index", v.index}, {"reason", v.reason}});
        }
    }
    doc["penner"] = penner;
    if (!report.empirical.empty()) {
        for (const auto& p : report.empirical) {
            doc["empirical_entropy"].push_back({{"m", p.m}, {"value", format_double(p.value)}});
        }
    }
    doc["spectral_radius"] = enclosure_json(report.radius, true);
    doc["exact_entropy"] = enclosure_json(report.exact, false);
    doc["signed_odd"] = {{"n", report.signed_odd.n}, {"radius", enclosure_json(report.signed_odd.radius, true)}};
    doc["signed_even"] = {{"n", report.signed_even.n}, {"radius", enclosure_json(report.signed_even.radius, true)}};
    if (!report.t_weighted.empty()) {
        for (const auto& w : report.t_weighted) {
            doc["t_weighted"].push_back({{"t", format_double(w.t)},
                                         {"log_radius", enclosure_json(w.log_radius, true)},
                                         {"label", "EXPLORATORY"}});
        }
    }
    if (!report.notes.empty()) doc["notes"] = report.notes;
    return doc.dump(2) + "\n";
}

EntropyReport parse_report_json(std::string_view bytes, const PlumbingSpec& spec) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(bytes.begin(), bytes.end());
    } catch (const ordered_json::parse_error& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
    try {
        EntropyReport report;
        for (const auto& letter : doc.at("word_applied_first")) {
            report.word.push_back({spec.index_of(letter.at("vertex").get<std::string>()),
                                   letter.at("sign").get<std::string>() == "+" ? 1 : -1});
        }
        const auto& penner = doc.at("penner");
        report.penner.is_penner = penner.at("is_penner").get<bool>();
        report.penner.polarity = parse_polarity(penner.at("polarity").get<std::string>());
        report.penner.covers_all_vertices = penner.at("covers_all_vertices").get<bool>();
        if (penner.contains("violations")) {
            for (const auto& v : penner.at("violations")) {
                report.penner.violations.push_back(
                    {v.at("index").get<std::size_t>(), v.at("reason").get<std::string>()});
            }
        }
        if (doc.contains("empirical_entropy")) {
            for (const auto& p : doc.at("empirical_entropy")) {
                report.empirical.push_back({p.at("m").get<long>(), parse_double(p.at("value").get<std::string>())});
            }
        }
        report.radius = parse_enclosure(doc.at("spectral_radius"), RadiusMethod::charpoly);
        report.exact = parse_enclosure(doc.at("exact_entropy"), report.radius.method);
        for (auto [key, target] : {std::pair{"signed_odd", &report.signed_odd}, {"signed_even", &report.signed_even}}) {
            const auto& s = doc.at(key);
            target->n = s.at("n").get<long>();
            target->radius = parse_enclosure(s.at("radius"), RadiusMethod::charpoly);
        }
        if (doc.contains("t_weighted")) {
            for (const auto& w : doc.at("t_weighted")) {
                report.t_weighted.push_back({parse_double(w.at("t").get<std::string>()),
                                             parse_enclosure(w.at("log_radius"), RadiusMethod::collatz_wielandt)});
            }
        }
        if (doc.contains("notes")) report.notes = doc.at("notes").get<std::vector<std::string>>();
        return report;
    } catch (const ordered_json::exception& e) {
        throw Error(ErrorCode::SchemaError, e.what());
    }
}

std::string emit_json(const Matrix<BigInt>& m) {
    ordered_json doc;
    doc["rows"] = ordered_json::array();
    for (std::size_t r = 0; r < m.size(); ++r) {
        ordered_json row = ordered_json::array();
        for (std::size_t c = 0; c < m.size(); ++c) row.push_back(m(r, c).get_str());
        doc["rows"].push_back(row);
    }
    return doc.dump();
}

}  // namespace penner
