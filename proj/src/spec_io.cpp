#include "penner/spec_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "penner/errors.hpp"

namespace penner {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

bool operator==(const ProblemSpec& a, const ProblemSpec& b) {
    const auto& pa = a.plumbing;
    const auto& pb = b.plumbing;
    if (pa.n() != pb.n() || pa.tree().names() != pb.tree().names() || pa.tree().edges() != pb.tree().edges()) {
        return false;
    }
    for (const auto& [v, w] : pa.tree().edges()) {
        if (pa.s(v, w) != pb.s(v, w) || pa.s(w, v) != pb.s(w, v)) return false;
    }
    return a.word == b.word && a.metadata == b.metadata;
}

namespace {

[[noreturn]] void schema_error(const std::string& message) { throw Error(ErrorCode::SchemaError, message); }

json parse_strict(std::string_view bytes) {
    std::vector<std::set<std::string>> open_objects;
    std::string duplicate;
    json::parser_callback_t callback = [&](int, json::parse_event_t event, json& parsed) {
        switch (event) {
            case json::parse_event_t::object_start: open_objects.emplace_back(); break;
            case json::parse_event_t::object_end:
                if (!open_objects.empty()) open_objects.pop_back();
                break;
            case json::parse_event_t::key:
                if (!open_objects.empty() && !open_objects.back().insert(parsed.get<std::string>()).second &&
                    duplicate.empty()) {
                    duplicate = parsed.get<std::string>();
                }
                break;
            default: break;
        }
        return true;
    };
    json doc;
    try {
        doc = json::parse(bytes.begin(), bytes.end(), callback);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
    if (!duplicate.empty()) schema_error("duplicate key \"" + duplicate + "\"");
    return doc;
}

void only_keys(const json& object, const std::set<std::string>& allowed, const std::string& where) {
    if (!object.is_object()) schema_error(where + " must be an object");
    for (const auto& [key, value] : object.items()) {
        if (!allowed.count(key)) schema_error("unknown key \"" + key + "\" in " + where);
    }
}

const json& required(const json& object, const std::string& key, const std::string& where) {
    auto it = object.find(key);
    if (it == object.end()) schema_error("missing key \"" + key + "\" in " + where);
    return *it;
}

std::string as_string(const json& value, const std::string& where) {
    if (!value.is_string()) schema_error(where + " must be a string");
    return value.get<std::string>();
}

long as_integer(const json& value, const std::string& where) {
    if (!value.is_number_integer()) schema_error(where + " must be an integer");
    return value.get<long>();
}

Edge as_edge(const json& value, const std::string& where) {
    if (!value.is_array() || value.size() != 2) schema_error(where + " must be a pair of vertex names");
    return {as_string(value[0], where), as_string(value[1], where)};
}

TwistWord parse_word(const json& letters, const Tree& tree, const std::string& where) {
    if (!letters.is_array()) schema_error(where + " must be an array");
    TwistWord word;
    for (const auto& letter : letters) {
        only_keys(letter, {"vertex", "sign"}, where + " letter");
        auto vertex = as_string(required(letter, "vertex", where), where + ".vertex");
        auto sign = as_string(required(letter, "sign", where), where + ".sign");
        if (sign != "+" && sign != "-") schema_error(where + ".sign must be \"+\" or \"-\"");
        word.push_back({tree.index_of(vertex), sign == "+" ? 1 : -1});
    }
    return word;
}

}  // namespace

ProblemSpec parse_spec_file(std::string_view bytes) {
    json doc = parse_strict(bytes);
    only_keys(doc, {"tree", "n", "grading", "word_applied_first", "word_paper_order", "metadata"}, "spec");

    const auto& tree = required(doc, "tree", "spec");
    only_keys(tree, {"vertices", "edges"}, "tree");
    const auto& vertex_list = required(tree, "vertices", "tree");
    if (!vertex_list.is_array()) schema_error("tree.vertices must be an array");
    std::vector<std::string> vertices;
    for (const auto& v : vertex_list) vertices.push_back(as_string(v, "tree.vertices[]"));
    const auto& edge_list = required(tree, "edges", "tree");
    if (!edge_list.is_array()) schema_error("tree.edges must be an array");
    std::vector<Edge> edges;
    for (const auto& e : edge_list) edges.push_back(as_edge(e, "tree.edges[]"));

    long n = as_integer(required(doc, "n", "spec"), "n");

    std::vector<GradingOverride> overrides;
    if (auto it = doc.find("grading"); it != doc.end()) {
        if (!it->is_array()) schema_error("grading must be an array");
        for (const auto& entry : *it) {
            only_keys(entry, {"edge", "s"}, "grading entry");
            overrides.push_back({as_edge(required(entry, "edge", "grading entry"), "grading.edge"),
                                 as_integer(required(entry, "s", "grading entry"), "grading.s")});
        }
    }

    bool applied = doc.contains("word_applied_first");
    bool paper = doc.contains("word_paper_order");
    if (applied && paper) schema_error("give exactly one of word_applied_first and word_paper_order, not both");
    if (!applied && !paper) schema_error("missing word: give word_applied_first or word_paper_order");

    PlumbingSpec plumbing = build_plumbing(std::move(vertices), edges, n, overrides);
    TwistWord word = applied ? parse_word(doc["word_applied_first"], plumbing.tree(), "word_applied_first")
                             : parse_word(doc["word_paper_order"], plumbing.tree(), "word_paper_order");
    if (paper) std::reverse(word.begin(), word.end());

    std::map<std::string, std::string> metadata;
    if (auto it = doc.find("metadata"); it != doc.end()) {
        if (!it->is_object()) schema_error("metadata must be an object");
        for (const auto& [key, value] : it->items()) metadata[key] = as_string(value, "metadata." + key);
    }
    return ProblemSpec{std::move(plumbing), std::move(word), std::move(metadata)};
}

ProblemSpec load_spec_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::ParseError, "cannot read spec file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_spec_file(buffer.str());
}

std::string emit_spec_json(const ProblemSpec& spec) {
    const auto& p = spec.plumbing;
    ordered_json doc;
    doc["tree"]["vertices"] = p.tree().names();
    doc["tree"]["edges"] = ordered_json::array();
    doc["grading"] = ordered_json::array();
    for (const auto& [v, w] : p.tree().edges()) {
        doc["tree"]["edges"].push_back({p.name(v), p.name(w)});
        // emit the direction whose value is a plain constant
        bool forward = p.s(v, w).b == 0;
        auto from = forward ? v : w;
        auto to = forward ? w : v;
        doc["grading"].push_back({{"edge", {p.name(from), p.name(to)}}, {"s", p.s(from, to).a}});
    }
    doc["n"] = p.n();
    doc["word_applied_first"] = ordered_json::array();
    for (const auto& letter : spec.word) {
        doc["word_applied_first"].push_back(
            {{"vertex", p.name(letter.vertex)}, {"sign", letter.sign > 0 ? "+" : "-"}});
    }
    if (!spec.metadata.empty()) doc["metadata"] = spec.metadata;
    return doc.dump(2) + "\n";
}

}  // namespace penner
