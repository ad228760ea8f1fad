#pragma once

#include <map>
#include <string>
#include <string_view>

#include "penner/plumbing.hpp"
#include "penner/word.hpp"

namespace penner {

/// Contents of a spec file: the plumbing, the twist word (application order)
/// and free-form metadata.
struct ProblemSpec {
    PlumbingSpec plumbing;
    TwistWord word;
    std::map<std::string, std::string> metadata;
};

bool operator==(const ProblemSpec& a, const ProblemSpec& b);

/// Parses the JSON spec schema:
///   {"tree": {"vertices": [str], "edges": [[str, str]]},
///    "n": int,
///    "grading": [{"edge": [str, str], "s": int}],             (optional)
///    "word_applied_first" | "word_paper_order":
///        [{"vertex": str, "sign": "+" | "-"}],
///    "metadata": {str: str}}                                   (optional)
/// "word_paper_order" lists the last-applied twist first and is reversed here.
/// Throws ParseError, SchemaError, or the domain errors of build_plumbing.
ProblemSpec parse_spec_file(std::string_view bytes);

ProblemSpec load_spec_file(const std::string& path);

/// Canonical JSON form (word under "word_applied_first", full grading list).
std::string emit_spec_json(const ProblemSpec& spec);

}  // namespace penner
