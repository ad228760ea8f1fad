#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace penner {

enum class ErrorCode {
    NotATree,
    DimensionTooSmall,
    BadGrading,
    UnknownVertex,
    NegativePower,
    InconsistentTrace,
    DimensionRequired,
    WeightedUnsupported,
    IterationLimit,
    NotPennerType,
    ParseError,
    SchemaError,
};

std::string_view to_string(ErrorCode code);

/// Domain error raised by every module; the CLI maps it to exit code 1
/// (ParseError/SchemaError included).
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace penner
