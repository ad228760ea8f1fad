#include "penner/errors.hpp"

namespace penner {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotATree: return "NotATree";
        case ErrorCode::DimensionTooSmall: return "DimensionTooSmall";
        case ErrorCode::BadGrading: return "BadGrading";
        case ErrorCode::UnknownVertex: return "UnknownVertex";
        case ErrorCode::NegativePower: return "NegativePower";
        case ErrorCode::InconsistentTrace: return "InconsistentTrace";
        case ErrorCode::DimensionRequired: return "DimensionRequired";
        case ErrorCode::WeightedUnsupported: return "WeightedUnsupported";
        case ErrorCode::IterationLimit: return "IterationLimit";
        case ErrorCode::NotPennerType: return "NotPennerType";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::SchemaError: return "SchemaError";
    }
    return "Unknown";
}

}  // namespace penner
