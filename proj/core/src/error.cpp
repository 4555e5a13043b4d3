#include "regconn/error.hpp"

namespace regconn {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::SelfLoop: return "SelfLoop";
        case ErrorKind::EmptySubset: return "EmptySubset";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
        case ErrorKind::InvalidPartition: return "InvalidPartition";
        case ErrorKind::NotSymmetrizable: return "NotSymmetrizable";
        case ErrorKind::SizeMismatch: return "SizeMismatch";
        case ErrorKind::InvalidParams: return "InvalidParams";
        case ErrorKind::NotRegular: return "NotRegular";
        case ErrorKind::BoundNotApplicable: return "BoundNotApplicable";
        case ErrorKind::GraphDisconnected: return "GraphDisconnected";
        case ErrorKind::InfeasibleParams: return "InfeasibleParams";
        case ErrorKind::ParamMismatch: return "ParamMismatch";
        case ErrorKind::GenerationFailure: return "GenerationFailure";
        case ErrorKind::NumericFailure: return "NumericFailure";
    }
    return "Unknown";
}

}  // namespace regconn
