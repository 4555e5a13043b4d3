#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace regconn {

enum class ErrorKind {
    IndexOutOfRange,
    SelfLoop,
    EmptySubset,
    ParseError,
    ConvergenceFailure,
    InvalidPartition,
    NotSymmetrizable,
    SizeMismatch,
    InvalidParams,
    NotRegular,
    BoundNotApplicable,
    GraphDisconnected,
    InfeasibleParams,
    ParamMismatch,
    GenerationFailure,
    NumericFailure,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so that
/// front-ends can map it to an exit status without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace regconn
