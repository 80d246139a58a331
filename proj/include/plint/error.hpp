#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace plint {

enum class ErrorKind {
    AllZero,
    ZeroArgument,
    NotPrime,
    InvalidInput,
    DegreeMismatch,
    NotDivisible,
    ZeroDivisor,
    NotOnCurve,
    DegreeTooSmall,
    OnDivisor,
    NotPrimitive,
    ZeroParameter,
    FactorizationMismatch,
    BaseWitnessOffDivisor,
    ParameterViolation,
    IrrationalRoot,
    EmptyVector,
    CongruenceFailure,
    ExhaustedSearch,
    IndeterminatePoint,
    NotALine,
    TooManyLines,
    NotSingular,
    ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every domain failure in the library is reported through this type; the
// kind is what callers (and the CLI's exit-code contract) dispatch on.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace plint
