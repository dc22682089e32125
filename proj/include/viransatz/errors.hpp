#pragma once

#include <stdexcept>
#include <string>

namespace viransatz {

enum class ErrorCode {
    OddDegree,
    NoConfinement,
    NegativeRadicand,
    BadInput,
    NonFiniteIntegrand,
    BracketFailure,
    ZeroMoment,
    NonPositiveMoment,
    ConvergenceFailure,
    DomainTooSmall,
    DomainError,
};

const char* error_code_name(ErrorCode code);

/// Malformed caller input (bad potential, bad config). CLI exit code 2.
class ValidationError : public std::runtime_error {
public:
    ValidationError(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

/// A numerical procedure could not meet its contract. CLI exit code 3.
class NumericalError : public std::runtime_error {
public:
    NumericalError(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

}  // namespace viransatz
