#pragma once

#include <stdexcept>
#include <string>

namespace rlab {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct AlgebraMismatch : Error {
    explicit AlgebraMismatch(const std::string& msg) : Error("AlgebraMismatch: " + msg) {}
};

struct NumericalFailure : Error {
    explicit NumericalFailure(const std::string& msg) : Error("NumericalFailure: " + msg) {}
};

struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error("DomainError: " + msg) {}
};

struct InvalidAlpha : Error {
    explicit InvalidAlpha(const std::string& msg) : Error("InvalidAlpha: " + msg) {}
};

struct InvalidParameter : Error {
    explicit InvalidParameter(const std::string& msg) : Error("InvalidParameter: " + msg) {}
};

struct TraceMismatch : Error {
    explicit TraceMismatch(const std::string& msg) : Error("TraceMismatch: " + msg) {}
};

struct GenerationFailure : Error {
    explicit GenerationFailure(const std::string& msg) : Error("GenerationFailure: " + msg) {}
};

struct PreconditionViolated : Error {
    explicit PreconditionViolated(const std::string& msg) : Error("PreconditionViolated: " + msg) {}
};

struct DegenerateDensity : Error {
    explicit DegenerateDensity(const std::string& msg) : Error("DegenerateDensity: " + msg) {}
};

struct InvalidSchedule : Error {
    explicit InvalidSchedule(const std::string& msg) : Error("InvalidSchedule: " + msg) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error("ParseError: " + msg) {}
};

}  // namespace rlab
