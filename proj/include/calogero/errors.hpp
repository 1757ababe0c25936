#pragma once

#include <stdexcept>
#include <string>

namespace calogero {

// Base class for all errors thrown by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// scalar
struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& m = "division by zero") : Error(m) {}
};
struct ConductorMismatch : Error {
    explicit ConductorMismatch(const std::string& m) : Error(m) {}
};
struct NotDivisible : Error {
    explicit NotDivisible(const std::string& m) : Error(m) {}
};
struct VariableMismatch : Error {
    explicit VariableMismatch(const std::string& m) : Error(m) {}
};

// rootsystem
struct UnknownSystem : Error {
    explicit UnknownSystem(const std::string& m) : Error(m) {}
};
struct RankOutOfRange : Error {
    explicit RankOutOfRange(const std::string& m) : Error(m) {}
};
struct ZeroVector : Error {
    explicit ZeroVector(const std::string& m = "reflection through the zero vector") : Error(m) {}
};
struct AxiomViolation : Error {
    explicit AxiomViolation(const std::string& m) : Error(m) {}
};

// coxgroup
struct ClosureBudgetExceeded : Error {
    explicit ClosureBudgetExceeded(const std::string& m) : Error(m) {}
};
struct NoMinusIdentity : Error {
    explicit NoMinusIdentity(const std::string& m = "-identity is not a group member") : Error(m) {}
};

// glc
struct RestrictionNotBijective : Error {
    explicit RestrictionNotBijective(const std::string& m) : Error(m) {}
};

// algebra
struct SystemMismatch : Error {
    explicit SystemMismatch(const std::string& m = "operands belong to different algebras") : Error(m) {}
};
struct DegreeCapExceeded : Error {
    explicit DegreeCapExceeded(const std::string& m) : Error(m) {}
};

// traceval
struct GlcViolation : Error {
    explicit GlcViolation(const std::string& m) : Error(m) {}
};
struct EigenvalueKappaPresent : Error {
    explicit EigenvalueKappaPresent(const std::string& m) : Error(m) {}
};

// dunkl
struct DivisibilityFailure : Error {
    explicit DivisibilityFailure(const std::string& m) : Error(m) {}
};

// cli / parser
struct SyntaxError : Error {
    std::size_t pos;  // byte offset into the source text
    SyntaxError(const std::string& m, std::size_t p) : Error(m), pos(p) {}
};
struct UnknownGenerator : Error {
    explicit UnknownGenerator(const std::string& m) : Error(m) {}
};

}  // namespace calogero
