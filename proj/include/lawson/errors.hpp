#pragma once

#include <stdexcept>
#include <string>

namespace lawson {

// Evaluation requested at z = 0, where the calibration field is undefined.
struct ApexError : std::domain_error {
    explicit ApexError(const std::string& what) : std::domain_error(what) {}
};

// Certified operation requested for a cone pair outside the supported family.
struct UncertifiedConeError : std::domain_error {
    explicit UncertifiedConeError(const std::string& what) : std::domain_error(what) {}
};

// A branch formula was evaluated where its power variable degenerates (d < 1).
struct DegenerateAxisError : std::domain_error {
    explicit DegenerateAxisError(const std::string& what) : std::domain_error(what) {}
};

// The normalized field g is undefined because the gradient vanishes.
struct ZeroGradientError : std::domain_error {
    explicit ZeroGradientError(const std::string& what) : std::domain_error(what) {}
};

// An inequality step of a certified chain failed verification.
struct ChainStepViolation : std::logic_error {
    explicit ChainStepViolation(const std::string& what) : std::logic_error(what) {}
};

// Interval sweep could not separate the bound from the claim at this resolution.
struct IntervalTooWideError : std::runtime_error {
    explicit IntervalTooWideError(const std::string& what) : std::runtime_error(what) {}
};

// Finite-difference oracle invoked with a step too large for the requested point.
struct OracleUnreliableError : std::invalid_argument {
    explicit OracleUnreliableError(const std::string& what) : std::invalid_argument(what) {}
};

// Normal graph parameters produce a curve leaving the open quarter plane.
struct EmbeddednessError : std::invalid_argument {
    explicit EmbeddednessError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace lawson
