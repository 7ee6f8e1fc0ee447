#pragma once

#include <stdexcept>
#include <string>

namespace svineq {

// Shape / arity mismatches between operands.
struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A mathematical hypothesis (Hermitian, PSD, normal, ...) failed its predicate.
struct HypothesisError : std::runtime_error {
    HypothesisError(const std::string& what, double witness = 0.0)
        : std::runtime_error(what), witness_value(witness) {}
    double witness_value;  // e.g. lambda_min for a failed PSD check
};

// Iterative kernel failed to converge within its sweep budget.
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid parameter value (p < 1, k out of range, unknown class, ...).
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Caller broke an interface contract (unsorted spectrum, unknown id, ...).
struct ContractError : std::logic_error {
    using std::logic_error::logic_error;
};

// Value outside the mathematical domain (negative power of singular matrix).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

}  // namespace svineq
