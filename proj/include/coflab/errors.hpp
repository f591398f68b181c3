#pragma once

#include <stdexcept>
#include <string>

namespace coflab {

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct PoleAtPoint : DomainError {
    using DomainError::DomainError;
};

struct PoleAtNonpositiveInteger : DomainError {
    using DomainError::DomainError;
};

struct NotHyperbolic : DomainError {
    using DomainError::DomainError;
};

struct UnsupportedDegree : DomainError {
    using DomainError::DomainError;
};

struct CoincidentPoints : DomainError {
    using DomainError::DomainError;
};

struct DivergentParameterRegion : DomainError {
    using DomainError::DomainError;
};

struct UnsupportedN1 : DomainError {
    using DomainError::DomainError;
};

struct MissingA : DomainError {
    using DomainError::DomainError;
};

struct NonFiniteIntegrand : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotConverged : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TailBoundExceedsTolerance : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace coflab
