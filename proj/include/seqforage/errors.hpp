#pragma once

#include <stdexcept>
#include <string>

namespace seqforage {

/// Invalid or inconsistent parameters (env, dp config, sweep config).
class ConfigError : public std::invalid_argument {
public:
    ConfigError(std::string field, const std::string& what)
        : std::invalid_argument(field + ": " + what), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Non-finite log-likelihood ratio.
class InvalidBelief : public DomainError {
public:
    using DomainError::DomainError;
};

/// Likelihood at 0 or 1 where a proper posterior is required.
class DegenerateBelief : public DomainError {
public:
    using DomainError::DomainError;
};

/// Operation on an object that is not in a usable state (unsolved table, mismatched env).
class StateError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Time index past the budget.
class OutOfHorizon : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

}  // namespace seqforage
