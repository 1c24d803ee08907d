#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace braidsplit {

/// Caller supplied arguments outside an operation's precondition.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Mathematically undefined request, e.g. evaluating a measure at its pole.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An exact identity that must hold by construction did not. Always a bug.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Brute-force enumeration would exceed the configured candidate budget.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(std::uint64_t required, std::uint64_t budget)
        : std::runtime_error("enumeration budget exceeded: needs " + std::to_string(required) +
                             " candidates, budget is " + std::to_string(budget)),
          required_(required),
          budget_(budget) {}

    std::uint64_t required() const noexcept { return required_; }
    std::uint64_t budget() const noexcept { return budget_; }

private:
    std::uint64_t required_;
    std::uint64_t budget_;
};

}  // namespace braidsplit
