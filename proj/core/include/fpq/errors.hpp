#pragma once

#include <stdexcept>
#include <string>

namespace fpq {

// Bad arguments, inconsistent dimensions, malformed input.
struct UsageError : std::invalid_argument {
    explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

// An enumeration or search would exceed the configured point budget.
struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// Default per-call enumeration budget, in points.
inline constexpr std::uint64_t kDefaultBudget = 2'000'000;

}  // namespace fpq
