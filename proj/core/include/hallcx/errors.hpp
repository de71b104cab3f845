#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hallcx {

/// An enumeration would exceed the configured budget. Never silently truncated.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error("budget exceeded: " + what) {}
};

/// An internal cross-check failed; indicates a bug rather than bad input.
class InconsistencyError : public std::logic_error {
 public:
  explicit InconsistencyError(const std::string& what) : std::logic_error("inconsistency: " + what) {}
};

/// Default cap on raw enumerations (tuples, Hom sweeps, subspace scans).
inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 24;

}  // namespace hallcx
