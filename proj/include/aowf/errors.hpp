#pragma once

#include <stdexcept>
#include <string>

namespace aowf {

/// Thrown when an enumeration or check would exceed its explicit budget.
/// Checkers refuse loudly instead of silently sampling.
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when a bounded generation/search loop exhausts its attempts,
/// signalling infeasible parameters rather than a bug.
class GenerationError : public std::runtime_error {
 public:
  explicit GenerationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace aowf
