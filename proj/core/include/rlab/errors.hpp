#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rlab {

// Malformed arguments: dimension mismatches, overlapping sets, bad indices.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Text that could not be decoded. `position` is a byte offset for graph6
// and a 1-based line number for edge lists.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InputError(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// An exponential routine was asked to run past its vertex budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& routine, std::size_t n, std::size_t budget)
      : std::runtime_error(routine + ": n = " + std::to_string(n) +
                           " exceeds the budget of " + std::to_string(budget) +
                           " vertices (use --force to override)"),
        n_(n),
        budget_(budget) {}
  std::size_t n() const noexcept { return n_; }
  std::size_t budget() const noexcept { return budget_; }

 private:
  std::size_t n_;
  std::size_t budget_;
};

// A callback or caller broke a documented contract (e.g. a cut provider
// returned an unbalanced cut).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace rlab
