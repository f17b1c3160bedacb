#pragma once

#include <cstddef>

namespace rlab {

// Default vertex budgets for the exponential routines.
inline constexpr std::size_t kMinBalBudget = 24;
inline constexpr std::size_t kRankExpansionBudget = 24;
inline constexpr std::size_t kMaxMinBalBudget = 16;
inline constexpr std::size_t kRankwidthBudget = 16;
inline constexpr std::size_t kTangleBudget = 14;
inline constexpr std::size_t kWellBehavedBudget = 20;  // on |X|
inline constexpr std::size_t kVcBudget = 20;           // on |X|

struct SearchOptions {
  std::size_t budget = 0;  // 0 selects the routine's default
  bool force = false;      // run past the budget (hard representation limits still apply)
  unsigned threads = 1;
};

// Throws BudgetExceeded when n is over budget (unless forced) or over the
// representation limit `hard_cap` (always).
void enforce_budget(const char* routine, std::size_t n, const SearchOptions& opts,
                    std::size_t default_budget, std::size_t hard_cap);

}  // namespace rlab
