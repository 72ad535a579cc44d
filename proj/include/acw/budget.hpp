#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "acw/counting.hpp"

namespace acw {

// Work cap for exhaustive scans and constructive enumeration, measured in
// words touched. 2^22 keeps a full scan in the seconds range.
inline constexpr std::uint64_t default_budget = std::uint64_t{1} << 22;

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t budget)
      : std::runtime_error(what), budget_(budget) {}
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t budget_;
};

namespace detail {

inline void require_budget(const Count& cost, std::uint64_t budget,
                           const char* what) {
  if (cost > budget) {
    throw BudgetExceeded(std::string(what) + " needs " + cost.str() +
                             " words, over the budget of " +
                             std::to_string(budget),
                         budget);
  }
}

}  // namespace detail

}  // namespace acw
