#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qwalk {

/// Norm drift or non-finite amplitudes detected in a state.
class StateCorruption : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// The stored amplitude count would exceed the configured budget.
class BudgetExceeded : public std::runtime_error {
  public:
    BudgetExceeded(std::size_t needed, std::size_t budget)
        : std::runtime_error("amplitude budget exceeded: need " + std::to_string(needed) + ", budget " +
                             std::to_string(budget)),
          needed_(needed),
          budget_(budget) {}

    std::size_t needed() const { return needed_; }
    std::size_t budget() const { return budget_; }

  private:
    std::size_t needed_;
    std::size_t budget_;
};

/// Nonzero amplitude on the edge of a fixed single-walker window.
class WindowOverflow : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace qwalk
