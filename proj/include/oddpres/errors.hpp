#pragma once

#include <stdexcept>
#include <string>

namespace oddpres {

/// A search or closure grew past its configured element budget.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace oddpres
