#pragma once

#include <string>
#include <vector>

namespace ybx {

/// Outcome of an exhaustive property check: a flag plus the first
/// counterexample found, if any.
struct CheckResult {
  bool holds = true;
  std::string condition;
  std::vector<int> witness;

  static CheckResult ok() { return {}; }
  static CheckResult fail(std::string condition, std::vector<int> witness) {
    return {false, std::move(condition), std::move(witness)};
  }

  explicit operator bool() const noexcept { return holds; }
  std::string describe() const;
};

}  // namespace ybx
