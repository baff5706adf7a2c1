#pragma once

#include <string>
#include <utility>
#include <vector>

namespace mnl {

/// Outcome of one verification. A witness is present iff the check failed;
/// its meaning (element triple, basis indices, row number) is fixed by the
/// check that produced it and spelled out in `detail`.
struct CheckReport {
  std::string property;
  bool passed = true;
  std::vector<int> witness;
  std::string detail;

  static CheckReport pass(std::string property, std::string detail = {}) {
    return {std::move(property), true, {}, std::move(detail)};
  }
  static CheckReport fail(std::string property, std::vector<int> witness, std::string detail) {
    return {std::move(property), false, std::move(witness), std::move(detail)};
  }

  explicit operator bool() const { return passed; }
};

/// Loops use the same shape; the alias keeps signatures readable.
using LoopCheckReport = CheckReport;

}  // namespace mnl
