#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "ybx/solution.hpp"

namespace ybx {

enum class SolutionFilter { all, involutive, symmetric };

struct EnumerationOptions {
  SolutionFilter filter = SolutionFilter::all;
  /// Maximum number of search nodes (row and cell assignments).
  std::uint64_t budget = std::numeric_limits<std::uint64_t>::max();
  int jobs = 1;
};

struct EnumerationResult {
  std::vector<FiniteSolution> solutions;
  /// False when the budget ran out; `solutions` is then a prefix of the full
  /// enumeration.
  bool complete = true;
  std::uint64_t nodes = 0;
};

/// Every non-degenerate YBE solution on n points matching the filter, each
/// once, ordered lexicographically by (alpha rows, beta rows).
///
/// alpha is fixed first; condition (i) of the basic lemma then pins
/// alpha_{beta_y(x)} to alpha_{alpha_x(y)}^{-1} alpha_x alpha_y, which restricts
/// every beta cell to the rows equal to that permutation. beta is filled row
/// by row and (ii)/(iii) are checked as soon as the rows they touch are set.
/// The output is identical for every value of `jobs`.
EnumerationResult enumerate_solutions(int n, const EnumerationOptions& options = {});

/// Sequential streaming form; returns false if the budget was exhausted.
bool enumerate_solutions(int n, SolutionFilter filter, std::uint64_t budget,
                         const std::function<void(const FiniteSolution&)>& visit);

}  // namespace ybx
