#pragma once

// Deliberately naive reference implementations. They share no search or
// normal-form code with the library, only its value types.

#include <functional>
#include <vector>

#include "ybx/finite_group.hpp"
#include "ybx/integer_matrix.hpp"
#include "ybx/solution.hpp"

namespace oracle {

/// R as a map on pairs, straight from the tables.
std::pair<int, int> apply(const ybx::FiniteSolution& s, int x, int y);
/// R12 R23 R12 == R23 R12 R23 on every triple.
bool braid_holds(const ybx::FiniteSolution& s);
bool involutive(const ybx::FiniteSolution& s);

/// Visits every family (alpha rows, beta rows) of permutations on n points,
/// (n!)^(2n) of them, in lexicographic order.
void for_each_family(int n, const std::function<void(const ybx::FiniteSolution&)>& visit);
/// The solutions among those families, in the same order.
std::vector<ybx::FiniteSolution> brute_force_solutions(int n, bool involutive_only);

/// Cycle sets by scanning all n^(n*n) operation tables.
std::vector<std::vector<int>> brute_force_cycle_sets(int n);

/// Number of isomorphism classes by comparing every pair under every relabeling.
int isomorphism_classes(const std::vector<ybx::FiniteSolution>& sols);

/// Smith diagonal by repeated Euclidean row and column sweeps followed by a
/// gcd/lcm pass over the diagonal.
std::vector<ybx::BigInt> smith_by_elimination(std::vector<std::vector<long long>> rows);
/// Ratios of determinantal divisors d_k / d_{k-1} (gcd of k x k minors).
std::vector<ybx::BigInt> smith_by_minors(const std::vector<std::vector<long long>>& rows);

/// Compatible pairs counted over all (|G|!)^(2|G|) assignments.
int brute_force_compatible_pairs(const ybx::FiniteGroup& g);

}  // namespace oracle
