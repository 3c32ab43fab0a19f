#pragma once

#include <random>
#include <vector>

#include "ybx/constructions.hpp"
#include "ybx/solution.hpp"

namespace fixture {

inline const ybx::Permutation sigma3{{1, 2, 0}};

/// R(x, y) = (sigma(y), sigma^-1(x)) on three points.
inline ybx::FiniteSolution p3() { return ybx::permutation_solution(sigma3, sigma3.inverse()); }

/// alpha_0 = alpha_1 = id, beta_0 = id, beta_1 = swap: not a solution.
inline ybx::FiniteSolution ns2() { return ybx::FiniteSolution(2, {0, 1, 0, 1}, {0, 1, 1, 0}); }

inline ybx::FiniteSolution flip(int n) { return ybx::trivial_solution(n); }

/// X trivial on two points, S = to_cycle_set(P3), pi_0 = id, pi_1 = sigma.
inline ybx::CycleAction action_2x3() {
  return {ybx::trivial_cycle_set(2), ybx::to_cycle_set(p3()), {{0, 1, 2}, {1, 2, 0}}};
}

inline ybx::CycleAction trivial_action(int nx, int ns) {
  return ybx::trivial_action(ybx::trivial_cycle_set(nx), ybx::trivial_cycle_set(ns));
}

inline std::vector<long long> random_vec(std::mt19937_64& rng, int n, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  std::vector<long long> v(static_cast<std::size_t>(n));
  for (auto& x : v) x = d(rng);
  return v;
}

}  // namespace fixture
