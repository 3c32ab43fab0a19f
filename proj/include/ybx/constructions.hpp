#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "ybx/check.hpp"
#include "ybx/solution.hpp"

namespace ybx {

// --- solution to solution -------------------------------------------------

/// R°(x, y) = (beta_x(y), alpha_y(x)); in table form the two tables swap.
FiniteSolution dual(const FiniteSolution& s);

enum class DerivedSide { right, left };

/// right: R'(x, y) = (y, phi(x, y)); left: 'R(x, y) = (psi(x, y), x).
FiniteSolution derived(const FiniteSolution& s, DerivedSide side);

/// The five conditions that are equivalent for a YBE solution. "A_X abelian"
/// is evaluated through the pointwise criterion phi(x, y) == x.
struct PsiEquivalenceReport {
  bool symmetric = false;
  bool left_equals_right_derived = false;
  bool dual_symmetric = false;
  bool phi_trivial = false;
  bool dual_phi_trivial = false;

  bool all_agree() const noexcept {
    return symmetric == left_equals_right_derived && symmetric == dual_symmetric &&
           symmetric == phi_trivial && symmetric == dual_phi_trivial;
  }
};

PsiEquivalenceReport psi_equivalence_report(const FiniteSolution& s);

// --- cycle sets -------------------------------------------------------------

/// A binary operation x·y on {0..n-1}, `table[x * n + y] == x·y`.
class CycleSet {
 public:
  CycleSet(int n, std::vector<int> table);
  static CycleSet from_rows(const std::vector<std::vector<int>>& rows);

  int size() const noexcept { return n_; }
  int operator()(int x, int y) const { return table_[static_cast<std::size_t>(x * n_ + y)]; }
  const std::vector<int>& table() const noexcept { return table_; }
  std::vector<std::vector<int>> rows() const;
  /// l_x^{-1}(y); requires l_x bijective.
  int left_inverse(int x, int y) const;

  auto operator<=>(const CycleSet&) const = default;

 private:
  int n_ = 0;
  std::vector<int> table_;
};

CycleSet trivial_cycle_set(int n);

struct CycleSetReport {
  CheckResult axiom;
  bool left_multiplications_bijective = false;
  bool square_bijective = false;

  bool is_non_degenerate_cycle_set() const noexcept {
    return axiom.holds && left_multiplications_bijective && square_bijective;
  }
};

CycleSetReport validate_cycle_set(const CycleSet& c);

/// x·y = beta_x^{-1}(y). Throws not_symmetric unless `s` is a symmetric solution.
CycleSet to_cycle_set(const FiniteSolution& s);
/// R(x, y) = (l_{l_y^{-1}(x)}(y), l_y^{-1}(x)). Throws unless `c` is a
/// non-degenerate cycle set.
FiniteSolution from_cycle_set(const CycleSet& c);

/// All non-degenerate cycle sets on n points (rows range over permutations,
/// so n <= 4).
std::vector<CycleSet> enumerate_cycle_sets(int n);

// --- actions and semi-direct products ------------------------------------------

/// An action pi of the cycle set X on the cycle set S, `pi[x][s] == pi_x(s)`.
struct CycleAction {
  CycleSet X;
  CycleSet S;
  std::vector<std::vector<int>> pi;

  int pi_of(int x, int s) const { return pi[static_cast<std::size_t>(x)][static_cast<std::size_t>(s)]; }
  int product_index(int x, int s) const { return x * S.size() + s; }

  bool operator==(const CycleAction&) const = default;
};

/// The trivial action (every pi_x the identity).
CycleAction trivial_action(const CycleSet& X, const CycleSet& S);

/// (iii) every pi_x is a permutation, (i) pi_x(s·t) = pi_x(s)·pi_x(t),
/// (ii) pi_{y·x} pi_y = pi_{x·y} pi_x. Throws malformed on bad shapes.
CheckResult validate_cycle_action(const CycleAction& a);

/// (x, s)·(y, t) = (x·y, pi_{x·y}(s)·pi_{y·x}(t)) on X × S, with (x, s)
/// encoded as x * |S| + s.
CycleSet cycleset_semidirect(const CycleAction& a);

/// Closed formula for the symmetric solution of X ⋉_pi S.
FiniteSolution semidirect_solution(const CycleAction& a);

/// from_cycle_set(cycleset_semidirect(a)) == semidirect_solution(a), pointwise.
CheckResult check_commutation(const CycleAction& a);

/// Every valid pi table for the given X and S, in lexicographic order.
std::vector<CycleAction> enumerate_cycle_actions(const CycleSet& X, const CycleSet& S);

}  // namespace ybx
