#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "ybx/check.hpp"
#include "ybx/permutation.hpp"
#include "ybx/word.hpp"

namespace ybx {

/// A map R(x, y) = (alpha_x(y), beta_y(x)) on {0..n-1}^2.
///
/// Both tables are row-major and subscript-first: `alpha(x, y)` is
/// alpha_x(y) and `beta(y, x)` is beta_y(x). Construction only checks shape
/// and range; non-degeneracy and the braid relation are reported by
/// `validate` and `check_ybe`.
class FiniteSolution {
 public:
  FiniteSolution(int n, std::vector<int> alpha, std::vector<int> beta);
  static FiniteSolution from_rows(const std::vector<std::vector<int>>& alpha,
                                  const std::vector<std::vector<int>>& beta);

  int size() const noexcept { return n_; }
  int alpha(int x, int y) const { return alpha_[index(x, y)]; }
  int beta(int y, int x) const { return beta_[index(y, x)]; }
  std::span<const int> alpha_row(int x) const { return {alpha_.data() + index(x, 0), static_cast<std::size_t>(n_)}; }
  std::span<const int> beta_row(int y) const { return {beta_.data() + index(y, 0), static_cast<std::size_t>(n_)}; }
  const std::vector<int>& alpha_table() const noexcept { return alpha_; }
  const std::vector<int>& beta_table() const noexcept { return beta_; }

  std::pair<int, int> operator()(int x, int y) const { return {alpha(x, y), beta(y, x)}; }

  /// Requires the corresponding row to be a permutation.
  Permutation alpha_perm(int x) const;
  Permutation beta_perm(int y) const;

  std::vector<std::vector<int>> alpha_rows() const;
  std::vector<std::vector<int>> beta_rows() const;

  auto operator<=>(const FiniteSolution&) const = default;

 private:
  std::size_t index(int r, int c) const { return static_cast<std::size_t>(r) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(c); }

  int n_ = 0;
  std::vector<int> alpha_;
  std::vector<int> beta_;
};

/// The flip R(x, y) = (y, x).
FiniteSolution trivial_solution(int n);
/// R(x, y) = (sigma(y), tau(x)); a YBE solution exactly when sigma and tau commute.
FiniteSolution permutation_solution(const Permutation& sigma, const Permutation& tau);

enum class Condition {
  non_degenerate_alpha,
  non_degenerate_beta,
  not_bijective,
  braid,
  lemma_i,
  lemma_ii,
  lemma_iii,
};
std::string_view to_string(Condition c);

struct Failure {
  Condition condition;
  std::vector<int> witness;
};

struct SolutionReport {
  bool is_bijective = false;
  bool is_non_degenerate = false;
  bool ybe_checked = false;
  bool is_ybe = false;
  bool is_involutive = false;
  /// Involutive and non-degenerate.
  bool is_symmetric = false;
  std::optional<Failure> failure;

  bool all_valid() const noexcept { return is_bijective && is_non_degenerate && (!ybe_checked || is_ybe); }
};

enum class YbeMethod { braid, lemma };

/// Non-degeneracy and bijectivity of R; never checks the braid relation.
SolutionReport validate(const FiniteSolution& s);
/// Full report. Both methods decide the braid relation; the witness shape
/// differs (a triple for braid, a pair plus evaluation point for lemma).
SolutionReport check_ybe(const FiniteSolution& s, YbeMethod method = YbeMethod::braid);
bool is_ybe_solution(const FiniteSolution& s);
bool is_symmetric_solution(const FiniteSolution& s);

int phi(const FiniteSolution& s, int x, int y);
int psi(const FiniteSolution& s, int x, int y);

/// Composes alpha_x^{+-1} along a signed word (left action of the free group).
Permutation alpha_word(const FiniteSolution& s, const Word& w);

/// phi(alpha_g(x), alpha_g(y)) == alpha_g(phi(x, y)) for every generator g
/// and pair (x, y). Witness is (g, x, y).
CheckResult check_phi_equivariance(const FiniteSolution& s);

/// Image of `s` under the relabeling x -> p(x).
FiniteSolution relabel(const FiniteSolution& s, const Permutation& p);
/// Both identities of a YB-homomorphism for a map h: X -> Y (h[x] in Y).
CheckResult check_yb_homomorphism(const FiniteSolution& from, const FiniteSolution& to, std::span<const int> h);
/// First bijection (lexicographically) that is a YB-isomorphism s1 -> s2.
std::optional<Permutation> find_isomorphism(const FiniteSolution& s1, const FiniteSolution& s2);
/// Lexicographically least relabeling of `s`.
FiniteSolution canonical_form(const FiniteSolution& s);

}  // namespace ybx
