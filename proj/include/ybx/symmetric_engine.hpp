#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "ybx/check.hpp"
#include "ybx/permutation.hpp"
#include "ybx/solution.hpp"
#include "ybx/word.hpp"

namespace ybx {

using Vec = std::vector<long long>;

/// (v, lam): the cocycle value b(g) in Z^X and the linear part alpha_g.
struct LatticeElement {
  Vec v;
  Permutation lam;

  bool operator==(const LatticeElement&) const = default;
};

/// lam acts on Z^X by moving coordinate x to lam(x).
Vec act(const Permutation& lam, std::span<const long long> w);

/// Picks which nonzero coordinate to peel next; receives the candidate
/// coordinates in increasing order and returns an index into them.
using PeelChooser = std::function<std::size_t(std::span<const int>)>;

/// The regular affine action of G_X on Z^X for a symmetric solution. Every
/// element of G_X is determined by its cocycle vector, so equality of
/// LatticeElements decides the word problem.
class SymmetricEngine {
 public:
  /// Throws not_symmetric.
  explicit SymmetricEngine(FiniteSolution s);

  int size() const noexcept { return s_.size(); }
  const FiniteSolution& solution() const noexcept { return s_; }

  /// lam_v by peeling one generator at a time. A positive coordinate x uses
  /// v = e_x + alpha_x(w); a negative coordinate y uses
  /// v = -e_y + alpha_x^-1(w) with x = y.y, the unique x with alpha_x(y) = x.
  Permutation lambda_of(std::span<const long long> v) const;
  Permutation lambda_of(std::span<const long long> v, const PeelChooser& choose) const;

  LatticeElement element(std::span<const long long> v) const { return {Vec(v.begin(), v.end()), lambda_of(v)}; }
  LatticeElement identity() const;
  LatticeElement generator(int x) const;
  LatticeElement generator_inverse(int x) const;

  /// (v, l)(w, m) = (v + l(w), lm); throws context_mismatch on foreign elements.
  LatticeElement mul(const LatticeElement& a, const LatticeElement& b) const;
  /// (-l^-1(v), l^-1).
  LatticeElement inv(const LatticeElement& a) const;

  /// Folds b(gh) = b(g) + lam_{b(g)}(b(h)) along the word.
  LatticeElement cocycle_vector(const Word& w) const;
  bool equal_in_group(const Word& a, const Word& b) const { return cocycle_vector(a) == cocycle_vector(b); }

  /// The universal extension on Z^X: alpha_v(w) = lam_v(w) and beta_w(v)
  /// the vector of alpha_v(w)^-1 v w.
  std::pair<Vec, Vec> extend(std::span<const long long> v, std::span<const long long> w) const;

 private:
  void require_context(const LatticeElement& a) const;

  FiniteSolution s_;
  std::vector<Permutation> alpha_;
  std::vector<Permutation> alpha_inv_;
  std::vector<int> square_;  // x.x in the associated cycle set
};

struct InducedHomReport {
  CheckResult relators;  // h_G kills the relators of G_X
  CheckResult hb;        // h_A(b(g)) == b(h_G(g))
  CheckResult halpha;    // h alpha_g == alpha_{h_G(g)} h on X
  int words_checked = 0;

  bool holds() const noexcept { return relators.holds && hb.holds && halpha.holds; }
};

struct InducedHomOptions {
  int max_length = 4;
  int random_words = 500;
  int random_max_length = 12;
  std::uint64_t seed = 1;
};

/// The linear map e_x -> e_{h(x)} from Z^X to Z^Y.
Vec linear_extension(std::span<const int> h, int target_size, std::span<const long long> v);

/// Requires a YB-homomorphism (not_yb_homomorphism otherwise). Witnesses of
/// hb/halpha are the failing word's letters.
InducedHomReport induced_hom_maps(const SymmetricEngine& from, const SymmetricEngine& to, std::span<const int> h,
                                  const InducedHomOptions& options = {});

}  // namespace ybx
