#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ybx/check.hpp"
#include "ybx/permutation.hpp"

namespace ybx {

/// Cayley table of a finite group on {0..order-1}; `mul(a, b)` is ab.
class FiniteGroup {
 public:
  /// Verifies closure, identity, inverses and associativity; throws
  /// malformed otherwise.
  explicit FiniteGroup(const std::vector<std::vector<int>>& table, std::vector<std::string> labels = {});

  int order() const noexcept { return order_; }
  int identity() const noexcept { return identity_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a * order_ + b)]; }
  int inv(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  int pow(int a, long long k) const;
  std::vector<std::vector<int>> rows() const;
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  bool is_abelian() const;

  bool operator==(const FiniteGroup& o) const { return order_ == o.order_ && table_ == o.table_; }

  /// Builds a group from a table that is known to be associative (e.g. from
  /// composing permutations); only identity and inverses are located.
  static FiniteGroup from_trusted_table(int order, std::vector<int> table, std::vector<std::string> labels = {});

 private:
  FiniteGroup() = default;
  void locate_identity_and_inverses();

  int order_ = 0;
  int identity_ = 0;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::vector<std::string> labels_;
};

/// Exhaustive group-axiom check of a raw table; witness names the failing law.
CheckResult check_group_axioms(const std::vector<std::vector<int>>& table);

FiniteGroup cyclic_group(int n);
/// Z/2 x Z/2 with element 2a + b standing for the pair (a, b).
FiniteGroup klein_four_group();
/// Pairs (g, h) encoded as g * |H| + h with componentwise product.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);
/// G ⋉_theta H: (g, h)(g', h') = (gg', h theta_g(h')), encoded as g * |H| + h.
/// `theta[g]` must be an automorphism of H and g -> theta[g] a homomorphism.
FiniteGroup semidirect_product(const FiniteGroup& g, const FiniteGroup& h, const std::vector<Permutation>& theta);

struct PermutationGroup {
  FiniteGroup group;
  std::vector<Permutation> elements;
  std::map<Permutation, int> index;

  int index_of(const Permutation& p) const;
};

PermutationGroup symmetric_group(int degree);
/// Closure of `generators` under composition; identity is element 0.
PermutationGroup generated_group(int degree, const std::vector<Permutation>& generators);

CheckResult check_homomorphism(const FiniteGroup& from, const FiniteGroup& to, std::span<const int> f);
bool is_automorphism(const FiniteGroup& g, const Permutation& p);
/// Every automorphism of a small group (brute force over all bijections fixing
/// the identity).
std::vector<Permutation> automorphisms(const FiniteGroup& g);
std::optional<std::vector<int>> find_group_isomorphism(const FiniteGroup& a, const FiniteGroup& b);

/// Checks g -> maps[g] is a homomorphism into Aut(H) (left action by automorphisms).
CheckResult check_action_by_automorphisms(const FiniteGroup& g, const FiniteGroup& h, const std::vector<Permutation>& maps);

}  // namespace ybx
