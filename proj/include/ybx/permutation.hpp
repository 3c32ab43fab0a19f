#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace ybx {

/// A bijection of {0, ..., n-1} stored as its image list.
///
/// Composition follows function notation: (p * q)(i) == p(q(i)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /// Returns true when `images` is a bijection of {0..n-1}.
  static bool is_bijection(std::span<const int> images);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const noexcept { return images_; }

  Permutation inverse() const;
  bool is_identity() const noexcept;
  Permutation operator*(const Permutation& rhs) const;
  Permutation pow(long long e) const;

  std::string to_string() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

/// All permutations of {0..n-1} in lexicographic order.
std::vector<Permutation> all_permutations(int n);

/// Inverse of an image table that is known to be a bijection.
std::vector<int> invert_images(std::span<const int> images);

}  // namespace ybx
