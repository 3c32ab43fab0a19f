#include "ybx/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ybx/error.hpp"

namespace ybx {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::malformed: return "malformed";
    case ErrorKind::out_of_range: return "out-of-range";
    case ErrorKind::not_symmetric: return "not-symmetric";
    case ErrorKind::not_cycle_set: return "not-cycle-set";
    case ErrorKind::degenerate_cycle_set: return "degenerate-cycle-set";
    case ErrorKind::invalid_action: return "invalid-action";
    case ErrorKind::not_regular: return "not-regular";
    case ErrorKind::not_compatible: return "not-compatible";
    case ErrorKind::not_equivariant: return "not-equivariant-theta";
    case ErrorKind::not_a_homomorphism: return "not-a-homomorphism";
    case ErrorKind::not_yb_homomorphism: return "not-a-yb-homomorphism";
    case ErrorKind::asemi_violated: return "asemi-violated";
    case ErrorKind::order_too_large: return "order-too-large";
    case ErrorKind::context_mismatch: return "context-mismatch";
    case ErrorKind::postcondition: return "postcondition-failed";
  }
  return "unknown";
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  if (!is_bijection(images_)) {
    throw Error(ErrorKind::malformed, "image list is not a permutation");
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  Permutation p;
  p.images_ = std::move(img);
  return p;
}

bool Permutation::is_bijection(std::span<const int> images) {
  const auto n = images.size();
  std::vector<char> seen(n, 0);
  for (int v : images) {
    if (v < 0 || static_cast<std::size_t>(v) >= n || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = 1;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.images_ = invert_images(images_);
  return p;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i)) return false;
  }
  return true;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (size() != rhs.size()) throw Error(ErrorKind::context_mismatch, "composing permutations of different degree");
  Permutation p;
  p.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    p.images_[i] = images_[static_cast<std::size_t>(rhs.images_[i])];
  }
  return p;
}

Permutation Permutation::pow(long long e) const {
  Permutation base = e < 0 ? inverse() : *this;
  if (e < 0) e = -e;
  Permutation result = identity(size());
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < images_.size(); ++i) os << (i ? "," : "") << images_[i];
  os << ']';
  return os.str();
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

std::vector<int> invert_images(std::span<const int> images) {
  std::vector<int> inv(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) inv[static_cast<std::size_t>(images[i])] = static_cast<int>(i);
  return inv;
}

}  // namespace ybx
