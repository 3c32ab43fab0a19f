#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ybx {

enum class ErrorKind {
  malformed,
  out_of_range,
  not_symmetric,
  not_cycle_set,
  degenerate_cycle_set,
  invalid_action,
  not_regular,
  not_compatible,
  not_equivariant,
  not_a_homomorphism,
  not_yb_homomorphism,
  asemi_violated,
  order_too_large,
  context_mismatch,
  postcondition,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so the
/// CLI can map it onto an exit code without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ybx
