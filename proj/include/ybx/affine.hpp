#pragma once

#include <span>
#include <utility>
#include <vector>

#include "ybx/check.hpp"
#include "ybx/finite_group.hpp"
#include "ybx/permutation.hpp"
#include "ybx/solution.hpp"

namespace ybx {

/// rho_g(a) = b(g) pi_g(a): an affine action of `source` (G) on `target` (A).
struct AffineAction {
  FiniteGroup source;
  FiniteGroup target;
  std::vector<Permutation> pi;
  std::vector<int> b;

  int rho(int g, int a) const { return target.mul(b[static_cast<std::size_t>(g)], pi[static_cast<std::size_t>(g)](a)); }
  bool operator==(const AffineAction&) const = default;
};

/// Throws malformed on shape errors. Conditions, in order: "automorphism"
/// (g), "homomorphism" (g, h), "cocycle" (g, h), "affine" (g, h, a).
CheckResult validate_affine(const AffineAction& r);

struct RegularityReport {
  bool b_bijective = false;
  bool orbit_regular = false;  // orbit of e is A, stabilizers trivial
};
/// Both routes; throws postcondition if they disagree.
RegularityReport regularity(const AffineAction& r);
bool is_regular(const AffineAction& r);

struct EquivarianceReport {
  bool equivariant = false;       // f rho1_g == rho2_g f
  bool translations_match = false;  // b2_g == f(b1_g)
  bool linear_match = false;      // f pi1_g == pi2_g f
};
/// `f` maps r1.target to r2.target and must be a homomorphism
/// (not_a_homomorphism otherwise). When b1 is surjective, matching
/// translations must force matching linear parts; a violation throws
/// postcondition.
EquivarianceReport check_equivariant(std::span<const int> f, const AffineAction& r1, const AffineAction& r2);
/// pi'_g = f pi_g f^-1, b' = f b for an automorphism f of the target.
AffineAction conjugate_affine(const AffineAction& r, const Permutation& f);

/// A left action alpha and a right action beta of G on itself with
/// gh = alpha_g(h) beta_h(g). `beta[h]` is the permutation g -> beta_h(g).
struct CompatiblePair {
  std::vector<Permutation> alpha;
  std::vector<Permutation> beta;

  auto operator<=>(const CompatiblePair&) const = default;
};

/// Witness conditions: "alpha-action" (g, h), "beta-action" (g, h),
/// "compatible" (g, h).
CheckResult check_compatible_pair(const FiniteGroup& g, const CompatiblePair& p);
/// A = (G, g ⊙ h = g alpha_{g^-1}(h)), pi = alpha, b = id.
AffineAction pair_to_affine(const FiniteGroup& g, const CompatiblePair& p);
/// alpha_g = b^-1 pi_g b, beta_h(g) = alpha_g(h)^-1 g h. Throws not_regular.
CompatiblePair affine_to_pair(const AffineAction& r);
FiniteSolution pair_to_solution(const CompatiblePair& p);
FiniteSolution affine_to_solution(const AffineAction& r);

/// beta_h(g) = alpha_{k^-1}(bar(k) ⊙ g ⊙ k) with k = alpha_g(h); k^-1 is the
/// inverse in G, bar(k) the inverse in A. Witness (g, h).
CheckResult check_beta_adjoint(const AffineAction& r);

/// The pair whose beta is forced by compatibility, beta_h(g) = alpha_g(h)^-1 g h.
/// Throws not_compatible unless the result is a compatible pair.
CompatiblePair complete_pair(const FiniteGroup& g, const std::vector<Permutation>& alpha);
/// Every compatible pair on g, sorted. Order at most 6.
std::vector<CompatiblePair> enumerate_compatible_pairs(const FiniteGroup& g);

struct LiftResult {
  FiniteGroup group;      // (H, ·)
  AffineAction action;    // (H, ·) acting on H: pi_x = sigma_{b^-1 theta(x)}, b = id
  std::vector<int> inverse;  // inverse in (H, ·)
  /// theta rho~_z == rho_{b^-1 theta(z)} theta, and z -> rho_{b^-1 theta(z)}
  /// is an affine action of (H, ·) on A.
  CheckResult equivariance;
  /// Whether sigma_{b^-1 theta(x)}(x) is the inverse of every x.
  bool naive_inverse_formula = false;
};

/// x·y = x sigma_{b^-1 theta(x)}(y). Requires r regular, sigma an action of
/// r.source on h by automorphisms, theta: h -> r.target a homomorphism with
/// theta sigma_g = pi_g theta. Group axioms and the lifted action are
/// verified; failures throw postcondition.
LiftResult lift(const AffineAction& r, const FiniteGroup& h, const std::vector<Permutation>& sigma, std::span<const int> theta);

/// theta_g (b~^-1 pi~_h b~) == (b~^-1 pi~_{theta_g(h)} b~) theta_g; witness (g, h, k).
CheckResult check_asemi(const AffineAction& rt, const std::vector<Permutation>& theta);
/// The same identity with rho~ in place of pi~.
CheckResult check_theta_identity(const AffineAction& rt, const std::vector<Permutation>& theta);
/// Gamma_(g,h) = (rho_g, rho~_h b~ theta_g b~^-1) on A x A~, with (g, h)
/// encoded as g * |G~| + h and (a, a~) as a * |A~| + a~. Throws
/// asemi_violated if check_asemi fails and postcondition if Gamma is not an
/// affine action.
AffineAction affine_semidirect(const AffineAction& r, const AffineAction& rt, const std::vector<Permutation>& theta);
AffineAction direct_product_action(const AffineAction& r, const AffineAction& rt);

/// gamma_g(a) = pi_g(a), zeta_g(a) = b_g pi_g(a) b_g^-1.
std::pair<int, int> group_dynamics(const AffineAction& r, int g, int a);
/// Both gamma and zeta are actions of G on A; witness (g, h, a).
CheckResult check_dynamics(const AffineAction& r);

/// G acting on itself by left translation: pi trivial, b = id.
AffineAction translation_action(const FiniteGroup& g);
/// Z/4 on the Klein four group, pi_1 swapping 10 and 01, b = 00, 10, 11, 01.
AffineAction f4_action();

}  // namespace ybx
