#pragma once

#include <span>
#include <string>
#include <vector>

#include "ybx/check.hpp"
#include "ybx/constructions.hpp"
#include "ybx/finite_group.hpp"
#include "ybx/integer_matrix.hpp"
#include "ybx/solution.hpp"
#include "ybx/word.hpp"

namespace ybx {

/// Generators 0..generator_count-1 and relator words. Relators are kept in
/// canonical form (see canonical_relator), deduplicated, never empty.
struct Presentation {
  int generator_count = 0;
  std::vector<Word> relators;

  bool operator==(const Presentation&) const = default;
};

/// Validates letters, normalizes and deduplicates (first occurrence wins).
Presentation make_presentation(int generator_count, const std::vector<Word>& relators);

enum class PresentationKind { standard, cycle_form, derived };

/// One raw relator per ordered pair (x, y), before normalization:
///   standard    x y (alpha_x(y) beta_y(x))^-1
///   cycle_form  (y.x) y ((x.y) x)^-1, requires a symmetric solution
///   derived     x y (y phi(x, y))^-1
std::vector<Word> structure_relators(const FiniteSolution& s, PresentationKind kind);
Presentation structure_presentation(const FiniteSolution& s, PresentationKind kind = PresentationKind::standard);

/// Exponent-sum matrix, one row per relator.
IntegerMatrix relation_matrix(const Presentation& p);

struct AbelianInvariants {
  std::vector<BigInt> torsion;  // all > 1, each dividing the next
  int free_rank = 0;

  /// Torsion factors followed by free_rank zeros.
  std::vector<BigInt> factors() const;
  /// "Z^2 x Z/2 x Z/4"; the trivial group prints as "1".
  std::string to_string() const;
  bool operator==(const AbelianInvariants&) const = default;
};

AbelianInvariants abelian_invariants(const IntegerMatrix& relations);
AbelianInvariants abelianization(const Presentation& p);
/// Whether `v` lies in the integer row lattice of `relations`.
bool in_row_lattice(const IntegerMatrix& relations, std::span<const long long> v);

/// Evaluates a word in `g` with generator i sent to images[i].
int evaluate_word(const FiniteGroup& g, std::span<const int> images, const Word& w);
/// Whether generators -> images respects every relator; witness is the index
/// of the first relator that does not map to the identity.
CheckResult hom_extends(const Presentation& p, const FiniteGroup& target, std::span<const int> images);

/// Each reversed relator of G_R is a relator of G_{R°}; witness (x, y).
CheckResult check_dual_antiisomorphism(const FiniteSolution& s);

/// The relation-level identities extending pi to G_X acting on G_S:
/// "gx" pi_{y.x} pi_y = pi_{x.y} pi_x (witness x, y); "gs" pi_x maps the
/// relator (s.t) s = (t.s) t to a relator of G_S (witness x, s, t).
CheckResult check_action_extension(const CycleAction& a);

/// Presentation of G_{R_X} ⋉_pi G_{R_S}: generators X then S (shifted by
/// |X|), relators of both factors and x s x^-1 pi_x(s)^-1.
Presentation semidirect_presentation(const CycleAction& a);

struct PiHomomorphismReport {
  bool abelian_level = false;
  bool permutation_level = false;
  int rank_source = 0;
  int rank_target = 0;
  AbelianInvariants source;
  AbelianInvariants target;
  CheckResult failure;

  bool extends() const noexcept { return abelian_level && permutation_level; }
};

/// Certifies Pi(x, s) = x s from G_{R_X ⋉ R_S} to G_{R_X} ⋉ G_{R_S} on
/// abelianizations and in the permutation quotient x -> alpha_x ⊔ pi_x,
/// s -> id ⊔ alpha_s.
PiHomomorphismReport check_pi_homomorphism(const CycleAction& a);

}  // namespace ybx
