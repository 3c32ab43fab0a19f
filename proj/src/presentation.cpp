#include "ybx/presentation.hpp"

#include <optional>
#include <set>

#include "ybx/error.hpp"

namespace ybx {

Presentation make_presentation(int generator_count, const std::vector<Word>& relators) {
  if (generator_count < 0) throw Error(ErrorKind::malformed, "negative generator count");
  Presentation p{generator_count, {}};
  std::set<Word> seen;
  for (const Word& w : relators) {
    for (Letter l : w)
      if (l == 0 || generator_of(l) >= generator_count)
        throw Error(ErrorKind::out_of_range, "relator letter " + std::to_string(l) + " out of range");
    Word c = canonical_relator(w);
    if (!c.empty() && seen.insert(c).second) p.relators.push_back(std::move(c));
  }
  return p;
}

std::vector<Word> structure_relators(const FiniteSolution& s, PresentationKind kind) {
  const int n = s.size();
  std::optional<CycleSet> c;
  if (kind == PresentationKind::cycle_form) c = to_cycle_set(s);
  std::vector<Word> out;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      switch (kind) {
        case PresentationKind::standard:
          out.push_back({gen(x), gen(y), gen_inv(s.beta(y, x)), gen_inv(s.alpha(x, y))});
          break;
        case PresentationKind::cycle_form:
          out.push_back({gen((*c)(y, x)), gen(y), gen_inv(x), gen_inv((*c)(x, y))});
          break;
        case PresentationKind::derived:
          out.push_back({gen(x), gen(y), gen_inv(phi(s, x, y)), gen_inv(y)});
          break;
      }
    }
  }
  return out;
}

Presentation structure_presentation(const FiniteSolution& s, PresentationKind kind) {
  return make_presentation(s.size(), structure_relators(s, kind));
}

IntegerMatrix relation_matrix(const Presentation& p) {
  IntegerMatrix m(p.relators.size(), static_cast<std::size_t>(p.generator_count));
  for (std::size_t r = 0; r < p.relators.size(); ++r)
    for (Letter l : p.relators[r]) m(r, static_cast<std::size_t>(generator_of(l))) += is_inverse(l) ? -1 : 1;
  return m;
}

std::vector<BigInt> AbelianInvariants::factors() const {
  std::vector<BigInt> out = torsion;
  out.resize(out.size() + static_cast<std::size_t>(free_rank), BigInt(0));
  return out;
}

std::string AbelianInvariants::to_string() const {
  std::string out;
  auto append = [&](const std::string& part) { out += (out.empty() ? "" : " x ") + part; };
  if (free_rank > 0) append("Z^" + std::to_string(free_rank));
  for (const BigInt& d : torsion) append("Z/" + d.str());
  return out.empty() ? "1" : out;
}

AbelianInvariants abelian_invariants(const IntegerMatrix& relations) {
  AbelianInvariants inv;
  int nonzero = 0;
  for (BigInt& d : smith_normal_form(relations)) {
    if (d == 0) continue;
    ++nonzero;
    if (d > 1) inv.torsion.push_back(std::move(d));
  }
  inv.free_rank = static_cast<int>(relations.cols()) - nonzero;
  return inv;
}

AbelianInvariants abelianization(const Presentation& p) { return abelian_invariants(relation_matrix(p)); }

namespace {

IntegerMatrix with_rows(const IntegerMatrix& m, const std::vector<std::vector<long long>>& extra) {
  IntegerMatrix out(m.rows() + extra.size(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c);
  for (std::size_t i = 0; i < extra.size(); ++i) {
    if (extra[i].size() != m.cols()) throw Error(ErrorKind::malformed, "lattice vector has the wrong length");
    for (std::size_t c = 0; c < m.cols(); ++c) out(m.rows() + i, c) = extra[i][c];
  }
  return out;
}

// L ⊆ L + V with isomorphic quotients forces equality (finitely generated
// abelian groups are Hopfian), so V ⊆ L.
bool all_in_row_lattice(const IntegerMatrix& relations, const std::vector<std::vector<long long>>& vs) {
  if (vs.empty()) return true;
  return abelian_invariants(relations) == abelian_invariants(with_rows(relations, vs));
}

std::vector<long long> exponent_sums(const Word& w, int generator_count) {
  std::vector<long long> v(static_cast<std::size_t>(generator_count), 0);
  for (Letter l : w) v[static_cast<std::size_t>(generator_of(l))] += is_inverse(l) ? -1 : 1;
  return v;
}

}  // namespace

bool in_row_lattice(const IntegerMatrix& relations, std::span<const long long> v) {
  return all_in_row_lattice(relations, {std::vector<long long>(v.begin(), v.end())});
}

int evaluate_word(const FiniteGroup& g, std::span<const int> images, const Word& w) {
  int acc = g.identity();
  for (Letter l : w) {
    const auto i = static_cast<std::size_t>(generator_of(l));
    if (i >= images.size()) throw Error(ErrorKind::out_of_range, "letter outside the generator images");
    const int x = images[i];
    acc = g.mul(acc, is_inverse(l) ? g.inv(x) : x);
  }
  return acc;
}

CheckResult hom_extends(const Presentation& p, const FiniteGroup& target, std::span<const int> images) {
  if (static_cast<int>(images.size()) != p.generator_count)
    throw Error(ErrorKind::malformed, "need one image per generator");
  for (int v : images)
    if (v < 0 || v >= target.order()) throw Error(ErrorKind::out_of_range, "image outside the target group");
  for (std::size_t r = 0; r < p.relators.size(); ++r)
    if (evaluate_word(target, images, p.relators[r]) != target.identity())
      return CheckResult::fail("relator", {static_cast<int>(r)});
  return CheckResult::ok();
}

CheckResult check_dual_antiisomorphism(const FiniteSolution& s) {
  const Presentation dual_p = structure_presentation(dual(s));
  const std::set<Word> dual_relators(dual_p.relators.begin(), dual_p.relators.end());
  const auto raw = structure_relators(s, PresentationKind::standard);
  const int n = s.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      Word rev(raw[static_cast<std::size_t>(x * n + y)].rbegin(), raw[static_cast<std::size_t>(x * n + y)].rend());
      const Word c = canonical_relator(rev);
      if (!c.empty() && !dual_relators.contains(c)) return CheckResult::fail("anti-isomorphism", {x, y});
    }
  return CheckResult::ok();
}

CheckResult check_action_extension(const CycleAction& a) {
  if (auto r = validate_cycle_action(a); !r) throw Error(ErrorKind::invalid_action, r.describe());
  const int nx = a.X.size(), ns = a.S.size();
  std::vector<Permutation> pi;
  for (const auto& row : a.pi) pi.emplace_back(row);
  for (int x = 0; x < nx; ++x)
    for (int y = 0; y < nx; ++y)
      if (pi[static_cast<std::size_t>(a.X(y, x))] * pi[static_cast<std::size_t>(y)] !=
          pi[static_cast<std::size_t>(a.X(x, y))] * pi[static_cast<std::size_t>(x)])
        return CheckResult::fail("gx", {x, y});

  const auto s_relators = structure_presentation(from_cycle_set(a.S), PresentationKind::cycle_form).relators;
  const std::set<Word> known(s_relators.begin(), s_relators.end());
  for (int x = 0; x < nx; ++x)
    for (int s = 0; s < ns; ++s)
      for (int t = 0; t < ns; ++t) {
        const Word image{gen(a.pi_of(x, a.S(s, t))), gen(a.pi_of(x, s)), gen_inv(a.pi_of(x, t)), gen_inv(a.pi_of(x, a.S(t, s)))};
        const Word c = canonical_relator(image);
        if (!c.empty() && !known.contains(c)) return CheckResult::fail("gs", {x, s, t});
      }
  return CheckResult::ok();
}

Presentation semidirect_presentation(const CycleAction& a) {
  const int nx = a.X.size(), ns = a.S.size();
  std::vector<Word> rel = structure_relators(from_cycle_set(a.X), PresentationKind::standard);
  for (Word w : structure_relators(from_cycle_set(a.S), PresentationKind::standard)) {
    for (Letter& l : w) l = is_inverse(l) ? gen_inv(nx + generator_of(l)) : gen(nx + generator_of(l));
    rel.push_back(std::move(w));
  }
  for (int x = 0; x < nx; ++x)
    for (int s = 0; s < ns; ++s) rel.push_back({gen(x), gen(nx + s), gen_inv(x), gen_inv(nx + a.pi_of(x, s))});
  return make_presentation(nx + ns, rel);
}

PiHomomorphismReport check_pi_homomorphism(const CycleAction& a) {
  if (auto r = validate_cycle_action(a); !r) throw Error(ErrorKind::invalid_action, r.describe());
  const int nx = a.X.size(), ns = a.S.size();
  const Presentation source = structure_presentation(semidirect_solution(a));
  const Presentation target = semidirect_presentation(a);

  auto pi_word = [&](const Word& w) {
    Word out;
    for (Letter l : w) {
      const int g = generator_of(l);
      const Word image{gen(g / ns), gen(nx + g % ns)};
      const Word piece = is_inverse(l) ? inverse_word(image) : image;
      out.insert(out.end(), piece.begin(), piece.end());
    }
    return out;
  };

  PiHomomorphismReport rep;
  rep.source = abelianization(source);
  rep.target = abelianization(target);
  rep.rank_source = rep.source.free_rank;
  rep.rank_target = rep.target.free_rank;

  const IntegerMatrix target_matrix = relation_matrix(target);
  std::vector<std::vector<long long>> images;
  for (const Word& r : source.relators) images.push_back(exponent_sums(pi_word(r), nx + ns));
  rep.abelian_level = all_in_row_lattice(target_matrix, images);
  if (!rep.abelian_level) {
    for (std::size_t i = 0; i < images.size(); ++i)
      if (!in_row_lattice(target_matrix, images[i])) {
        rep.failure = CheckResult::fail("abelian", {static_cast<int>(i)});
        break;
      }
  }

  // Permutation quotient of the target on X ⊔ S.
  const FiniteSolution rx = from_cycle_set(a.X), rs = from_cycle_set(a.S);
  std::vector<Permutation> gens;
  for (int x = 0; x < nx; ++x) {
    std::vector<int> img;
    for (int y = 0; y < nx; ++y) img.push_back(rx.alpha(x, y));
    for (int t = 0; t < ns; ++t) img.push_back(nx + a.pi_of(x, t));
    gens.emplace_back(std::move(img));
  }
  for (int s = 0; s < ns; ++s) {
    std::vector<int> img;
    for (int y = 0; y < nx; ++y) img.push_back(y);
    for (int t = 0; t < ns; ++t) img.push_back(nx + rs.alpha(s, t));
    gens.emplace_back(std::move(img));
  }
  const PermutationGroup q = generated_group(nx + ns, gens);
  std::vector<int> target_images;
  for (const auto& g : gens) target_images.push_back(q.index_of(g));
  std::vector<int> source_images;
  for (int x = 0; x < nx; ++x)
    for (int s = 0; s < ns; ++s) source_images.push_back(evaluate_word(q.group, target_images, {gen(x), gen(nx + s)}));
  const CheckResult on_target = hom_extends(target, q.group, target_images);
  const CheckResult on_source = hom_extends(source, q.group, source_images);
  rep.permutation_level = on_target.holds && on_source.holds;
  if (rep.failure.holds && !on_target) rep.failure = CheckResult::fail("quotient-target", on_target.witness);
  if (rep.failure.holds && !on_source) rep.failure = CheckResult::fail("quotient-source", on_source.witness);
  return rep;
}

}  // namespace ybx
