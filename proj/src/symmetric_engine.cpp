#include "ybx/symmetric_engine.hpp"

#include <random>

#include "ybx/error.hpp"
#include "ybx/presentation.hpp"

namespace ybx {

namespace {

std::size_t at(int i) { return static_cast<std::size_t>(i); }

}  // namespace

Vec act(const Permutation& lam, std::span<const long long> w) {
  Vec out(w.size(), 0);
  for (int x = 0; x < lam.size(); ++x) out[at(lam(x))] = w[at(x)];
  return out;
}

SymmetricEngine::SymmetricEngine(FiniteSolution s) : s_(std::move(s)) {
  if (!is_symmetric_solution(s_)) throw Error(ErrorKind::not_symmetric, "the lattice model needs a symmetric solution");
  const int n = s_.size();
  for (int x = 0; x < n; ++x) {
    alpha_.push_back(s_.alpha_perm(x));
    alpha_inv_.push_back(alpha_.back().inverse());
  }
  // x.y = beta_x^-1(y), so y.y = beta_y^-1(y).
  for (int y = 0; y < n; ++y) square_.push_back(s_.beta_perm(y).inverse()(y));
}

Permutation SymmetricEngine::lambda_of(std::span<const long long> v) const {
  return lambda_of(v, [](std::span<const int>) { return std::size_t{0}; });
}

Permutation SymmetricEngine::lambda_of(std::span<const long long> v, const PeelChooser& choose) const {
  const int n = size();
  if (static_cast<int>(v.size()) != n) throw Error(ErrorKind::context_mismatch, "vector length differs from |X|");
  Vec cur(v.begin(), v.end());
  Permutation acc = Permutation::identity(n);
  std::vector<int> candidates;
  for (;;) {
    candidates.clear();
    for (int x = 0; x < n; ++x)
      if (cur[at(x)] != 0) candidates.push_back(x);
    if (candidates.empty()) return acc;
    const std::size_t pick = choose(candidates);
    if (pick >= candidates.size()) throw Error(ErrorKind::out_of_range, "peel chooser returned an invalid index");
    const int c = candidates[pick];
    if (cur[at(c)] > 0) {
      cur[at(c)] -= 1;
      cur = act(alpha_inv_[at(c)], cur);
      acc = acc * alpha_[at(c)];
    } else {
      const int x = square_[at(c)];
      cur[at(c)] += 1;
      cur = act(alpha_[at(x)], cur);
      acc = acc * alpha_inv_[at(x)];
    }
  }
}

LatticeElement SymmetricEngine::identity() const { return {Vec(at(size()), 0), Permutation::identity(size())}; }

LatticeElement SymmetricEngine::generator(int x) const {
  if (x < 0 || x >= size()) throw Error(ErrorKind::out_of_range, "generator out of range");
  Vec v(at(size()), 0);
  v[at(x)] = 1;
  return {std::move(v), alpha_[at(x)]};
}

LatticeElement SymmetricEngine::generator_inverse(int x) const { return inv(generator(x)); }

void SymmetricEngine::require_context(const LatticeElement& a) const {
  if (static_cast<int>(a.v.size()) != size() || a.lam.size() != size())
    throw Error(ErrorKind::context_mismatch, "lattice element belongs to a different solution");
}

LatticeElement SymmetricEngine::mul(const LatticeElement& a, const LatticeElement& b) const {
  require_context(a);
  require_context(b);
  Vec v = act(a.lam, b.v);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += a.v[i];
  return {std::move(v), a.lam * b.lam};
}

LatticeElement SymmetricEngine::inv(const LatticeElement& a) const {
  require_context(a);
  const Permutation li = a.lam.inverse();
  Vec v = act(li, a.v);
  for (auto& c : v) c = -c;
  return {std::move(v), li};
}

LatticeElement SymmetricEngine::cocycle_vector(const Word& w) const {
  LatticeElement acc = identity();
  for (Letter l : w) {
    const int x = generator_of(l);
    if (x < 0 || x >= size()) throw Error(ErrorKind::out_of_range, "letter out of range");
    acc = mul(acc, is_inverse(l) ? generator_inverse(x) : generator(x));
  }
  return acc;
}

std::pair<Vec, Vec> SymmetricEngine::extend(std::span<const long long> v, std::span<const long long> w) const {
  const LatticeElement g1 = element(v), g2 = element(w);
  Vec a = act(g1.lam, g2.v);
  const LatticeElement k = element(a);
  return {std::move(a), mul(inv(k), mul(g1, g2)).v};
}

Vec linear_extension(std::span<const int> h, int target_size, std::span<const long long> v) {
  if (h.size() != v.size()) throw Error(ErrorKind::context_mismatch, "map and vector sizes differ");
  Vec out(at(target_size), 0);
  for (std::size_t x = 0; x < h.size(); ++x) out[at(h[x])] += v[x];
  return out;
}

namespace {

Word map_word(std::span<const int> h, const Word& w) {
  Word out;
  for (Letter l : w) out.push_back(is_inverse(l) ? gen_inv(h[at(generator_of(l))]) : gen(h[at(generator_of(l))]));
  return out;
}

}  // namespace

InducedHomReport induced_hom_maps(const SymmetricEngine& from, const SymmetricEngine& to, std::span<const int> h,
                                  const InducedHomOptions& options) {
  const int n = from.size(), m = to.size();
  if (static_cast<int>(h.size()) != n) throw Error(ErrorKind::malformed, "map needs one image per element");
  for (int y : h)
    if (y < 0 || y >= m) throw Error(ErrorKind::out_of_range, "map value out of range");
  if (auto c = check_yb_homomorphism(from.solution(), to.solution(), h); !c)
    throw Error(ErrorKind::not_yb_homomorphism, c.describe());

  InducedHomReport rep;
  const Presentation p = structure_presentation(from.solution());
  for (std::size_t r = 0; r < p.relators.size(); ++r)
    if (to.cocycle_vector(map_word(h, p.relators[r])) != to.identity()) {
      rep.relators = CheckResult::fail("relator", {static_cast<int>(r)});
      break;
    }

  auto check_word = [&](const Word& w) {
    ++rep.words_checked;
    const LatticeElement g = from.cocycle_vector(w);
    const LatticeElement hg = to.cocycle_vector(map_word(h, w));
    if (rep.hb.holds && linear_extension(h, m, g.v) != hg.v) rep.hb = CheckResult::fail("hb", w);
    if (rep.halpha.holds)
      for (int x = 0; x < n; ++x)
        if (h[at(g.lam(x))] != hg.lam(h[at(x)])) {
          rep.halpha = CheckResult::fail("halpha", w);
          break;
        }
  };

  std::vector<Letter> letters;
  for (int x = 0; x < n; ++x) {
    letters.push_back(gen(x));
    letters.push_back(gen_inv(x));
  }
  std::vector<Word> layer{Word{}};
  for (int len = 0; len <= options.max_length; ++len) {
    std::vector<Word> next;
    for (const Word& w : layer) {
      check_word(w);
      if (len < options.max_length)
        for (Letter l : letters) {
          Word longer = w;
          longer.push_back(l);
          next.push_back(std::move(longer));
        }
    }
    layer = std::move(next);
  }
  std::mt19937_64 rng(options.seed);
  const int lo = options.max_length + 1, hi = std::max(lo, options.random_max_length);
  std::uniform_int_distribution<int> length(lo, hi);
  std::uniform_int_distribution<std::size_t> letter(0, letters.size() - 1);
  for (int i = 0; i < options.random_words; ++i) {
    Word w(at(length(rng)));
    for (auto& l : w) l = letters[letter(rng)];
    check_word(w);
  }
  return rep;
}

}  // namespace ybx
