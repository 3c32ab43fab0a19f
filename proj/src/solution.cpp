#include "ybx/solution.hpp"

#include <algorithm>
#include <functional>

#include "ybx/error.hpp"

namespace ybx {

namespace {

void check_table(int n, const std::vector<int>& t, const char* name) {
  if (t.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    throw Error(ErrorKind::malformed, std::string(name) + " table must be n x n");
  }
  for (int v : t) {
    if (v < 0 || v >= n) throw Error(ErrorKind::malformed, std::string(name) + " entry out of range");
  }
}

std::vector<int> flatten(const std::vector<std::vector<int>>& rows, std::size_t n, const char* name) {
  if (rows.size() != n) throw Error(ErrorKind::malformed, std::string(name) + " must have n rows");
  std::vector<int> flat;
  flat.reserve(n * n);
  for (const auto& r : rows) {
    if (r.size() != n) throw Error(ErrorKind::malformed, std::string(name) + " has a ragged row");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return flat;
}

int row_preimage(std::span<const int> row, int value) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i] == value) return static_cast<int>(i);
  }
  throw Error(ErrorKind::malformed, "row is not a permutation");
}

}  // namespace

FiniteSolution::FiniteSolution(int n, std::vector<int> alpha, std::vector<int> beta)
    : n_(n), alpha_(std::move(alpha)), beta_(std::move(beta)) {
  if (n_ <= 0) throw Error(ErrorKind::malformed, "solution needs n >= 1");
  check_table(n_, alpha_, "alpha");
  check_table(n_, beta_, "beta");
}

FiniteSolution FiniteSolution::from_rows(const std::vector<std::vector<int>>& alpha,
                                         const std::vector<std::vector<int>>& beta) {
  const auto n = alpha.size();
  if (n == 0) throw Error(ErrorKind::malformed, "solution needs n >= 1");
  return FiniteSolution(static_cast<int>(n), flatten(alpha, n, "alpha"), flatten(beta, n, "beta"));
}

Permutation FiniteSolution::alpha_perm(int x) const {
  auto r = alpha_row(x);
  return Permutation(std::vector<int>(r.begin(), r.end()));
}

Permutation FiniteSolution::beta_perm(int y) const {
  auto r = beta_row(y);
  return Permutation(std::vector<int>(r.begin(), r.end()));
}

std::vector<std::vector<int>> FiniteSolution::alpha_rows() const {
  std::vector<std::vector<int>> rows;
  for (int x = 0; x < n_; ++x) rows.emplace_back(alpha_row(x).begin(), alpha_row(x).end());
  return rows;
}

std::vector<std::vector<int>> FiniteSolution::beta_rows() const {
  std::vector<std::vector<int>> rows;
  for (int y = 0; y < n_; ++y) rows.emplace_back(beta_row(y).begin(), beta_row(y).end());
  return rows;
}

FiniteSolution trivial_solution(int n) {
  if (n <= 0) throw Error(ErrorKind::malformed, "solution needs n >= 1");
  std::vector<int> id;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) id.push_back(y);
  return FiniteSolution(n, id, id);
}

FiniteSolution permutation_solution(const Permutation& sigma, const Permutation& tau) {
  const int n = sigma.size();
  if (tau.size() != n) throw Error(ErrorKind::malformed, "sigma and tau must have equal degree");
  std::vector<int> a, b;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      a.push_back(sigma(y));
      b.push_back(tau(y));
    }
  }
  return FiniteSolution(n, std::move(a), std::move(b));
}

std::string_view to_string(Condition c) {
  switch (c) {
    case Condition::non_degenerate_alpha: return "non-degenerate-alpha";
    case Condition::non_degenerate_beta: return "non-degenerate-beta";
    case Condition::not_bijective: return "bijective";
    case Condition::braid: return "braid";
    case Condition::lemma_i: return "lemma-i";
    case Condition::lemma_ii: return "lemma-ii";
    case Condition::lemma_iii: return "lemma-iii";
  }
  return "unknown";
}

SolutionReport validate(const FiniteSolution& s) {
  const int n = s.size();
  SolutionReport rep;
  rep.is_non_degenerate = true;
  for (int x = 0; x < n && rep.is_non_degenerate; ++x) {
    if (!Permutation::is_bijection(s.alpha_row(x))) {
      rep.is_non_degenerate = false;
      rep.failure = Failure{Condition::non_degenerate_alpha, {x}};
    }
  }
  for (int y = 0; y < n && rep.is_non_degenerate; ++y) {
    if (!Permutation::is_bijection(s.beta_row(y))) {
      rep.is_non_degenerate = false;
      rep.failure = Failure{Condition::non_degenerate_beta, {y}};
    }
  }

  std::vector<char> hit(static_cast<std::size_t>(n * n), 0);
  rep.is_bijective = true;
  rep.is_involutive = true;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      auto [u, v] = s(x, y);
      auto& cell = hit[static_cast<std::size_t>(u * n + v)];
      if (cell && rep.is_bijective) {
        rep.is_bijective = false;
        if (!rep.failure) rep.failure = Failure{Condition::not_bijective, {x, y}};
      }
      cell = 1;
      auto [p, q] = s(u, v);
      if (p != x || q != y) rep.is_involutive = false;
    }
  }
  rep.is_symmetric = rep.is_involutive && rep.is_non_degenerate;
  return rep;
}

namespace {

std::optional<Failure> braid_failure(const FiniteSolution& s) {
  const int n = s.size();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        // R on positions (1,2), then (2,3), then (1,2)
        int a = x, b = y, c = z;
        std::tie(a, b) = s(a, b);
        std::tie(b, c) = s(b, c);
        std::tie(a, b) = s(a, b);
        int d = x, e = y, f = z;
        std::tie(e, f) = s(e, f);
        std::tie(d, e) = s(d, e);
        std::tie(e, f) = s(e, f);
        if (a != d || b != e || c != f) return Failure{Condition::braid, {x, y, z}};
      }
    }
  }
  return std::nullopt;
}

std::optional<Failure> lemma_failure(const FiniteSolution& s) {
  const int n = s.size();
  auto A = [&](int x, int y) { return s.alpha(x, y); };
  auto B = [&](int y, int x) { return s.beta(y, x); };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (A(x, A(y, z)) != A(A(x, y), A(B(y, x), z))) return Failure{Condition::lemma_i, {x, y, z}};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (B(y, B(x, z)) != B(B(y, x), B(A(x, y), z))) return Failure{Condition::lemma_ii, {x, y, z}};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (B(A(B(y, x), z), A(x, y)) != A(B(A(y, z), x), B(z, y))) return Failure{Condition::lemma_iii, {x, y, z}};
  return std::nullopt;
}

}  // namespace

SolutionReport check_ybe(const FiniteSolution& s, YbeMethod method) {
  SolutionReport rep = validate(s);
  auto f = method == YbeMethod::braid ? braid_failure(s) : lemma_failure(s);
  rep.ybe_checked = true;
  rep.is_ybe = !f.has_value();
  if (f && !rep.failure) rep.failure = std::move(f);
  return rep;
}

bool is_ybe_solution(const FiniteSolution& s) {
  auto rep = check_ybe(s, YbeMethod::lemma);
  return rep.all_valid();
}

bool is_symmetric_solution(const FiniteSolution& s) {
  auto rep = check_ybe(s, YbeMethod::lemma);
  return rep.all_valid() && rep.is_symmetric;
}

int phi(const FiniteSolution& s, int x, int y) {
  const int u = row_preimage(s.alpha_row(x), y);
  return s.alpha(y, s.beta(u, x));
}

int psi(const FiniteSolution& s, int x, int y) {
  const int u = row_preimage(s.beta_row(y), x);
  return s.beta(x, s.alpha(u, y));
}

Permutation alpha_word(const FiniteSolution& s, const Word& w) {
  Permutation acc = Permutation::identity(s.size());
  for (Letter l : w) {
    const int g = generator_of(l);
    if (g < 0 || g >= s.size()) throw Error(ErrorKind::out_of_range, "letter out of range");
    const Permutation a = s.alpha_perm(g);
    acc = acc * (is_inverse(l) ? a.inverse() : a);
  }
  return acc;
}

CheckResult check_phi_equivariance(const FiniteSolution& s) {
  const int n = s.size();
  for (int g = 0; g < n; ++g)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (phi(s, s.alpha(g, x), s.alpha(g, y)) != s.alpha(g, phi(s, x, y)))
          return CheckResult::fail("phi-equivariance", {g, x, y});
  return CheckResult::ok();
}

FiniteSolution relabel(const FiniteSolution& s, const Permutation& p) {
  const int n = s.size();
  if (p.size() != n) throw Error(ErrorKind::context_mismatch, "relabeling has the wrong degree");
  std::vector<int> a(static_cast<std::size_t>(n * n)), b(static_cast<std::size_t>(n * n));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      a[static_cast<std::size_t>(p(x) * n + p(y))] = p(s.alpha(x, y));
      b[static_cast<std::size_t>(p(x) * n + p(y))] = p(s.beta(x, y));
    }
  }
  return FiniteSolution(n, std::move(a), std::move(b));
}

CheckResult check_yb_homomorphism(const FiniteSolution& from, const FiniteSolution& to, std::span<const int> h) {
  const int n = from.size();
  if (static_cast<int>(h.size()) != n) throw Error(ErrorKind::malformed, "map must be defined on every element");
  for (int v : h)
    if (v < 0 || v >= to.size()) throw Error(ErrorKind::out_of_range, "map value outside the target");
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const auto hx = h[static_cast<std::size_t>(x)], hy = h[static_cast<std::size_t>(y)];
      if (to.alpha(hx, hy) != h[static_cast<std::size_t>(from.alpha(x, y))]) return CheckResult::fail("alpha", {x, y});
      if (to.beta(hx, hy) != h[static_cast<std::size_t>(from.beta(x, y))]) return CheckResult::fail("beta", {x, y});
    }
  }
  return CheckResult::ok();
}

std::optional<Permutation> find_isomorphism(const FiniteSolution& s1, const FiniteSolution& s2) {
  const int n = s1.size();
  if (s2.size() != n) return std::nullopt;
  std::vector<int> h(static_cast<std::size_t>(n), -1);
  std::vector<char> used(static_cast<std::size_t>(n), 0);

  // pairs whose three relevant points are already mapped must be consistent
  auto consistent = [&](int k) {
    for (int x = 0; x <= k; ++x) {
      for (int y = 0; y <= k; ++y) {
        const int hx = h[static_cast<std::size_t>(x)], hy = h[static_cast<std::size_t>(y)];
        const int a = s1.alpha(x, y), b = s1.beta(x, y);
        if (a <= k && s2.alpha(hx, hy) != h[static_cast<std::size_t>(a)]) return false;
        if (b <= k && s2.beta(hx, hy) != h[static_cast<std::size_t>(b)]) return false;
      }
    }
    return true;
  };

  std::function<bool(int)> search = [&](int k) -> bool {
    if (k == n) return static_cast<bool>(check_yb_homomorphism(s1, s2, h));
    for (int v = 0; v < n; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      h[static_cast<std::size_t>(k)] = v;
      used[static_cast<std::size_t>(v)] = 1;
      if (consistent(k) && search(k + 1)) return true;
      used[static_cast<std::size_t>(v)] = 0;
    }
    h[static_cast<std::size_t>(k)] = -1;
    return false;
  };
  if (!search(0)) return std::nullopt;
  return Permutation(h);
}

FiniteSolution canonical_form(const FiniteSolution& s) {
  std::optional<FiniteSolution> best;
  for (const auto& p : all_permutations(s.size())) {
    FiniteSolution r = relabel(s, p);
    if (!best || r < *best) best = std::move(r);
  }
  return *best;
}

}  // namespace ybx
