#include "ybx/constructions.hpp"

#include <functional>

#include "ybx/error.hpp"

namespace ybx {

FiniteSolution dual(const FiniteSolution& s) {
  return FiniteSolution(s.size(), s.beta_table(), s.alpha_table());
}

FiniteSolution derived(const FiniteSolution& s, DerivedSide side) {
  const int n = s.size();
  std::vector<int> a(static_cast<std::size_t>(n * n)), b(static_cast<std::size_t>(n * n));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const auto xy = static_cast<std::size_t>(x * n + y);
      const auto yx = static_cast<std::size_t>(y * n + x);
      if (side == DerivedSide::right) {
        a[xy] = y;
        b[yx] = phi(s, x, y);
      } else {
        a[xy] = psi(s, x, y);
        b[yx] = x;
      }
    }
  }
  return FiniteSolution(n, std::move(a), std::move(b));
}

namespace {

bool phi_is_trivial(const FiniteSolution& s) {
  for (int x = 0; x < s.size(); ++x)
    for (int y = 0; y < s.size(); ++y)
      if (phi(s, x, y) != x) return false;
  return true;
}

std::vector<int> flatten_rows(const std::vector<std::vector<int>>& rows) {
  std::vector<int> flat;
  for (const auto& r : rows) {
    if (r.size() != rows.size()) throw Error(ErrorKind::malformed, "cycle set table must be square");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return flat;
}

}  // namespace

PsiEquivalenceReport psi_equivalence_report(const FiniteSolution& s) {
  PsiEquivalenceReport r;
  const FiniteSolution d = dual(s);
  r.symmetric = is_symmetric_solution(s);
  r.left_equals_right_derived = derived(s, DerivedSide::left) == derived(s, DerivedSide::right);
  r.dual_symmetric = is_symmetric_solution(d);
  r.phi_trivial = phi_is_trivial(s);
  r.dual_phi_trivial = phi_is_trivial(d);
  return r;
}

CycleSet::CycleSet(int n, std::vector<int> table) : n_(n), table_(std::move(table)) {
  if (n_ <= 0) throw Error(ErrorKind::malformed, "cycle set needs n >= 1");
  if (table_.size() != static_cast<std::size_t>(n_ * n_)) throw Error(ErrorKind::malformed, "cycle set table must be n x n");
  for (int v : table_)
    if (v < 0 || v >= n_) throw Error(ErrorKind::malformed, "cycle set entry out of range");
}

CycleSet CycleSet::from_rows(const std::vector<std::vector<int>>& rows) {
  return CycleSet(static_cast<int>(rows.size()), flatten_rows(rows));
}

std::vector<std::vector<int>> CycleSet::rows() const {
  std::vector<std::vector<int>> out;
  for (int x = 0; x < n_; ++x)
    out.emplace_back(table_.begin() + x * n_, table_.begin() + (x + 1) * n_);
  return out;
}

int CycleSet::left_inverse(int x, int y) const {
  for (int z = 0; z < n_; ++z)
    if ((*this)(x, z) == y) return z;
  throw Error(ErrorKind::degenerate_cycle_set, "left multiplication is not bijective");
}

CycleSet trivial_cycle_set(int n) {
  std::vector<int> t;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t.push_back(y);
  return CycleSet(n, std::move(t));
}

CycleSetReport validate_cycle_set(const CycleSet& c) {
  const int n = c.size();
  CycleSetReport r;
  for (int x = 0; x < n && r.axiom.holds; ++x)
    for (int y = 0; y < n && r.axiom.holds; ++y)
      for (int z = 0; z < n; ++z)
        if (c(c(x, y), c(x, z)) != c(c(y, x), c(y, z))) {
          r.axiom = CheckResult::fail("cycle-set-axiom", {x, y, z});
          break;
        }
  r.left_multiplications_bijective = true;
  std::vector<int> squares;
  for (int x = 0; x < n; ++x) {
    std::vector<int> row(c.table().begin() + x * n, c.table().begin() + (x + 1) * n);
    r.left_multiplications_bijective = r.left_multiplications_bijective && Permutation::is_bijection(row);
    squares.push_back(c(x, x));
  }
  r.square_bijective = Permutation::is_bijection(squares);
  return r;
}

CycleSet to_cycle_set(const FiniteSolution& s) {
  if (!is_symmetric_solution(s)) throw Error(ErrorKind::not_symmetric, "cycle sets correspond to symmetric solutions only");
  const int n = s.size();
  std::vector<int> t(static_cast<std::size_t>(n * n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[static_cast<std::size_t>(x * n + s.beta(x, y))] = y;
  return CycleSet(n, std::move(t));
}

namespace {

void require_non_degenerate(const CycleSet& c) {
  const auto r = validate_cycle_set(c);
  if (!r.axiom) throw Error(ErrorKind::not_cycle_set, r.axiom.describe());
  if (!r.left_multiplications_bijective || !r.square_bijective)
    throw Error(ErrorKind::degenerate_cycle_set, "cycle set is degenerate");
}

}  // namespace

FiniteSolution from_cycle_set(const CycleSet& c) {
  require_non_degenerate(c);
  const int n = c.size();
  std::vector<int> a(static_cast<std::size_t>(n * n)), b(static_cast<std::size_t>(n * n));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const int u = c.left_inverse(y, x);
      a[static_cast<std::size_t>(x * n + y)] = c(u, y);
      b[static_cast<std::size_t>(y * n + x)] = u;
    }
  }
  return FiniteSolution(n, std::move(a), std::move(b));
}

std::vector<CycleSet> enumerate_cycle_sets(int n) {
  if (n < 1 || n > 4) throw Error(ErrorKind::order_too_large, "cycle set enumeration is limited to n <= 4");
  const auto perms = all_permutations(n);
  std::vector<CycleSet> out;
  std::vector<std::size_t> pick(static_cast<std::size_t>(n), 0);
  std::function<void(int)> rec = [&](int x) {
    if (x == n) {
      std::vector<int> t;
      for (int r = 0; r < n; ++r) {
        const auto& img = perms[pick[static_cast<std::size_t>(r)]].images();
        t.insert(t.end(), img.begin(), img.end());
      }
      CycleSet c(n, std::move(t));
      if (validate_cycle_set(c).is_non_degenerate_cycle_set()) out.push_back(std::move(c));
      return;
    }
    for (std::size_t p = 0; p < perms.size(); ++p) {
      pick[static_cast<std::size_t>(x)] = p;
      rec(x + 1);
    }
  };
  rec(0);
  return out;
}

CycleAction trivial_action(const CycleSet& X, const CycleSet& S) {
  std::vector<std::vector<int>> pi(static_cast<std::size_t>(X.size()), Permutation::identity(S.size()).images());
  return CycleAction{X, S, std::move(pi)};
}

CheckResult validate_cycle_action(const CycleAction& a) {
  const int nx = a.X.size(), ns = a.S.size();
  if (a.pi.size() != static_cast<std::size_t>(nx)) throw Error(ErrorKind::malformed, "pi needs one row per element of X");
  for (const auto& row : a.pi) {
    if (row.size() != static_cast<std::size_t>(ns)) throw Error(ErrorKind::malformed, "pi rows must have |S| entries");
    for (int v : row)
      if (v < 0 || v >= ns) throw Error(ErrorKind::malformed, "pi entry out of range");
  }
  for (int x = 0; x < nx; ++x)
    if (!Permutation::is_bijection(a.pi[static_cast<std::size_t>(x)])) return CheckResult::fail("iii", {x});
  const auto& S = a.S;
  const auto& X = a.X;
  for (int x = 0; x < nx; ++x)
    for (int s = 0; s < ns; ++s)
      for (int t = 0; t < ns; ++t)
        if (a.pi_of(x, S(s, t)) != S(a.pi_of(x, s), a.pi_of(x, t))) return CheckResult::fail("i", {x, s, t});
  for (int x = 0; x < nx; ++x)
    for (int y = 0; y < nx; ++y)
      for (int s = 0; s < ns; ++s)
        if (a.pi_of(X(y, x), a.pi_of(y, s)) != a.pi_of(X(x, y), a.pi_of(x, s))) return CheckResult::fail("ii", {x, y, s});
  return CheckResult::ok();
}

namespace {

void require_valid(const CycleAction& a) {
  if (auto r = validate_cycle_action(a); !r) throw Error(ErrorKind::invalid_action, r.describe());
  require_non_degenerate(a.X);
  require_non_degenerate(a.S);
}

}  // namespace

CycleSet cycleset_semidirect(const CycleAction& a) {
  require_valid(a);
  const int nx = a.X.size(), ns = a.S.size(), n = nx * ns;
  std::vector<int> t(static_cast<std::size_t>(n * n));
  for (int x = 0; x < nx; ++x)
    for (int s = 0; s < ns; ++s)
      for (int y = 0; y < nx; ++y)
        for (int u = 0; u < ns; ++u) {
          const int xy = a.X(x, y), yx = a.X(y, x);
          const int gamma = a.S(a.pi_of(xy, s), a.pi_of(yx, u));
          t[static_cast<std::size_t>(a.product_index(x, s) * n + a.product_index(y, u))] = a.product_index(xy, gamma);
        }
  return CycleSet(n, std::move(t));
}

FiniteSolution semidirect_solution(const CycleAction& a) {
  require_valid(a);
  const FiniteSolution rx = from_cycle_set(a.X);
  const FiniteSolution rs = from_cycle_set(a.S);
  const int nx = a.X.size(), ns = a.S.size(), n = nx * ns;
  std::vector<Permutation> pi_inv;
  for (const auto& row : a.pi) pi_inv.push_back(Permutation(row).inverse());
  std::vector<int> al(static_cast<std::size_t>(n * n)), be(static_cast<std::size_t>(n * n));
  for (int x = 0; x < nx; ++x)
    for (int s = 0; s < ns; ++s)
      for (int y = 0; y < nx; ++y)
        for (int t = 0; t < ns; ++t) {
          const int xs = a.product_index(x, s), yt = a.product_index(y, t);
          const int axy = rx.alpha(x, y);
          const int pxt = a.pi_of(x, t);
          al[static_cast<std::size_t>(xs * n + yt)] = a.product_index(axy, rs.alpha(s, pxt));
          be[static_cast<std::size_t>(yt * n + xs)] =
              a.product_index(rx.beta(y, x), pi_inv[static_cast<std::size_t>(axy)](rs.beta(pxt, s)));
        }
  return FiniteSolution(n, std::move(al), std::move(be));
}

CheckResult check_commutation(const CycleAction& a) {
  const FiniteSolution via_cycle_set = from_cycle_set(cycleset_semidirect(a));
  const FiniteSolution via_formula = semidirect_solution(a);
  const int n = via_formula.size(), ns = a.S.size();
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      if (via_cycle_set(p, q) != via_formula(p, q)) return CheckResult::fail("commutation", {p / ns, p % ns, q / ns, q % ns});
  return CheckResult::ok();
}

std::vector<CycleAction> enumerate_cycle_actions(const CycleSet& X, const CycleSet& S) {
  const auto perms = all_permutations(S.size());
  std::vector<CycleAction> out;
  CycleAction cur{X, S, std::vector<std::vector<int>>(static_cast<std::size_t>(X.size()))};
  std::function<void(int)> rec = [&](int x) {
    if (x == X.size()) {
      if (validate_cycle_action(cur)) out.push_back(cur);
      return;
    }
    for (const auto& p : perms) {
      cur.pi[static_cast<std::size_t>(x)] = p.images();
      rec(x + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace ybx
