#include "ybx/finite_group.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "ybx/error.hpp"

namespace ybx {

CheckResult check_group_axioms(const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) return CheckResult::fail("empty", {});
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) return CheckResult::fail("square", {});
    for (int v : row)
      if (v < 0 || v >= n) return CheckResult::fail("closure", {v});
  }
  auto at = [&](int a, int b) { return table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; };
  int e = -1;
  for (int c = 0; c < n && e < 0; ++c) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = at(c, a) == a && at(a, c) == a;
    if (ok) e = c;
  }
  if (e < 0) return CheckResult::fail("identity", {});
  for (int a = 0; a < n; ++a) {
    bool found = false;
    for (int b = 0; b < n && !found; ++b) found = at(a, b) == e && at(b, a) == e;
    if (!found) return CheckResult::fail("inverse", {a});
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (at(at(a, b), c) != at(a, at(b, c))) return CheckResult::fail("associativity", {a, b, c});
  return CheckResult::ok();
}

FiniteGroup::FiniteGroup(const std::vector<std::vector<int>>& table, std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  if (auto r = check_group_axioms(table); !r) throw Error(ErrorKind::malformed, "not a group table, " + r.describe());
  order_ = static_cast<int>(table.size());
  for (const auto& row : table) table_.insert(table_.end(), row.begin(), row.end());
  if (!labels_.empty() && labels_.size() != table.size()) throw Error(ErrorKind::malformed, "one label per element");
  locate_identity_and_inverses();
}

FiniteGroup FiniteGroup::from_trusted_table(int order, std::vector<int> table, std::vector<std::string> labels) {
  FiniteGroup g;
  g.order_ = order;
  g.table_ = std::move(table);
  g.labels_ = std::move(labels);
  g.locate_identity_and_inverses();
  return g;
}

void FiniteGroup::locate_identity_and_inverses() {
  identity_ = -1;
  for (int c = 0; c < order_ && identity_ < 0; ++c) {
    bool ok = true;
    for (int a = 0; a < order_ && ok; ++a) ok = mul(c, a) == a;
    if (ok) identity_ = c;
  }
  if (identity_ < 0) throw Error(ErrorKind::malformed, "no identity element");
  inverse_.assign(static_cast<std::size_t>(order_), -1);
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b)
      if (mul(a, b) == identity_) inverse_[static_cast<std::size_t>(a)] = b;
}

int FiniteGroup::pow(int a, long long k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  int r = identity_;
  for (long long i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

std::vector<std::vector<int>> FiniteGroup::rows() const {
  std::vector<std::vector<int>> out;
  for (int a = 0; a < order_; ++a) out.emplace_back(table_.begin() + a * order_, table_.begin() + (a + 1) * order_);
  return out;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < a; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

FiniteGroup cyclic_group(int n) {
  if (n <= 0) throw Error(ErrorKind::malformed, "cyclic group needs n >= 1");
  std::vector<int> t;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t.push_back((a + b) % n);
  return FiniteGroup::from_trusted_table(n, std::move(t));
}

FiniteGroup klein_four_group() {
  std::vector<int> t;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) t.push_back(a ^ b);
  return FiniteGroup::from_trusted_table(4, std::move(t), {"00", "01", "10", "11"});
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const int m = h.order(), n = g.order() * m;
  std::vector<int> t(static_cast<std::size_t>(n * n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a * n + b)] = g.mul(a / m, b / m) * m + h.mul(a % m, b % m);
  return FiniteGroup::from_trusted_table(n, std::move(t));
}

CheckResult check_action_by_automorphisms(const FiniteGroup& g, const FiniteGroup& h, const std::vector<Permutation>& maps) {
  if (static_cast<int>(maps.size()) != g.order()) throw Error(ErrorKind::malformed, "one map per group element");
  for (int a = 0; a < g.order(); ++a) {
    if (maps[static_cast<std::size_t>(a)].size() != h.order()) throw Error(ErrorKind::malformed, "map has the wrong degree");
    if (!is_automorphism(h, maps[static_cast<std::size_t>(a)])) return CheckResult::fail("automorphism", {a});
  }
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      if (maps[static_cast<std::size_t>(g.mul(a, b))] != maps[static_cast<std::size_t>(a)] * maps[static_cast<std::size_t>(b)])
        return CheckResult::fail("action", {a, b});
  return CheckResult::ok();
}

FiniteGroup semidirect_product(const FiniteGroup& g, const FiniteGroup& h, const std::vector<Permutation>& theta) {
  if (auto r = check_action_by_automorphisms(g, h, theta); !r) throw Error(ErrorKind::invalid_action, r.describe());
  const int m = h.order(), n = g.order() * m;
  std::vector<int> t(static_cast<std::size_t>(n * n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int ga = a / m, ha = a % m, gb = b / m, hb = b % m;
      t[static_cast<std::size_t>(a * n + b)] = g.mul(ga, gb) * m + h.mul(ha, theta[static_cast<std::size_t>(ga)](hb));
    }
  return FiniteGroup::from_trusted_table(n, std::move(t));
}

int PermutationGroup::index_of(const Permutation& p) const {
  auto it = index.find(p);
  if (it == index.end()) throw Error(ErrorKind::out_of_range, "permutation is not in the group");
  return it->second;
}

namespace {

PermutationGroup from_elements(std::vector<Permutation> elements) {
  PermutationGroup pg{FiniteGroup::from_trusted_table(1, {0}), std::move(elements), {}};
  const int n = static_cast<int>(pg.elements.size());
  for (int i = 0; i < n; ++i) pg.index.emplace(pg.elements[static_cast<std::size_t>(i)], i);
  std::vector<int> t(static_cast<std::size_t>(n * n));
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a) {
    labels.push_back(pg.elements[static_cast<std::size_t>(a)].to_string());
    for (int b = 0; b < n; ++b)
      t[static_cast<std::size_t>(a * n + b)] = pg.index.at(pg.elements[static_cast<std::size_t>(a)] * pg.elements[static_cast<std::size_t>(b)]);
  }
  pg.group = FiniteGroup::from_trusted_table(n, std::move(t), std::move(labels));
  return pg;
}

}  // namespace

PermutationGroup symmetric_group(int degree) {
  if (degree < 1 || degree > 7) throw Error(ErrorKind::order_too_large, "symmetric group degree must be in 1..7");
  return from_elements(all_permutations(degree));
}

PermutationGroup generated_group(int degree, const std::vector<Permutation>& generators) {
  std::vector<Permutation> elements{Permutation::identity(degree)};
  std::map<Permutation, int> seen{{elements.front(), 0}};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& g : generators) {
      Permutation next = elements[i] * g;
      if (seen.emplace(next, static_cast<int>(elements.size())).second) {
        elements.push_back(std::move(next));
        if (elements.size() > 5040) throw Error(ErrorKind::order_too_large, "generated group is too large");
      }
    }
  }
  return from_elements(std::move(elements));
}

CheckResult check_homomorphism(const FiniteGroup& from, const FiniteGroup& to, std::span<const int> f) {
  if (static_cast<int>(f.size()) != from.order()) throw Error(ErrorKind::malformed, "map must cover the source group");
  for (int v : f)
    if (v < 0 || v >= to.order()) throw Error(ErrorKind::out_of_range, "map value outside the target group");
  for (int a = 0; a < from.order(); ++a)
    for (int b = 0; b < from.order(); ++b)
      if (f[static_cast<std::size_t>(from.mul(a, b))] != to.mul(f[static_cast<std::size_t>(a)], f[static_cast<std::size_t>(b)]))
        return CheckResult::fail("homomorphism", {a, b});
  return CheckResult::ok();
}

bool is_automorphism(const FiniteGroup& g, const Permutation& p) {
  return p.size() == g.order() && static_cast<bool>(check_homomorphism(g, g, p.images()));
}

std::vector<Permutation> automorphisms(const FiniteGroup& g) {
  if (g.order() > 8) throw Error(ErrorKind::order_too_large, "automorphism search is limited to order 8");
  std::vector<Permutation> out;
  for (const auto& p : all_permutations(g.order()))
    if (p(g.identity()) == g.identity() && is_automorphism(g, p)) out.push_back(p);
  return out;
}

std::optional<std::vector<int>> find_group_isomorphism(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order() != b.order()) return std::nullopt;
  if (a.order() > 8) throw Error(ErrorKind::order_too_large, "isomorphism search is limited to order 8");
  for (const auto& p : all_permutations(a.order()))
    if (check_homomorphism(a, b, p.images())) return p.images();
  return std::nullopt;
}

}  // namespace ybx
