#include "oracles.hpp"

#include <algorithm>
#include <numeric>

namespace oracle {

using ybx::BigInt;
using ybx::FiniteSolution;

std::pair<int, int> apply(const FiniteSolution& s, int x, int y) {
  const int n = s.size();
  return {s.alpha_table()[static_cast<std::size_t>(x * n + y)], s.beta_table()[static_cast<std::size_t>(y * n + x)]};
}

bool braid_holds(const FiniteSolution& s) {
  const int n = s.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        int a = x, b = y, c = z;
        std::tie(a, b) = apply(s, a, b);
        std::tie(b, c) = apply(s, b, c);
        std::tie(a, b) = apply(s, a, b);
        int p = x, q = y, r = z;
        std::tie(q, r) = apply(s, q, r);
        std::tie(p, q) = apply(s, p, q);
        std::tie(q, r) = apply(s, q, r);
        if (a != p || b != q || c != r) return false;
      }
  return true;
}

bool involutive(const FiniteSolution& s) {
  for (int x = 0; x < s.size(); ++x)
    for (int y = 0; y < s.size(); ++y) {
      auto [u, v] = apply(s, x, y);
      if (apply(s, u, v) != std::pair{x, y}) return false;
    }
  return true;
}

void for_each_family(int n, const std::function<void(const FiniteSolution&)>& visit) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  const std::size_t rows = static_cast<std::size_t>(2 * n);
  std::vector<std::size_t> pick(rows, 0);
  for (;;) {
    std::vector<int> a, b;
    for (std::size_t r = 0; r < rows; ++r) {
      auto& dst = r < static_cast<std::size_t>(n) ? a : b;
      dst.insert(dst.end(), perms[pick[r]].begin(), perms[pick[r]].end());
    }
    visit(FiniteSolution(n, a, b));
    std::size_t r = rows;
    while (r > 0 && ++pick[r - 1] == perms.size()) pick[--r] = 0;
    if (r == 0) return;
  }
}

std::vector<FiniteSolution> brute_force_solutions(int n, bool involutive_only) {
  std::vector<FiniteSolution> out;
  for_each_family(n, [&](const FiniteSolution& s) {
    if (braid_holds(s) && (!involutive_only || involutive(s))) out.push_back(s);
  });
  return out;
}

std::vector<std::vector<int>> brute_force_cycle_sets(int n) {
  const int cells = n * n;
  std::vector<int> t(static_cast<std::size_t>(cells), 0);
  std::vector<std::vector<int>> out;
  auto op = [&](int x, int y) { return t[static_cast<std::size_t>(x * n + y)]; };
  for (;;) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      std::vector<bool> seen(static_cast<std::size_t>(n), false);
      for (int y = 0; y < n; ++y) seen[static_cast<std::size_t>(op(x, y))] = true;
      ok = std::all_of(seen.begin(), seen.end(), [](bool v) { return v; });
    }
    if (ok) {
      std::vector<bool> seen(static_cast<std::size_t>(n), false);
      for (int x = 0; x < n; ++x) seen[static_cast<std::size_t>(op(x, x))] = true;
      ok = std::all_of(seen.begin(), seen.end(), [](bool v) { return v; });
    }
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y)
        for (int z = 0; z < n && ok; ++z) ok = op(op(x, y), op(x, z)) == op(op(y, x), op(y, z));
    if (ok) out.push_back(t);
    int i = cells;
    while (i > 0 && ++t[static_cast<std::size_t>(i - 1)] == n) t[static_cast<std::size_t>(--i)] = 0;
    if (i == 0) return out;
  }
}

int isomorphism_classes(const std::vector<FiniteSolution>& sols) {
  std::vector<int> rep;
  for (std::size_t i = 0; i < sols.size(); ++i) {
    const FiniteSolution& s = sols[i];
    const int n = s.size();
    bool found = false;
    for (int r : rep) {
      const FiniteSolution& t = sols[static_cast<std::size_t>(r)];
      if (t.size() != n) continue;
      std::vector<int> h(static_cast<std::size_t>(n));
      std::iota(h.begin(), h.end(), 0);
      do {
        bool iso = true;
        for (int x = 0; x < n && iso; ++x)
          for (int y = 0; y < n && iso; ++y) {
            auto [a, b] = apply(s, x, y);
            auto [c, d] = apply(t, h[static_cast<std::size_t>(x)], h[static_cast<std::size_t>(y)]);
            iso = h[static_cast<std::size_t>(a)] == c && h[static_cast<std::size_t>(b)] == d;
          }
        found = iso;
      } while (!found && std::next_permutation(h.begin(), h.end()));
      if (found) break;
    }
    if (!found) rep.push_back(static_cast<int>(i));
  }
  return static_cast<int>(rep.size());
}

namespace {

using Mat = std::vector<std::vector<BigInt>>;

Mat to_big(const std::vector<std::vector<long long>>& rows) {
  Mat m;
  for (const auto& r : rows) m.emplace_back(r.begin(), r.end());
  return m;
}

BigInt gcd_big(BigInt a, BigInt b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    BigInt r = a % b;
    a = b;
    b = r;
  }
  return a;
}

// Bareiss fraction-free determinant.
BigInt det(Mat m) {
  const std::size_t n = m.size();
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t s = k + 1;
      while (s < n && m[s][k] == 0) ++s;
      if (s == n) return 0;
      std::swap(m[k], m[s]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

void combinations(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> c(k);
  std::iota(c.begin(), c.end(), 0);
  if (k > n) return;
  for (;;) {
    f(c);
    std::size_t i = k;
    while (i > 0 && c[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

}  // namespace

std::vector<BigInt> smith_by_elimination(std::vector<std::vector<long long>> rows) {
  Mat m = to_big(rows);
  const std::size_t r = m.size(), c = r ? m[0].size() : 0, k = std::min(r, c);
  // Alternate Euclidean clearing of column t and row t until both are clear.
  for (std::size_t t = 0; t < k; ++t) {
    for (bool dirty = true; dirty;) {
      dirty = false;
      for (std::size_t i = t + 1; i < r; ++i)
        while (m[i][t] != 0) {
          BigInt q = m[t][t] == 0 ? BigInt(0) : m[i][t] / m[t][t];
          for (std::size_t j = 0; j < c; ++j) m[i][j] -= q * m[t][j];
          std::swap(m[i], m[t]);
        }
      for (std::size_t j = t + 1; j < c; ++j)
        while (m[t][j] != 0) {
          BigInt q = m[t][t] == 0 ? BigInt(0) : m[t][j] / m[t][t];
          for (std::size_t i = 0; i < r; ++i) m[i][j] -= q * m[i][t];
          for (std::size_t i = 0; i < r; ++i) std::swap(m[i][j], m[i][t]);
          dirty = true;
        }
    }
  }
  std::vector<BigInt> d;
  for (std::size_t t = 0; t < k; ++t) d.push_back(m[t][t] < 0 ? BigInt(-m[t][t]) : m[t][t]);
  // Diagonal to divisibility chain: (a, b) -> (gcd, lcm), zeros last.
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      if (d[i] == 0 && d[j] != 0) {
        std::swap(d[i], d[j]);
        continue;
      }
      if (d[j] == 0) continue;
      BigInt g = gcd_big(d[i], d[j]);
      BigInt l = d[i] / g * d[j];
      d[i] = g;
      d[j] = l;
    }
  return d;
}

std::vector<BigInt> smith_by_minors(const std::vector<std::vector<long long>>& rows) {
  const Mat m = to_big(rows);
  const std::size_t r = m.size(), c = r ? m[0].size() : 0, k = std::min(r, c);
  std::vector<BigInt> dk{1};
  for (std::size_t s = 1; s <= k; ++s) {
    BigInt g = 0;
    combinations(r, s, [&](const std::vector<std::size_t>& ri) {
      combinations(c, s, [&](const std::vector<std::size_t>& ci) {
        Mat sub(s, std::vector<BigInt>(s));
        for (std::size_t a = 0; a < s; ++a)
          for (std::size_t b = 0; b < s; ++b) sub[a][b] = m[ri[a]][ci[b]];
        g = gcd_big(g, det(sub));
      });
    });
    dk.push_back(g);
  }
  std::vector<BigInt> out;
  for (std::size_t s = 1; s <= k; ++s) out.push_back(dk[s] == 0 ? BigInt(0) : dk[s] / dk[s - 1]);
  return out;
}

int brute_force_compatible_pairs(const ybx::FiniteGroup& G) {
  const int n = G.order();
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const std::size_t slots = static_cast<std::size_t>(2 * n);
  std::vector<std::size_t> pick(slots, 0);
  int count = 0;
  for (;;) {
    auto al = [&](int g, int h) { return perms[pick[static_cast<std::size_t>(g)]][static_cast<std::size_t>(h)]; };
    auto be = [&](int h, int g) { return perms[pick[static_cast<std::size_t>(n + h)]][static_cast<std::size_t>(g)]; };
    bool ok = true;
    for (int g = 0; g < n && ok; ++g)
      for (int h = 0; h < n && ok; ++h)
        for (int x = 0; x < n && ok; ++x)
          ok = al(G.mul(g, h), x) == al(g, al(h, x)) && be(G.mul(g, h), x) == be(h, be(g, x));
    for (int x = 0; x < n && ok; ++x) ok = al(G.identity(), x) == x && be(G.identity(), x) == x;
    for (int g = 0; g < n && ok; ++g)
      for (int h = 0; h < n && ok; ++h) ok = G.mul(g, h) == G.mul(al(g, h), be(h, g));
    if (ok) ++count;
    std::size_t i = slots;
    while (i > 0 && ++pick[i - 1] == perms.size()) pick[--i] = 0;
    if (i == 0) return count;
  }
}

}  // namespace oracle
