#include "ybx/affine.hpp"

#include <algorithm>
#include <deque>
#include <optional>

#include "ybx/error.hpp"

namespace ybx {

namespace {

std::size_t at(int i) { return static_cast<std::size_t>(i); }

void require_shape(const AffineAction& r) {
  const int ng = r.source.order(), na = r.target.order();
  if (static_cast<int>(r.pi.size()) != ng || static_cast<int>(r.b.size()) != ng)
    throw Error(ErrorKind::malformed, "affine action needs one pi and one b value per group element");
  for (const auto& p : r.pi)
    if (p.size() != na) throw Error(ErrorKind::malformed, "pi entries must permute the target group");
  for (int v : r.b)
    if (v < 0 || v >= na) throw Error(ErrorKind::malformed, "b value outside the target group");
}

void require_valid(const AffineAction& r) {
  if (auto c = validate_affine(r); !c) throw Error(ErrorKind::invalid_action, "affine action invalid, " + c.describe());
}

void require_regular(const AffineAction& r) {
  require_valid(r);
  if (!is_regular(r)) throw Error(ErrorKind::not_regular, "affine action is not regular");
}

FiniteGroup checked_group(std::vector<int> table, int order, std::vector<std::string> labels, const char* what) {
  std::vector<std::vector<int>> rows;
  for (int a = 0; a < order; ++a) rows.emplace_back(table.begin() + a * order, table.begin() + (a + 1) * order);
  if (auto c = check_group_axioms(rows); !c)
    throw Error(ErrorKind::postcondition, std::string(what) + " is not a group, " + c.describe());
  return FiniteGroup::from_trusted_table(order, std::move(table), std::move(labels));
}

Permutation b_inverse(const AffineAction& r) { return Permutation(r.b).inverse(); }

}  // namespace

CheckResult validate_affine(const AffineAction& r) {
  require_shape(r);
  const FiniteGroup& G = r.source;
  const FiniteGroup& A = r.target;
  const int ng = G.order(), na = A.order();
  for (int g = 0; g < ng; ++g)
    if (!is_automorphism(A, r.pi[at(g)])) return CheckResult::fail("automorphism", {g});
  for (int g = 0; g < ng; ++g)
    for (int h = 0; h < ng; ++h)
      if (r.pi[at(G.mul(g, h))] != r.pi[at(g)] * r.pi[at(h)]) return CheckResult::fail("homomorphism", {g, h});
  for (int g = 0; g < ng; ++g)
    for (int h = 0; h < ng; ++h)
      if (r.b[at(G.mul(g, h))] != A.mul(r.b[at(g)], r.pi[at(g)](r.b[at(h)]))) return CheckResult::fail("cocycle", {g, h});
  for (int g = 0; g < ng; ++g)
    for (int h = 0; h < ng; ++h)
      for (int a = 0; a < na; ++a)
        if (r.rho(G.mul(g, h), a) != r.rho(g, r.rho(h, a))) return CheckResult::fail("affine", {g, h, a});
  return CheckResult::ok();
}

RegularityReport regularity(const AffineAction& r) {
  require_shape(r);
  RegularityReport rep;
  const int ng = r.source.order(), na = r.target.order();
  rep.b_bijective = ng == na && Permutation::is_bijection(r.b);

  std::vector<bool> hit(at(na), false);
  for (int g = 0; g < ng; ++g) hit[at(r.rho(g, r.target.identity()))] = true;
  const bool transitive = std::all_of(hit.begin(), hit.end(), [](bool v) { return v; });
  bool free = true;
  for (int g = 0; g < ng && free; ++g)
    if (g != r.source.identity())
      for (int a = 0; a < na && free; ++a) free = r.rho(g, a) != a;
  rep.orbit_regular = transitive && free;
  if (rep.b_bijective != rep.orbit_regular)
    throw Error(ErrorKind::postcondition, "b-bijectivity and orbit regularity disagree");
  return rep;
}

bool is_regular(const AffineAction& r) { return regularity(r).b_bijective; }

EquivarianceReport check_equivariant(std::span<const int> f, const AffineAction& r1, const AffineAction& r2) {
  require_shape(r1);
  require_shape(r2);
  if (r1.source.order() != r2.source.order()) throw Error(ErrorKind::context_mismatch, "actions have different source groups");
  if (!check_homomorphism(r1.target, r2.target, f)) throw Error(ErrorKind::not_a_homomorphism, "f is not a group homomorphism");
  const int ng = r1.source.order(), na = r1.target.order();
  EquivarianceReport rep{true, true, true};
  for (int g = 0; g < ng; ++g) {
    rep.translations_match = rep.translations_match && r2.b[at(g)] == f[at(r1.b[at(g)])];
    for (int a = 0; a < na; ++a) {
      rep.equivariant = rep.equivariant && f[at(r1.rho(g, a))] == r2.rho(g, f[at(a)]);
      rep.linear_match = rep.linear_match && f[at(r1.pi[at(g)](a))] == r2.pi[at(g)](f[at(a)]);
    }
  }
  std::vector<bool> hit(at(na), false);
  for (int v : r1.b) hit[at(v)] = true;
  const bool b1_onto = std::all_of(hit.begin(), hit.end(), [](bool v) { return v; });
  if (b1_onto && rep.translations_match && !rep.linear_match)
    throw Error(ErrorKind::postcondition, "matching translations did not force matching linear parts");
  if (rep.equivariant != (rep.translations_match && rep.linear_match))
    throw Error(ErrorKind::postcondition, "equivariance disagrees with its componentwise form");
  return rep;
}

AffineAction conjugate_affine(const AffineAction& r, const Permutation& f) {
  require_shape(r);
  if (!is_automorphism(r.target, f)) throw Error(ErrorKind::not_a_homomorphism, "f is not an automorphism of the target");
  AffineAction out = r;
  const Permutation finv = f.inverse();
  for (std::size_t g = 0; g < out.pi.size(); ++g) {
    out.pi[g] = f * r.pi[g] * finv;
    out.b[g] = f(r.b[g]);
  }
  return out;
}

CheckResult check_compatible_pair(const FiniteGroup& G, const CompatiblePair& p) {
  const int n = G.order();
  if (static_cast<int>(p.alpha.size()) != n || static_cast<int>(p.beta.size()) != n)
    throw Error(ErrorKind::malformed, "pair needs one alpha and one beta per group element");
  for (int g = 0; g < n; ++g)
    if (p.alpha[at(g)].size() != n || p.beta[at(g)].size() != n) throw Error(ErrorKind::malformed, "pair entries must permute G");
  if (!p.alpha[at(G.identity())].is_identity()) return CheckResult::fail("alpha-action", {G.identity(), G.identity()});
  if (!p.beta[at(G.identity())].is_identity()) return CheckResult::fail("beta-action", {G.identity(), G.identity()});
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      if (p.alpha[at(G.mul(g, h))] != p.alpha[at(g)] * p.alpha[at(h)]) return CheckResult::fail("alpha-action", {g, h});
      if (p.beta[at(G.mul(g, h))] != p.beta[at(h)] * p.beta[at(g)]) return CheckResult::fail("beta-action", {g, h});
    }
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      if (G.mul(g, h) != G.mul(p.alpha[at(g)](h), p.beta[at(h)](g))) return CheckResult::fail("compatible", {g, h});
  return CheckResult::ok();
}

AffineAction pair_to_affine(const FiniteGroup& G, const CompatiblePair& p) {
  if (auto c = check_compatible_pair(G, p); !c) throw Error(ErrorKind::not_compatible, c.describe());
  const int n = G.order();
  std::vector<int> table(at(n * n));
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) table[at(g * n + h)] = G.mul(g, p.alpha[at(G.inv(g))](h));
  FiniteGroup A = checked_group(std::move(table), n, G.labels(), "(G, ⊙)");
  AffineAction r{G, std::move(A), p.alpha, Permutation::identity(n).images()};
  if (auto c = validate_affine(r); !c) throw Error(ErrorKind::postcondition, "pair_to_affine produced an invalid action, " + c.describe());
  if (!is_regular(r)) throw Error(ErrorKind::postcondition, "pair_to_affine produced a non-regular action");
  return r;
}

CompatiblePair affine_to_pair(const AffineAction& r) {
  require_regular(r);
  const FiniteGroup& G = r.source;
  const int n = G.order();
  const Permutation bperm(r.b);
  const Permutation binv = bperm.inverse();
  CompatiblePair p;
  for (int g = 0; g < n; ++g) p.alpha.push_back(binv * r.pi[at(g)] * bperm);
  for (int h = 0; h < n; ++h) {
    std::vector<int> img;
    for (int g = 0; g < n; ++g) img.push_back(G.mul(G.mul(G.inv(p.alpha[at(g)](h)), g), h));
    p.beta.emplace_back(std::move(img));
  }
  if (auto c = check_compatible_pair(G, p); !c) throw Error(ErrorKind::postcondition, "affine_to_pair produced an incompatible pair, " + c.describe());
  return p;
}

FiniteSolution pair_to_solution(const CompatiblePair& p) {
  const int n = static_cast<int>(p.alpha.size());
  std::vector<int> a, b;
  for (int g = 0; g < n; ++g) {
    a.insert(a.end(), p.alpha[at(g)].images().begin(), p.alpha[at(g)].images().end());
    b.insert(b.end(), p.beta[at(g)].images().begin(), p.beta[at(g)].images().end());
  }
  return FiniteSolution(n, std::move(a), std::move(b));
}

FiniteSolution affine_to_solution(const AffineAction& r) { return pair_to_solution(affine_to_pair(r)); }

CheckResult check_beta_adjoint(const AffineAction& r) {
  const CompatiblePair p = affine_to_pair(r);
  const FiniteGroup& G = r.source;
  const FiniteGroup A = pair_to_affine(G, p).target;
  auto inverse_in_g = [&](int k) { return G.inv(k); };
  auto inverse_in_a = [&](int k) { return A.inv(k); };
  for (int g = 0; g < G.order(); ++g)
    for (int h = 0; h < G.order(); ++h) {
      const int k = p.alpha[at(g)](h);
      const int ad = A.mul(A.mul(inverse_in_a(k), g), k);
      if (p.alpha[at(inverse_in_g(k))](ad) != p.beta[at(h)](g)) return CheckResult::fail("beta-adjoint", {g, h});
    }
  return CheckResult::ok();
}

namespace {

std::vector<int> generating_set(const FiniteGroup& G) {
  std::vector<int> gens;
  std::vector<bool> in(at(G.order()), false);
  in[at(G.identity())] = true;
  for (int g = 0; g < G.order(); ++g) {
    if (in[at(g)]) continue;
    gens.push_back(g);
    std::deque<int> queue;
    for (int x = 0; x < G.order(); ++x)
      if (in[at(x)]) queue.push_back(x);
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      for (int s : gens) {
        const int y = G.mul(x, s);
        if (!in[at(y)]) {
          in[at(y)] = true;
          queue.push_back(y);
        }
      }
    }
  }
  return gens;
}

// Extends generator images to a left action g -> f[g], if consistent.
std::optional<std::vector<Permutation>> extend_action(const FiniteGroup& G, const std::vector<int>& gens,
                                                       const std::vector<const Permutation*>& images) {
  const int n = G.order();
  std::vector<std::optional<Permutation>> f(at(n));
  f[at(G.identity())] = Permutation::identity(n);
  std::deque<int> queue{G.identity()};
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const int y = G.mul(x, gens[i]);
      Permutation candidate = *f[at(x)] * *images[i];
      if (!f[at(y)]) {
        f[at(y)] = std::move(candidate);
        queue.push_back(y);
      } else if (*f[at(y)] != candidate) {
        return std::nullopt;
      }
    }
  }
  std::vector<Permutation> out;
  for (auto& p : f) out.push_back(std::move(*p));
  return out;
}

std::optional<CompatiblePair> try_complete_pair(const FiniteGroup& G, const std::vector<Permutation>& alpha) {
  const int n = G.order();
  if (static_cast<int>(alpha.size()) != n) throw Error(ErrorKind::malformed, "alpha needs one permutation per group element");
  CompatiblePair p{alpha, {}};
  for (int h = 0; h < n; ++h) {
    std::vector<int> img;
    for (int g = 0; g < n; ++g) img.push_back(G.mul(G.mul(G.inv(alpha[at(g)](h)), g), h));
    if (!Permutation::is_bijection(img)) return std::nullopt;
    p.beta.emplace_back(std::move(img));
  }
  if (!check_compatible_pair(G, p)) return std::nullopt;
  return p;
}

}  // namespace

CompatiblePair complete_pair(const FiniteGroup& G, const std::vector<Permutation>& alpha) {
  auto p = try_complete_pair(G, alpha);
  if (!p) throw Error(ErrorKind::not_compatible, "alpha does not extend to a compatible pair");
  return std::move(*p);
}

std::vector<CompatiblePair> enumerate_compatible_pairs(const FiniteGroup& G) {
  const int n = G.order();
  if (n > 6) throw Error(ErrorKind::order_too_large, "compatible pair enumeration is limited to order 6");
  const auto perms = all_permutations(n);
  const auto gens = generating_set(G);
  std::vector<CompatiblePair> out;
  std::vector<const Permutation*> images(gens.size());
  auto consider = [&](const std::vector<Permutation>& alpha) {
    if (auto p = try_complete_pair(G, alpha)) out.push_back(std::move(*p));
  };
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == gens.size()) {
      if (auto alpha = extend_action(G, gens, images)) consider(*alpha);
      return;
    }
    for (const auto& p : perms) {
      images[i] = &p;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

LiftResult lift(const AffineAction& r, const FiniteGroup& H, const std::vector<Permutation>& sigma, std::span<const int> theta) {
  require_regular(r);
  const FiniteGroup& G = r.source;
  const FiniteGroup& A = r.target;
  const int nh = H.order();
  if (static_cast<int>(sigma.size()) != G.order()) throw Error(ErrorKind::malformed, "sigma needs one map per element of G");
  if (auto c = check_action_by_automorphisms(G, H, sigma); !c) throw Error(ErrorKind::invalid_action, "sigma is not an action, " + c.describe());
  if (auto c = check_homomorphism(H, A, theta); !c) throw Error(ErrorKind::not_a_homomorphism, "theta is not a homomorphism");
  for (int g = 0; g < G.order(); ++g)
    for (int x = 0; x < nh; ++x)
      if (theta[at(sigma[at(g)](x))] != r.pi[at(g)](theta[at(x)]))
        throw Error(ErrorKind::not_equivariant, "theta is not equivariant, witness g=" + std::to_string(g) + " x=" + std::to_string(x));

  const Permutation binv = b_inverse(r);
  auto g_of = [&](int x) { return binv(theta[at(x)]); };
  auto dot = [&](int x, int y) { return H.mul(x, sigma[at(g_of(x))](y)); };

  std::vector<int> table(at(nh * nh));
  for (int x = 0; x < nh; ++x)
    for (int y = 0; y < nh; ++y) table[at(x * nh + y)] = dot(x, y);
  LiftResult out{checked_group(std::move(table), nh, H.labels(), "(H, ·)"), r, {}, CheckResult::ok(), true};
  if (out.group.identity() != H.identity()) throw Error(ErrorKind::postcondition, "(H, ·) has a different identity");

  const int e = H.identity();
  for (int x = 0; x < nh; ++x) {
    const int inv = sigma[at(g_of(x))].inverse()(H.inv(x));
    if (dot(x, inv) != e || out.group.inv(x) != inv) throw Error(ErrorKind::postcondition, "inverse formula fails in (H, ·)");
    out.inverse.push_back(inv);
    out.naive_inverse_formula = out.naive_inverse_formula && dot(x, sigma[at(g_of(x))](x)) == e;
  }

  std::vector<Permutation> pi;
  for (int x = 0; x < nh; ++x) pi.push_back(sigma[at(g_of(x))]);
  out.action = AffineAction{out.group, H, std::move(pi), Permutation::identity(nh).images()};
  if (auto c = validate_affine(out.action); !c) throw Error(ErrorKind::postcondition, "lifted action is invalid, " + c.describe());

  for (int z = 0; z < nh && out.equivariance; ++z)
    for (int x = 0; x < nh; ++x)
      if (theta[at(out.action.rho(z, x))] != r.rho(g_of(z), theta[at(x)])) {
        out.equivariance = CheckResult::fail("theta-equivariance", {z, x});
        break;
      }
  for (int x = 0; x < nh && out.equivariance; ++x)
    for (int y = 0; y < nh; ++y)
      if (g_of(dot(x, y)) != G.mul(g_of(x), g_of(y))) {
        out.equivariance = CheckResult::fail("induced-action", {x, y});
        break;
      }
  if (!out.equivariance) throw Error(ErrorKind::postcondition, "lift certificate fails, " + out.equivariance.describe());
  return out;
}

namespace {

template <typename Map>
CheckResult check_conjugated_identity(const AffineAction& rt, const std::vector<Permutation>& theta, const char* name, Map map) {
  require_regular(rt);
  const int ng = static_cast<int>(theta.size()), nh = rt.source.order();
  for (const auto& t : theta)
    if (t.size() != nh) throw Error(ErrorKind::malformed, "theta maps must permute the second source group");
  const Permutation bt(rt.b);
  const Permutation btinv = bt.inverse();
  for (int g = 0; g < ng; ++g)
    for (int h = 0; h < nh; ++h)
      for (int k = 0; k < nh; ++k) {
        const int lhs = theta[at(g)](btinv(map(h, bt(k))));
        const int rhs = btinv(map(theta[at(g)](h), bt(theta[at(g)](k))));
        if (lhs != rhs) return CheckResult::fail(name, {g, h, k});
      }
  return CheckResult::ok();
}

}  // namespace

CheckResult check_asemi(const AffineAction& rt, const std::vector<Permutation>& theta) {
  return check_conjugated_identity(rt, theta, "asemi", [&](int h, int a) { return rt.pi[at(h)](a); });
}

CheckResult check_theta_identity(const AffineAction& rt, const std::vector<Permutation>& theta) {
  return check_conjugated_identity(rt, theta, "theta", [&](int h, int a) { return rt.rho(h, a); });
}

AffineAction affine_semidirect(const AffineAction& r, const AffineAction& rt, const std::vector<Permutation>& theta) {
  require_valid(r);
  require_regular(rt);
  if (auto c = check_action_by_automorphisms(r.source, rt.source, theta); !c)
    throw Error(ErrorKind::invalid_action, "theta is not an action by automorphisms, " + c.describe());
  if (auto c = check_asemi(rt, theta); !c) throw Error(ErrorKind::asemi_violated, c.describe());

  const int ng = r.source.order(), nh = rt.source.order(), na = r.target.order(), nat = rt.target.order();
  const Permutation bt(rt.b);
  const Permutation btinv = bt.inverse();
  AffineAction out{semidirect_product(r.source, rt.source, theta), direct_product(r.target, rt.target), {}, {}};
  for (int g = 0; g < ng; ++g)
    for (int h = 0; h < nh; ++h) {
      const Permutation lin = rt.pi[at(h)] * bt * theta[at(g)] * btinv;
      std::vector<int> img;
      for (int a = 0; a < na; ++a)
        for (int t = 0; t < nat; ++t) img.push_back(r.pi[at(g)](a) * nat + lin(t));
      out.pi.emplace_back(std::move(img));
      out.b.push_back(r.b[at(g)] * nat + rt.b[at(h)]);
    }
  if (auto c = validate_affine(out); !c) throw Error(ErrorKind::postcondition, "semi-direct action is invalid, " + c.describe());
  if (auto c = check_theta_identity(rt, theta); !c) throw Error(ErrorKind::postcondition, "theta identity fails, " + c.describe());
  return out;
}

AffineAction direct_product_action(const AffineAction& r, const AffineAction& rt) {
  require_valid(r);
  require_valid(rt);
  const int ng = r.source.order(), nh = rt.source.order(), na = r.target.order(), nat = rt.target.order();
  AffineAction out{direct_product(r.source, rt.source), direct_product(r.target, rt.target), {}, {}};
  for (int g = 0; g < ng; ++g)
    for (int h = 0; h < nh; ++h) {
      std::vector<int> img;
      for (int a = 0; a < na; ++a)
        for (int t = 0; t < nat; ++t) img.push_back(r.pi[at(g)](a) * nat + rt.pi[at(h)](t));
      out.pi.emplace_back(std::move(img));
      out.b.push_back(r.b[at(g)] * nat + rt.b[at(h)]);
    }
  return out;
}

std::pair<int, int> group_dynamics(const AffineAction& r, int g, int a) {
  require_shape(r);
  if (g < 0 || g >= r.source.order() || a < 0 || a >= r.target.order())
    throw Error(ErrorKind::out_of_range, "group element out of range");
  const FiniteGroup& A = r.target;
  const int bg = r.b[at(g)];
  const int gamma = r.pi[at(g)](a);
  return {gamma, A.mul(A.mul(bg, gamma), A.inv(bg))};
}

CheckResult check_dynamics(const AffineAction& r) {
  const FiniteGroup& G = r.source;
  for (int g = 0; g < G.order(); ++g)
    for (int h = 0; h < G.order(); ++h)
      for (int a = 0; a < r.target.order(); ++a) {
        const auto [gamma, zeta] = group_dynamics(r, G.mul(g, h), a);
        const auto [gh, zh] = group_dynamics(r, h, a);
        if (gamma != group_dynamics(r, g, gh).first) return CheckResult::fail("gamma", {g, h, a});
        if (zeta != group_dynamics(r, g, zh).second) return CheckResult::fail("zeta", {g, h, a});
      }
  return CheckResult::ok();
}

AffineAction translation_action(const FiniteGroup& g) {
  const int n = g.order();
  return AffineAction{g, g, std::vector<Permutation>(at(n), Permutation::identity(n)), Permutation::identity(n).images()};
}

AffineAction f4_action() {
  const FiniteGroup z4 = cyclic_group(4);
  const Permutation swap({0, 2, 1, 3});
  std::vector<Permutation> pi;
  for (int g = 0; g < 4; ++g) pi.push_back(swap.pow(g));
  return AffineAction{z4, klein_four_group(), std::move(pi), {0, 2, 3, 1}};
}

}  // namespace ybx
