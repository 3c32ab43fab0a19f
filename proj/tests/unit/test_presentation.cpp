#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "ybx/enumerate.hpp"
#include "ybx/error.hpp"
#include "ybx/presentation.hpp"

using namespace ybx;

namespace {

std::vector<std::vector<long long>> to_rows(const IntegerMatrix& m) {
  std::vector<std::vector<long long>> rows(m.rows(), std::vector<long long>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) rows[r][c] = static_cast<long long>(m(r, c));
  return rows;
}

std::vector<int> alpha_images(const PermutationGroup& sym, const FiniteSolution& s, bool beta_inverse = false) {
  std::vector<int> images;
  for (int x = 0; x < s.size(); ++x)
    images.push_back(sym.index_of(beta_inverse ? s.beta_perm(x).inverse() : s.alpha_perm(x)));
  return images;
}

}  // namespace

TEST_CASE("make_presentation normalizes") {
  const auto p = make_presentation(2, {{gen(0), gen(1), gen_inv(0), gen_inv(1)}, {gen(1), gen(0), gen_inv(1), gen_inv(0)}, {gen(0), gen_inv(0)}});
  CHECK(p.relators.size() == 1);
  CHECK_THROWS_AS(make_presentation(2, {{gen(2)}}), Error);
}

TEST_CASE("structure presentations") {
  SUBCASE("flip gives a free abelian group") {
    for (int n = 1; n <= 4; ++n) {
      const auto p = structure_presentation(fixture::flip(n));
      CHECK(p.generator_count == n);
      CHECK(p.relators.size() == static_cast<std::size_t>(n * (n - 1) / 2));
      CHECK(abelianization(p).free_rank == n);
      CHECK(abelianization(p).torsion.empty());
    }
    CHECK(abelianization(structure_presentation(fixture::flip(3))).to_string() == "Z^3");
  }
  SUBCASE("P3 standard has one raw relator per pair") {
    const auto raw = structure_relators(fixture::p3(), PresentationKind::standard);
    CHECK(raw.size() == 9);
    CHECK(raw[1] == Word{gen(0), gen(1), gen_inv(2), gen_inv(2)});
    const auto p = structure_presentation(fixture::p3());
    CHECK(p.generator_count == 3);
    const auto m = relation_matrix(p);
    const auto inv = abelianization(p);
    auto expected = oracle::smith_by_elimination(to_rows(m));
    std::vector<BigInt> got = inv.factors();
    // The oracle lists min(rows, cols) diagonal entries including units.
    std::vector<BigInt> oracle_factors;
    int zeros = 3 - static_cast<int>(expected.size());
    for (const auto& d : expected)
      if (d == 0) ++zeros;
      else if (d != 1) oracle_factors.push_back(d);
    for (int i = 0; i < zeros; ++i) oracle_factors.push_back(0);
    CHECK(got == oracle_factors);
    CHECK(inv.to_string() == "Z^1 x Z/3");
  }
  SUBCASE("P3 derived presentation is commutative") {
    for (const auto& w : structure_relators(fixture::p3(), PresentationKind::derived))
      CHECK(canonical_relator(w) == canonical_relator({w[0], w[1], -w[0], -w[1]}));
    CHECK(abelianization(structure_presentation(fixture::p3(), PresentationKind::derived)).to_string() == "Z^3");
  }
  SUBCASE("cycle form needs a symmetric solution") {
    CHECK_THROWS_AS(structure_presentation(fixture::ns2(), PresentationKind::cycle_form), Error);
  }
}

TEST_CASE("abelianization of small presentations") {
  CHECK(abelianization(make_presentation(1, {{gen(0), gen(0)}})).factors() == std::vector<BigInt>{2});
  CHECK(abelianization(make_presentation(1, {{gen(0)}})).to_string() == "1");
  CHECK(abelianization(make_presentation(2, {{gen(0), gen(0)}, {gen(1), gen(1), gen(1), gen(1)}})).to_string() == "Z/2 x Z/4");
  CHECK(abelianization(make_presentation(2, {})).to_string() == "Z^2");
}

TEST_CASE("row lattice membership") {
  const auto m = IntegerMatrix::from_rows({{2, 0}, {0, 3}});
  CHECK(in_row_lattice(m, std::vector<long long>{4, -3}));
  CHECK_FALSE(in_row_lattice(m, std::vector<long long>{1, 0}));
  CHECK(in_row_lattice(m, std::vector<long long>{0, 0}));
}

TEST_CASE("hom_extends") {
  const auto sym = symmetric_group(3);
  const auto p3 = structure_presentation(fixture::p3());
  CHECK(hom_extends(p3, sym.group, alpha_images(sym, fixture::p3())));
  CHECK(hom_extends(p3, sym.group, alpha_images(sym, fixture::p3(), true)));
  const auto z2 = cyclic_group(2);
  CHECK(hom_extends(structure_presentation(fixture::flip(2)), z2, std::vector<int>{1, 1}));
  const auto fail = hom_extends(make_presentation(1, {{gen(0)}}), z2, std::vector<int>{1});
  CHECK_FALSE(fail);
  CHECK(fail.witness == std::vector<int>{0});
  CHECK(evaluate_word(cyclic_group(5), std::vector<int>{2}, {gen(0), gen(0), gen_inv(0), gen(0)}) == 4);

  for (int n = 1; n <= 3; ++n) {
    const auto sn = symmetric_group(n);
    for (const auto& s : enumerate_solutions(n).solutions) {
      CHECK(hom_extends(structure_presentation(s), sn.group, alpha_images(sn, s)));
      CHECK(hom_extends(structure_presentation(s), sn.group, alpha_images(sn, s, true)));
    }
  }
  const auto s4 = symmetric_group(4);
  const auto four = enumerate_solutions(4, {SolutionFilter::involutive}).solutions;
  for (std::size_t i = 0; i < four.size(); i += 3) CHECK(hom_extends(structure_presentation(four[i]), s4.group, alpha_images(s4, four[i])));
}

TEST_CASE("dual anti-isomorphism") {
  CHECK(check_dual_antiisomorphism(fixture::flip(2)));
  CHECK(check_dual_antiisomorphism(fixture::p3()));
  for (int n = 1; n <= 3; ++n)
    for (const auto& s : enumerate_solutions(n).solutions) CHECK(check_dual_antiisomorphism(s));
}

TEST_CASE("standard and cycle form presentations agree on symmetric solutions") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& s : enumerate_solutions(n, {SolutionFilter::symmetric}).solutions) {
      const auto a = abelianization(structure_presentation(s, PresentationKind::standard));
      CHECK(a == abelianization(structure_presentation(s, PresentationKind::cycle_form)));
      CHECK(is_divisibility_chain(a.factors()));
      // The derived group of a symmetric solution is free abelian on X.
      const auto d = abelianization(structure_presentation(s, PresentationKind::derived));
      CHECK(d.free_rank == n);
      CHECK(d.torsion.empty());
    }
}

TEST_CASE("action extension and the pi homomorphism") {
  CHECK(check_action_extension(fixture::trivial_action(2, 3)));
  CHECK(check_action_extension(fixture::action_2x3()));

  const auto t23 = check_pi_homomorphism(fixture::trivial_action(2, 3));
  CHECK(t23.extends());
  CHECK(t23.rank_source == 6);
  CHECK(t23.rank_target == 5);
  CHECK(t23.source.to_string() == "Z^6");
  CHECK(t23.target.to_string() == "Z^5");

  const auto t22 = check_pi_homomorphism(fixture::trivial_action(2, 2));
  CHECK(t22.extends());
  CHECK(t22.rank_source == 4);
  CHECK(t22.rank_target == 4);

  const auto nt = check_pi_homomorphism(fixture::action_2x3());
  CHECK(nt.extends());
  const auto a = fixture::action_2x3();
  CHECK(nt.source == abelianization(structure_presentation(semidirect_solution(a))));
  CHECK(nt.target == abelianization(semidirect_presentation(a)));
  CHECK(nt.rank_source == nt.source.free_rank);
  CHECK(nt.rank_target == nt.target.free_rank);

  const auto sp = semidirect_presentation(fixture::trivial_action(2, 3));
  CHECK(sp.generator_count == 5);

  for (int nx = 1; nx <= 2; ++nx)
    for (int ns = 1; ns <= 3; ++ns)
      for (const auto& X : enumerate_cycle_sets(nx))
        for (const auto& S : enumerate_cycle_sets(ns))
          for (const auto& a : enumerate_cycle_actions(X, S)) {
            CHECK(check_action_extension(a));
            CHECK(check_pi_homomorphism(a).extends());
          }
}
