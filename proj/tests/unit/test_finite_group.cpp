#include <doctest.h>

#include "ybx/error.hpp"
#include "ybx/finite_group.hpp"

using namespace ybx;

TEST_CASE("group axioms are verified on construction") {
  CHECK_THROWS_AS(FiniteGroup({{0, 1}, {1, 1}}), Error);
  CHECK_THROWS_AS(FiniteGroup({{0, 1}, {1}}), Error);
  CHECK(check_group_axioms({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}));
  // Latin square with identity 0 that is not associative.
  const std::vector<std::vector<int>> loop{{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  CHECK(check_group_axioms(loop).condition == "associativity");
  CHECK(check_group_axioms({{0, 1}, {1, 2}}).condition == "closure");
}

TEST_CASE("standard groups") {
  const auto z4 = cyclic_group(4);
  CHECK(z4.order() == 4);
  CHECK(z4.is_abelian());
  CHECK(z4.pow(1, 4) == z4.identity());
  CHECK(z4.pow(1, -1) == 3);
  const auto k4 = klein_four_group();
  for (int g = 0; g < 4; ++g) CHECK(k4.mul(g, g) == k4.identity());
  CHECK(k4.labels() == std::vector<std::string>{"00", "01", "10", "11"});
  CHECK_FALSE(find_group_isomorphism(z4, k4));
  CHECK(find_group_isomorphism(direct_product(cyclic_group(2), cyclic_group(3)), cyclic_group(6)));
  const auto s3 = symmetric_group(3);
  CHECK(s3.group.order() == 6);
  CHECK_FALSE(s3.group.is_abelian());
  CHECK(s3.elements[static_cast<std::size_t>(s3.group.identity())].is_identity());
  CHECK(check_group_axioms(s3.group.rows()));
}

TEST_CASE("automorphisms and actions") {
  CHECK(automorphisms(klein_four_group()).size() == 6);
  CHECK(automorphisms(cyclic_group(4)).size() == 2);
  CHECK(automorphisms(symmetric_group(3).group).size() == 6);
  const auto k4 = klein_four_group();
  const Permutation swap({0, 2, 1, 3});
  CHECK(is_automorphism(k4, swap));
  CHECK_FALSE(is_automorphism(k4, Permutation({1, 0, 2, 3})));
  const std::vector<Permutation> theta{Permutation::identity(4), swap};
  CHECK(check_action_by_automorphisms(cyclic_group(2), k4, theta));
  const std::vector<Permutation> wrong{swap, swap};
  CHECK(check_action_by_automorphisms(cyclic_group(2), k4, wrong).condition == "action");
  const auto d4 = semidirect_product(cyclic_group(2), cyclic_group(4), {Permutation::identity(4), Permutation({0, 3, 2, 1})});
  CHECK(d4.order() == 8);
  CHECK_FALSE(d4.is_abelian());
  CHECK_THROWS_AS(semidirect_product(cyclic_group(2), k4, wrong), Error);
}

TEST_CASE("homomorphism checks") {
  const auto z4 = cyclic_group(4), z2 = cyclic_group(2);
  CHECK(check_homomorphism(z4, z2, std::vector<int>{0, 1, 0, 1}));
  CHECK_FALSE(check_homomorphism(z4, z2, std::vector<int>{0, 1, 1, 0}));
  const auto gen = generated_group(3, {Permutation({1, 2, 0})});
  CHECK(gen.group.order() == 3);
  CHECK(gen.elements[0].is_identity());
  CHECK(gen.index_of(Permutation({2, 0, 1})) >= 0);
}
