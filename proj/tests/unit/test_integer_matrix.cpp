#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "ybx/integer_matrix.hpp"

using namespace ybx;

namespace {

std::vector<std::vector<long long>> random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  std::vector<std::vector<long long>> m(r, std::vector<long long>(c));
  for (auto& row : m)
    for (auto& v : row) v = d(rng);
  return m;
}

std::vector<BigInt> snf(const std::vector<std::vector<long long>>& rows) {
  return smith_normal_form(IntegerMatrix::from_rows(rows));
}

}  // namespace

TEST_CASE("small known forms") {
  CHECK(snf({{2}}) == std::vector<BigInt>{2});
  CHECK(snf({{2, 0}, {0, 3}}) == std::vector<BigInt>{1, 6});
  CHECK(snf({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}) == std::vector<BigInt>{2, 6, 12});
  CHECK(snf({{0, 0}, {0, 0}}) == std::vector<BigInt>{0, 0});
  CHECK(snf({{0, 5}, {0, 0}, {0, 0}}) == std::vector<BigInt>{5, 0});
  CHECK(smith_normal_form(IntegerMatrix(0, 3)).empty());
}

TEST_CASE("divisibility chain predicate") {
  CHECK(is_divisibility_chain({1, 2, 4, 0}));
  CHECK_FALSE(is_divisibility_chain({2, 3}));
  CHECK_FALSE(is_divisibility_chain({0, 2}));
  CHECK_FALSE(is_divisibility_chain({-2}));
}

TEST_CASE("agrees with both oracles on random matrices") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  for (int i = 0; i < 60; ++i) {
    const auto m = random_matrix(rng, dim(rng), dim(rng), 5);
    const auto d = snf(m);
    CHECK(is_divisibility_chain(d));
    CHECK(d == oracle::smith_by_elimination(m));
    CHECK(d == oracle::smith_by_minors(m));
  }
}

TEST_CASE("exact arithmetic past 64 bits") {
  const long long big = 3037000499LL;  // big^2 is just below 2^63
  const std::vector<std::vector<long long>> m{{big, big - 1}, {big + 1, big}};
  CHECK(snf(m) == std::vector<BigInt>{1, 1});
  const std::vector<std::vector<long long>> n{{big * 2, 0}, {0, big * 3}};
  CHECK(snf(n) == std::vector<BigInt>{big, BigInt(big) * 6});
  std::mt19937_64 rng(11);
  const auto wide = random_matrix(rng, 8, 8, 1000000);
  CHECK(snf(wide) == oracle::smith_by_elimination(wide));
}
