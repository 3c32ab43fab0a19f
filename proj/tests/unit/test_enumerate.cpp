#include <doctest.h>

#include "oracles.hpp"
#include "ybx/enumerate.hpp"

using namespace ybx;

TEST_CASE("n = 1 has exactly one solution") {
  const auto r = enumerate_solutions(1);
  CHECK(r.complete);
  REQUIRE(r.solutions.size() == 1);
  CHECK(r.solutions[0] == trivial_solution(1));
}

TEST_CASE("enumeration matches the brute-force oracle for n <= 3") {
  for (int n = 1; n <= 3; ++n) {
    CAPTURE(n);
    const auto all = oracle::brute_force_solutions(n, false);
    const auto inv = oracle::brute_force_solutions(n, true);
    // The oracle visits families in (alpha rows, beta rows) order, which is
    // the enumeration order, so the lists must match exactly.
    CHECK(enumerate_solutions(n).solutions == all);
    CHECK(enumerate_solutions(n, {SolutionFilter::involutive}).solutions == inv);
    CHECK(enumerate_solutions(n, {SolutionFilter::symmetric}).solutions == inv);
  }
}

TEST_CASE("every emitted solution is a non-degenerate solution, without repeats") {
  const auto r = enumerate_solutions(3);
  for (std::size_t i = 0; i < r.solutions.size(); ++i) {
    CHECK(check_ybe(r.solutions[i]).all_valid());
    if (i) CHECK(r.solutions[i - 1] < r.solutions[i]);
  }
}

TEST_CASE("output does not depend on the number of jobs") {
  for (int jobs : {2, 3, 8}) {
    CHECK(enumerate_solutions(3, {SolutionFilter::all, UINT64_MAX, jobs}).solutions == enumerate_solutions(3).solutions);
  }
  const auto seq = enumerate_solutions(4, {SolutionFilter::involutive});
  const auto par = enumerate_solutions(4, {SolutionFilter::involutive, UINT64_MAX, 4});
  CHECK(seq.solutions.size() == 168);
  CHECK(seq.solutions == par.solutions);
}

TEST_CASE("budget exhaustion yields a flagged prefix") {
  const auto full = enumerate_solutions(3);
  const auto part = enumerate_solutions(3, {SolutionFilter::all, 20, 1});
  CHECK_FALSE(part.complete);
  REQUIRE(part.solutions.size() <= full.solutions.size());
  for (std::size_t i = 0; i < part.solutions.size(); ++i) CHECK(part.solutions[i] == full.solutions[i]);
  std::vector<FiniteSolution> streamed;
  CHECK(enumerate_solutions(3, SolutionFilter::all, UINT64_MAX, [&](const FiniteSolution& s) { streamed.push_back(s); }));
  CHECK(streamed == full.solutions);
  CHECK_FALSE(enumerate_solutions(3, SolutionFilter::all, 5, [](const FiniteSolution&) {}));
}

TEST_CASE("degenerate n is rejected") {
  CHECK_THROWS(enumerate_solutions(0));
}
