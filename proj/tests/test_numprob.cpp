#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "degcomp/error.hpp"
#include "degcomp/numprob.hpp"
#include "degcomp/oracle.hpp"
#include "support.hpp"

using namespace degcomp;
using namespace degcomp::testing;

namespace {

DegreeSequence seq(std::vector<DegreePair> v) { return DegreeSequence(std::move(v)); }

DegreeListFunction random_lists(Rng& rng, const DegreeSequence& sigma, int bound) {
  std::vector<std::vector<DegreePair>> lists(sigma.size());
  for (auto& list : lists) {
    const int count = rng.between(0, 3);
    for (int i = 0; i < count; ++i) list.push_back({rng.between(0, bound), rng.between(0, bound)});
  }
  return DegreeListFunction(std::move(lists), bound);
}

}  // namespace

TEST_CASE("solve_nddcc examples") {
  const auto forced = solve_nddcc(seq({{0, 0}}), 1, DegreeListFunction({{{1, 1}}}, 1));
  REQUIRE(forced);
  CHECK(forced->target == seq({{1, 1}}));
  CHECK_FALSE(solve_nddcc(seq({{0, 0}}), 1, DegreeListFunction({{{0, 0}}}, 1)));

  const DegreeListFunction both({{{0, 0}, {1, 0}, {0, 1}}, {{0, 0}, {1, 0}, {0, 1}}}, 1);
  const auto split = solve_nddcc(seq({{0, 0}, {0, 0}}), 1, both);
  REQUIRE(split);
  CHECK(split->target.same_multiset(seq({{1, 0}, {0, 1}})));
  CHECK(is_nddcc_solution(seq({{0, 0}, {0, 0}}), 1, both, split->target));
}

TEST_CASE("nddcc table answers every budget and validates its range") {
  const DegreeSequence sigma = seq({{0, 0}, {1, 0}});
  const DegreeListFunction tau({{{0, 0}, {1, 1}}, {{1, 0}, {2, 1}}}, 2);
  const NddccTable table(sigma, tau, 5);
  CHECK(table.feasible(0));
  CHECK(table.feasible(1));
  CHECK(table.feasible(2));
  CHECK_FALSE(table.feasible(3));
  CHECK_FALSE(table.feasible(5));
  CHECK_THROWS_AS(table.feasible(6), Error);
  CHECK_THROWS_AS(table.feasible(-1), Error);
  CHECK_THROWS_AS(NddccTable(sigma, DegreeListFunction({{{0, 0}}}, 1), 1), Error);
}

TEST_CASE("solve_nddsc examples") {
  const DegreeSequence any = seq({{2, 1}, {0, 0}, {1, 3}});
  const auto identity = solve_nddsc(any, any);
  REQUIRE(identity);
  CHECK(is_nddsc_bijection(any, any, *identity));
  CHECK_FALSE(solve_nddsc(seq({{1, 0}}), seq({{0, 1}})));

  const DegreeSequence sigma = seq({{0, 1}, {0, 2}, {2, 0}, {2, 1}});
  const DegreeSequence phi = seq({{0, 3}, {1, 1}, {2, 0}, {2, 1}});
  const auto example = solve_nddsc(sigma, phi);
  REQUIRE(example);
  // The only valid assignment.
  CHECK(example->pi == std::vector<int>{1, 0, 2, 3});
  CHECK_THROWS_AS(solve_nddsc(sigma, seq({{0, 0}})), Error);
}

TEST_CASE("solve_nda examples") {
  const auto same = solve_nda(seq({{0, 0}, {0, 0}}), 0, 2, 0);
  REQUIRE(same);
  CHECK(same->target == seq({{0, 0}, {0, 0}}));
  CHECK_FALSE(solve_nda(seq({{0, 0}, {1, 1}}), 0, 2, 1));
  const auto lifted = solve_nda(seq({{1, 0}, {0, 1}}), 1, 2, 1);
  REQUIRE(lifted);
  CHECK(lifted->target == seq({{1, 1}, {1, 1}}));
  CHECK_THROWS_AS(solve_nda(seq({{3, 0}}), 0, 1, 2), Error);
  CHECK_THROWS_AS(solve_nda(seq({{0, 0}}), 0, 0, 2), Error);
}

TEST_CASE("nda plan expands to the reported solution") {
  const DegreeSequence sigma = seq({{0, 0}, {1, 0}, {0, 1}, {1, 1}, {0, 0}});
  const NdaSolver solver(sigma, 2, 4, 4);
  for (int s = 0; s <= 4; ++s) {
    const auto plan = solver.plan(s);
    const auto solution = solver.solution(s);
    CHECK(plan.has_value() == solution.has_value());
    CHECK(solver.feasible(s) == solution.has_value());
    if (!plan) continue;
    CHECK(expand_plan(sigma, *plan) == solution->target);
    CHECK(is_nda_solution(sigma, s, 2, 4, solution->target));
    int moved = 0;
    for (const auto& [key, count] : plan->moves) moved += count;
    CHECK(moved == sigma.size());
    for (const auto& [key, count] : plan->moves) CHECK(plan->used.count(key.second) == 1);
  }
}

TEST_CASE("demands_from_solution examples") {
  const DegreeSequence sigma = seq({{0, 1}, {2, 0}});
  CHECK(demands_from_solution(sigma, sigma) == DemandVector{{0, 0}, {0, 0}});
  CHECK(demands_from_solution(seq({{0, 1}}), seq({{1, 1}})) == DemandVector{{1}, {0}});
  const DegreeSequence example = degree_sequence(sequence_example_digraph());
  const DegreeSequence after = seq({{1, 1}, {2, 1}, {2, 0}, {0, 3}});
  CHECK(demands_from_solution(example, after) == DemandVector{{1, 0, 0, 0}, {0, 0, 0, 1}});
  try {
    demands_from_solution(seq({{1, 1}}), seq({{0, 1}}));
    FAIL("expected negative_demand");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::negative_demand);
  }
}

TEST_CASE("partition reduction examples") {
  const std::vector<int> ones{1, 1};
  const NdaInstance inst = reduce_partition_to_nda(ones);
  CHECK(inst.s == 1);
  CHECK(inst.k == 2);
  CHECK(inst.sigma == seq({{3, 0}, {4, 0}, {4, 0}, {3, 1}, {3, 1}, {5, 0}, {6, 0}, {6, 0}, {5, 1}, {5, 1}}));
  auto code = [](std::vector<int> a) {
    try {
      reduce_partition_to_nda(a);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::invalid_argument;
  };
  CHECK(code({1, 3}) == Errc::element_too_large);
  CHECK(code({1, 2}) == Errc::odd_sum);
  CHECK(code({2, 0, 2}) == Errc::invalid_argument);
}

TEST_CASE("property: partition reduction preserves the answer, including elements equal to half") {
  Rng rng(77);
  for (int t = 0; t < 40; ++t) {
    std::vector<int> values(rng.between(1, 6));
    for (int& v : values) v = rng.between(1, 4);
    const int sum = std::accumulate(values.begin(), values.end(), 0);
    if (sum % 2 != 0 || *std::max_element(values.begin(), values.end()) > sum / 2) continue;
    std::vector<char> reach(sum / 2 + 1, 0);
    reach[0] = 1;
    for (int v : values) {
      for (int x = sum / 2; x >= v; --x) reach[x] = reach[x] || reach[x - v];
    }
    const NdaInstance inst = reduce_partition_to_nda(values);
    const auto answer = solve_nda(inst.sigma, inst.s, inst.k, inst.sigma.max_component() + inst.s);
    CHECK(answer.has_value() == (reach[sum / 2] != 0));
  }
}

TEST_CASE("property: solve_nddcc agrees with enumeration on small inputs") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Rng rng(seed);
    const int n = rng.between(1, 4);
    const int bound = rng.between(0, 3);
    const DegreeSequence sigma = random_sequence(rng, n, bound);
    const DegreeListFunction tau = random_lists(rng, sigma, bound);
    const int s = rng.between(0, 4);
    const auto fast = solve_nddcc(sigma, s, tau);
    const auto slow = brute_force_nddcc(sigma, s, tau);
    CHECK(fast.has_value() == slow.has_value());
    if (fast) CHECK(is_nddcc_solution(sigma, s, tau, fast->target));
  }
}

TEST_CASE("property: solve_nddsc agrees with all bijections") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Rng rng(seed);
    const int n = rng.between(0, 6);
    const DegreeSequence sigma = random_sequence(rng, n, 2);
    const DegreeSequence phi = random_sequence(rng, n, 3);
    const auto fast = solve_nddsc(sigma, phi);
    CHECK(fast.has_value() == brute_force_nddsc(sigma, phi).has_value());
    if (fast) CHECK(is_nddsc_bijection(sigma, phi, *fast));
  }
}

TEST_CASE("property: solve_nda agrees with enumeration") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Rng rng(seed);
    const int n = rng.between(1, 4);
    const DegreeSequence sigma = random_sequence(rng, n, 2);
    const int s = rng.between(0, 3);
    const int k = rng.between(1, 3);
    const int xi = sigma.max_component() + rng.between(0, 2);
    const auto fast = solve_nda(sigma, s, k, xi);
    CHECK(fast.has_value() == brute_force_nda(sigma, s, k, xi).has_value());
    if (fast) CHECK(is_nda_solution(sigma, s, k, xi, fast->target));
  }
}
