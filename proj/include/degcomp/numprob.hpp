#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "degcomp/core.hpp"
#include "degcomp/flow.hpp"

namespace degcomp {

// target[i] = sigma[i] + (demands.in[i], demands.out[i]).
struct NumberSolution {
  DegreeSequence target;
  DemandVector demands;
};

// pi[i] is the index in the target sequence assigned to entry i.
struct Bijection {
  std::vector<int> pi;
};

// Tuple counts moved from each input pair to each output pair.
struct BlockTransitionPlan {
  int xi = 0;
  std::map<std::pair<DegreePair, DegreePair>, int> moves;
  std::set<DegreePair> used;
};

// Throws Error{length_mismatch} or Error{negative_demand}.
DemandVector demands_from_solution(const DegreeSequence& sigma, const DegreeSequence& target);

// Reachability table over (prefix length, indegree budget, outdegree budget)
// for the constrained-completion number problem. One table answers every
// budget up to max_budget.
class NddccTable {
 public:
  // Throws Error{length_mismatch} if tau does not cover sigma.
  NddccTable(DegreeSequence sigma, DegreeListFunction tau, int max_budget);

  int max_budget() const { return requested_; }
  // Throws Error{invalid_argument} for a budget outside 0..max_budget.
  bool feasible(int s) const;
  std::optional<NumberSolution> solution(int s) const;

 private:
  bool reachable(int prefix, int in, int out) const {
    return cells_[(static_cast<std::size_t>(prefix) * (limit_ + 1) + in) * (limit_ + 1) + out] != 0;
  }

  DegreeSequence sigma_;
  DegreeListFunction tau_;
  int requested_ = 0;
  int limit_ = 0;  // requested_ clipped to the largest reachable total
  std::vector<std::uint8_t> cells_;
};

std::optional<NumberSolution> solve_nddcc(const DegreeSequence& sigma, int s,
                                          const DegreeListFunction& tau);

// Throws Error{length_mismatch}.
std::optional<Bijection> solve_nddsc(const DegreeSequence& sigma, const DegreeSequence& phi);

// Exact anonymization number problem for every budget up to max_budget.
//
// A solution is a partition of the tuples into groups of at least k, each
// group lifted to one common output pair. Splitting a group of 2k or more
// keeps every reachable cost, so only group sizes k..2k-1 are enumerated.
// Types farther apart than the budget never share a group, which splits the
// search into independent components joined by a two-dimensional knapsack.
class NdaSolver {
 public:
  // Throws Error{invalid_argument} if k < 1 or a component of sigma exceeds xi.
  NdaSolver(DegreeSequence sigma, int k, int xi, int max_budget);
  ~NdaSolver();
  NdaSolver(NdaSolver&&) noexcept;
  NdaSolver& operator=(NdaSolver&&) noexcept;

  int max_budget() const;
  bool feasible(int s) const;
  std::optional<BlockTransitionPlan> plan(int s) const;
  std::optional<NumberSolution> solution(int s) const;

 private:
  struct State;
  std::unique_ptr<State> state_;
};

std::optional<NumberSolution> solve_nda(const DegreeSequence& sigma, int s, int k, int xi);

// Index-aligned expansion: within an input block, ascending indices take the
// output pairs in ascending order.
DegreeSequence expand_plan(const DegreeSequence& sigma, const BlockTransitionPlan& plan);

struct NdaInstance {
  DegreeSequence sigma;
  int s = 0;
  int k = 0;
};

// Throws Error{odd_sum}, Error{element_too_large} or Error{invalid_argument}
// for a non-positive element.
NdaInstance reduce_partition_to_nda(std::span<const int> a);

}  // namespace degcomp
