#pragma once

#include <optional>
#include <span>
#include <string>

#include "degcomp/instance.hpp"

namespace degcomp {

// Exhaustive search over arc sets inside an alpha-set of the instance:
// candidates in (tail, head) order, subsets by cardinality then
// lexicographically; the first valid set is returned.
std::optional<Solution> solve_bounded(const ProblemInstance& instance);

// Same search with candidate endpoints restricted to `vertices`.
std::optional<Solution> solve_bounded_within(const ProblemInstance& instance,
                                             std::span<const Vertex> vertices);

// Full pipeline: large budgets go through the number problem and a flow
// realization, small budgets through the kernel and bounded search.
std::optional<Solution> solve(const ProblemInstance& instance);

// Checks the problem definition directly, independent of the solvers.
bool verify_solution(const ProblemInstance& instance, const Solution& solution);

// Runs the individual checks of verify_solution and records them.
Certificate certify(const ProblemInstance& instance, std::span<const Arc> arcs,
                    std::string route);

}  // namespace degcomp
