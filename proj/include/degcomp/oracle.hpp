#pragma once

#include <optional>

#include "degcomp/core.hpp"
#include "degcomp/instance.hpp"
#include "degcomp/numprob.hpp"

namespace degcomp {

// Enumeration guards. Exceeding one raises Error{instance_too_large}.
struct OracleLimits {
  int max_vertices = 7;
  int max_budget = 5;
  long long max_candidates = 10'000'000;  // tuples or subsets examined
};

// Minimum-cardinality solution by enumerating subsets of the non-arcs in
// increasing size, lexicographically within a size.
std::optional<Solution> brute_force_graph(const ProblemInstance& instance,
                                          const OracleLimits& limits = {});

std::optional<NumberSolution> brute_force_nddcc(const DegreeSequence& sigma, int s,
                                                const DegreeListFunction& tau,
                                                const OracleLimits& limits = {});

std::optional<Bijection> brute_force_nddsc(const DegreeSequence& sigma, const DegreeSequence& phi,
                                           const OracleLimits& limits = {});

std::optional<NumberSolution> brute_force_nda(const DegreeSequence& sigma, int s, int k, int xi,
                                              const OracleLimits& limits = {});

// Definition checks for number-problem answers.
bool is_nddcc_solution(const DegreeSequence& sigma, int s, const DegreeListFunction& tau,
                       const DegreeSequence& target);
bool is_nddsc_bijection(const DegreeSequence& sigma, const DegreeSequence& phi,
                        const Bijection& pi);
bool is_nda_solution(const DegreeSequence& sigma, int s, int k, int xi,
                     const DegreeSequence& target);

}  // namespace degcomp
