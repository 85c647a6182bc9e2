#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "degcomp/core.hpp"

namespace degcomp {

enum class Problem {
  ddconc,  // constrained completion: final degree of v must lie in tau(v)
  ddseqc,  // sequence completion: final degree sequence must equal a target
  dda,     // anonymization: final degree sequence must be k-anonymous
};

std::string_view to_string(Problem p);
std::optional<Problem> problem_from_string(std::string_view name);

// Only the fields of the instance's problem are meaningful: budget and tau
// for ddconc, target for ddseqc, budget and anonymity for dda.
struct ProblemInstance {
  Problem problem = Problem::ddconc;
  Digraph graph;
  int budget = 0;
  DegreeListFunction tau;
  DegreeSequence target;
  int anonymity = 1;

  // Each factory throws Error{invalid_argument | length_mismatch} on
  // malformed parameters.
  static ProblemInstance ddconc(Digraph d, int s, DegreeListFunction tau);
  static ProblemInstance ddseqc(Digraph d, DegreeSequence target);
  static ProblemInstance dda(Digraph d, int k, int s);

  friend bool operator==(const ProblemInstance&, const ProblemInstance&) = default;
};

// Arcs forced by the target sequence: equal in- and outdegree surpluses, or
// nullopt when they differ or are negative. Non-ddseqc instances return their
// budget.
std::optional<int> implied_budget(const ProblemInstance& instance);

// Largest arc count worth considering: the budget clamped to the number of
// non-arcs. For ddseqc the implied count (or -1 when ill-formed).
int effective_budget(const ProblemInstance& instance);

SequenceProperty property_of(const ProblemInstance& instance);

// min{Delta_D + s, 4k(Delta_D + 2)^2 + Delta_D}: no minimum anonymizing
// insertion set raises any degree beyond this.
long long dda_delta_star_cap(const Digraph& d, int k, int s);

// Upper bound on every degree of every solution digraph, also capped at n-1:
// ddconc min{r, Delta_D + s}; ddseqc the largest target component; dda the
// anonymization cap above.
int delta_star_cap(const ProblemInstance& instance);

struct Certificate {
  bool insertable = false;       // loop-free, new, pairwise distinct arcs
  bool within_budget = false;    // ddseqc: exactly the implied count
  bool degree_lists = false;     // ddconc: every final degree allowed
  bool sequence_property = false;
  std::string route;             // "flow" or "search"
};

struct Solution {
  std::vector<Arc> arcs;  // sorted
  Certificate certificate;
};

}  // namespace degcomp
