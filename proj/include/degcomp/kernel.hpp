#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "degcomp/core.hpp"
#include "degcomp/instance.hpp"

namespace degcomp {

enum class AlphaVariant {
  type_set,        // quota per nonzero type
  block_set,       // quota per current degree
  block_type_set,  // quota per (current degree, nonzero type)
};

struct AlphaSetSpec {
  int alpha = 1;
  AlphaVariant variant = AlphaVariant::type_set;
  int cap = 0;  // types range over {0..cap}^2
};

// All unsatisfied vertices plus, per quota class, the lowest-indexed
// satisfied vertices up to alpha. A vertex with several types fills a slot of
// every type quota it still fits. Returned ascending. Throws
// Error{invalid_argument} if alpha < 1.
std::vector<Vertex> compute_alpha_set(const Digraph& d, const DegreeListFunction& tau,
                                      const AlphaSetSpec& spec);

// Block set without degree lists: every vertex counts as satisfied.
std::vector<Vertex> compute_block_set(const Digraph& d, int alpha);

enum class TrivialNoReason { none, too_many_unsatisfied, degree_exceeds_cap };

std::string to_string(TrivialNoReason reason);

// none means the instance passes.
TrivialNoReason reduce_trivial_no(const Digraph& d, int s, const DegreeListFunction& tau,
                                  int delta_star);

enum class KernelVerdict { reduced, trivial_yes, trivial_no, unchanged };

std::string to_string(KernelVerdict verdict);

struct KernelResult {
  KernelVerdict verdict = KernelVerdict::unchanged;
  ProblemInstance instance;
  std::map<Vertex, Vertex> kept;  // kernel vertex -> original vertex
  std::vector<Vertex> added;      // kernel vertices without an original
  std::string reason;             // why a trivial verdict was reached
};

KernelResult kernelize_ddconc(const Digraph& d, int s, const DegreeListFunction& tau,
                              int delta_star);

// Throws Error{length_mismatch} if |sigma| != n.
KernelResult kernelize_ddseqc(const Digraph& d, const DegreeSequence& sigma);

// Throws Error{invalid_argument} if k < 1 or s < 0.
KernelResult kernelize_dda(const Digraph& d, int k, int s);

// Throws Error{solution_touches_added_vertex}.
std::vector<Arc> lift_solution(const KernelResult& result, std::span<const Arc> kernel_solution);

// Vertex-count accounting asserted for reduced kernels.
long long ddconc_kernel_bound(int s, int delta_star, int max_degree);
long long ddseqc_retained_bound(int s, int max_degree);
// Retained vertices, repair vertices and padding of the anonymization kernel.
long long dda_kernel_bound(int s, int k, int max_degree);

}  // namespace degcomp
