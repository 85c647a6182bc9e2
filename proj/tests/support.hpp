#pragma once

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "degcomp/core.hpp"
#include "degcomp/generate.hpp"
#include "degcomp/instance.hpp"
#include "degcomp/io.hpp"
#include "degcomp/kernel.hpp"
#include "degcomp/oracle.hpp"

namespace degcomp::testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(DEGCOMP_FIXTURES) + "/" + name;
}

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name), std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline ProblemInstance load_instance(const std::string& name) {
  return parse_instance(read_fixture(name));
}

// Four vertices, arcs v1->v2, v2->v3, v4->v2, v4->v3 (0-based here).
inline Digraph sequence_example_digraph() {
  const std::vector<Arc> arcs{{0, 1}, {1, 2}, {3, 1}, {3, 2}};
  return Digraph(4, arcs);
}

inline DegreeSequence sequence_example_target() {
  return DegreeSequence({{0, 3}, {1, 1}, {2, 0}, {2, 1}});
}

// Two 2-cycles and a 3-vertex path c2->c1, c3->c2.
inline Digraph anonymization_example_digraph() {
  const std::vector<Arc> arcs{{0, 1}, {1, 0}, {2, 3}, {3, 2}, {5, 4}, {6, 5}};
  return Digraph(7, arcs);
}

inline ProblemInstance constrained_yes() {
  const std::vector<Arc> arcs{{0, 1}};
  return ProblemInstance::ddconc(Digraph(3, arcs), 1,
                                 DegreeListFunction({{{0, 1}}, {{1, 0}, {2, 0}}, {{0, 1}}}, 2));
}

inline ProblemInstance constrained_no() {
  const std::vector<Arc> arcs{{0, 1}};
  return ProblemInstance::ddconc(Digraph(3, arcs), 1,
                                 DegreeListFunction({{{0, 1}}, {{2, 0}}, {{1, 1}, {2, 1}}}, 2));
}

// Random sequence with components in [0, max_component].
inline DegreeSequence random_sequence(Rng& rng, int n, int max_component) {
  std::vector<DegreePair> entries(n);
  for (auto& e : entries) e = {rng.between(0, max_component), rng.between(0, max_component)};
  return DegreeSequence(std::move(entries));
}


// Degree-constrained instance whose satisfied vertices share a few types, so
// the type set often drops vertices.
inline ProblemInstance kernel_ddconc_instance(std::uint64_t seed) {
  Rng rng(seed);
  const int n = rng.between(4, 12);
  const Digraph d = random_digraph(n, rng.chance(0.6) ? 0.0 : 0.08, rng);
  const int s = rng.chance(0.7) ? 1 : 2;
  const int bound = d.max_degree() + 2;
  const DegreePair steps[] = {{1, 0}, {0, 1}, {1, 1}};
  std::vector<std::vector<DegreePair>> lists(n);
  for (Vertex v = 0; v < n; ++v) {
    const DegreePair deg = d.degree(v);
    if (rng.chance(0.85)) {
      lists[v] = {deg, deg + steps[rng.below(2)]};
    } else {
      lists[v] = {deg + steps[rng.below(3)]};
      if (rng.chance(0.5)) lists[v].push_back(deg + DegreePair{1, 1} + steps[rng.below(3)]);
    }
  }
  return ProblemInstance::ddconc(d, s, DegreeListFunction(std::move(lists), bound));
}

// Sparse digraph with a target reachable by a few arcs, sometimes perturbed.
inline ProblemInstance kernel_ddseqc_instance(std::uint64_t seed) {
  Rng rng(seed);
  GenOptions o;
  o.problem = Problem::ddseqc;
  o.seed = rng.below(1u << 30);
  o.vertices = rng.between(4, 10);
  o.density = rng.chance(0.5) ? 0.0 : 0.08;
  o.budget = rng.between(1, 2);
  o.perturb = 0.4;
  return generate_instance(o);
}

// Anonymization instance built from disjoint 2-cycles, single arcs and
// isolated vertices, large enough for the kernel to drop vertices.
inline ProblemInstance kernel_dda_instance(std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Arc> arcs;
  int n = 0;
  int s = 1;
  if (rng.chance(0.5)) {
    s = rng.between(1, 2);
    n = rng.between(4, 8 * s);
  } else {
    n = rng.between(30, 40);
    const int cycles = rng.between(0, n / 4);
    const int singles = rng.between(0, (n - 2 * cycles) / 3);
    Vertex next = 0;
    for (int i = 0; i < cycles; ++i, next += 2) {
      arcs.push_back({next, next + 1});
      arcs.push_back({next + 1, next});
    }
    for (int i = 0; i < singles; ++i, next += 2) arcs.push_back({next, next + 1});
  }
  const int k = rng.between(1, 12);
  return ProblemInstance::dda(Digraph(n, arcs), k, s);
}

// Decision of a kernel result by enumeration on the kernel instance.
inline bool kernel_decision(const KernelResult& kernel, const OracleLimits& limits) {
  switch (kernel.verdict) {
    case KernelVerdict::trivial_yes: return true;
    case KernelVerdict::trivial_no: return false;
    default: return brute_force_graph(kernel.instance, limits).has_value();
  }
}

inline KernelResult kernelize(const ProblemInstance& inst) {
  switch (inst.problem) {
    case Problem::ddconc: return kernelize_ddconc(inst.graph, inst.budget, inst.tau, delta_star_cap(inst));
    case Problem::ddseqc: return kernelize_ddseqc(inst.graph, inst.target);
    case Problem::dda: return kernelize_dda(inst.graph, inst.anonymity, inst.budget);
  }
  return {};
}

// Explicit vertex accounting of a reduced kernel; empty when it holds.
inline std::string kernel_size_violation(const ProblemInstance& inst, const KernelResult& kernel) {
  if (kernel.verdict != KernelVerdict::reduced) return {};
  const Digraph& d = inst.graph;
  const long long size = kernel.instance.graph.num_vertices();
  const long long kept = static_cast<long long>(kernel.kept.size());
  if (kept + static_cast<long long>(kernel.added.size()) != size) return "kept plus added differs from size";
  switch (inst.problem) {
    case Problem::ddconc: {
      const long long bound = ddconc_kernel_bound(inst.budget, delta_star_cap(inst), d.max_degree());
      if (size > bound) return "type-set kernel exceeds 2s + (D*+1)^2 * 2s(D+1)";
      return {};
    }
    case Problem::ddseqc: {
      const int s = *implied_budget(inst);
      if (kept > ddseqc_retained_bound(s, d.max_degree())) return "too many retained vertices";
      if (static_cast<long long>(kernel.added.size()) != inst.target.max_component() + 2) {
        return "dummy count differs from max target component + 2";
      }
      return {};
    }
    case Problem::dda: {
      const long long delta = d.max_degree();
      const long long s = inst.budget;
      const long long beta = (delta + 2) * 2 * s;
      const long long k = inst.anonymity;
      const long long reduced_k = std::min(k, beta);
      if (kernel.instance.anonymity != reduced_k) return "anonymity is not min{k, beta}";
      // Retention per block.
      std::map<DegreePair, long long> kept_per_block;
      long long repair = 0;
      for (const auto& [kv, ov] : kernel.kept) {
        ++kept_per_block[d.degree(ov)];
      }
      std::set<Vertex> kept_original;
      for (const auto& [kv, ov] : kernel.kept) kept_original.insert(ov);
      for (Vertex ov : kept_original) {
        for (Vertex u : d.out_neighbors(ov)) repair += kept_original.count(u) ? 0 : 1;
        for (Vertex u : d.in_neighbors(ov)) repair += kept_original.count(u) ? 0 : 1;
      }
      for (const auto& [deg, members] : blocks(d)) {
        const long long block = static_cast<long long>(members.size());
        long long want = 0;
        if (k <= beta) {
          want = std::min(block, beta + 2 * s);
        } else if (block <= 2 * s) {
          want = block;
        } else {
          want = reduced_k + std::min(2 * s, block - k);
        }
        if (kept_per_block[deg] != want) return "block retention differs from the line counts";
      }
      const long long padding = size - kept - repair;
      if (padding < 0 || padding % 2 != 0) return "padding is not made of pairs";
      if (size > dda_kernel_bound(static_cast<int>(s), static_cast<int>(k), static_cast<int>(delta))) {
        return "anonymization kernel exceeds its bound";
      }
      return {};
    }
  }
  return {};
}

}  // namespace degcomp::testing
