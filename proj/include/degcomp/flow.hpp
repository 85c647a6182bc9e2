#pragma once

#include <optional>
#include <string>
#include <vector>

#include "degcomp/core.hpp"
#include "degcomp/error.hpp"

namespace degcomp {

// Per-vertex indegree and outdegree increments.
struct DemandVector {
  std::vector<int> in;
  std::vector<int> out;

  int size() const { return static_cast<int>(in.size()); }
  long long total_in() const;
  long long total_out() const;
  bool balanced() const { return total_in() == total_out(); }

  friend bool operator==(const DemandVector&, const DemandVector&) = default;
};

struct FlowEdge {
  int from = 0;
  int to = 0;
  int capacity = 0;
};

// Node layout: source 0, out-copy of vertex i at 1+i, in-copy at 1+n+i,
// sink 1+2n. Edges: n source edges (capacity = outdegree demand), then n
// sink edges (capacity = indegree demand), then one unit edge per non-arc
// (i, j), i != j, in (i, j) order.
struct FlowNetwork {
  int vertex_count = 0;
  std::vector<FlowEdge> edges;
  std::vector<Arc> unit_arcs;  // unit_arcs[e] belongs to edges[2n + e]

  int source() const { return 0; }
  int out_node(Vertex v) const { return 1 + v; }
  int in_node(Vertex v) const { return 1 + vertex_count + v; }
  int sink() const { return 1 + 2 * vertex_count; }
  int node_count() const { return 2 + 2 * vertex_count; }
  int first_unit_edge() const { return 2 * vertex_count; }
};

// Throws Error{length_mismatch} when the demand vector has the wrong length
// and Error{negative_demand} for a negative entry.
FlowNetwork build_network(const Digraph& d, const DemandVector& demands);

struct FlowResult {
  long long value = 0;
  std::vector<int> flow;        // per edge of the network
  std::vector<Arc> unit_arcs;   // saturated unit edges as arcs (i, j), sorted
};

// Deterministic blocking-flow maximum flow.
FlowResult max_flow(const FlowNetwork& network);

enum class RealizationCondition {
  cap_below_order = 1,   // delta_star <= n - 1
  indegree_room = 2,     // indeg + in-demand <= delta_star
  outdegree_room = 3,    // outdeg + out-demand <= delta_star
  balanced = 4,          // sum of in-demands == sum of out-demands
  large_total = 5,       // total demand > 2 * delta_star^2
};

std::string to_string(RealizationCondition c);

class PreconditionViolated : public Error {
 public:
  PreconditionViolated(RealizationCondition c, const std::string& what)
      : Error(Errc::precondition_violated, what), condition_(c) {}
  RealizationCondition condition() const noexcept { return condition_; }

 private:
  RealizationCondition condition_;
};

// Returns a set of exactly s new arcs whose insertion raises every vertex by
// its demand. Throws PreconditionViolated naming the first failed condition;
// under those conditions a maximum flow always saturates every demand.
std::vector<Arc> realize_demands(const Digraph& d, const DemandVector& demands, int delta_star);

// Flow-based realization without preconditions. nullopt when the maximum
// flow falls short. Throws Error{unbalanced_demands}.
std::optional<std::vector<Arc>> try_realize_demands(const Digraph& d, const DemandVector& demands);

}  // namespace degcomp
