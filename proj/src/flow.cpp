#include "degcomp/flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <sstream>

namespace degcomp {

long long DemandVector::total_in() const {
  long long sum = 0;
  for (int x : in) sum += x;
  return sum;
}

long long DemandVector::total_out() const {
  long long sum = 0;
  for (int y : out) sum += y;
  return sum;
}

std::string to_string(RealizationCondition c) {
  switch (c) {
    case RealizationCondition::cap_below_order: return "I: degree cap at most n-1";
    case RealizationCondition::indegree_room: return "II: indegree plus demand within cap";
    case RealizationCondition::outdegree_room: return "III: outdegree plus demand within cap";
    case RealizationCondition::balanced: return "IV: balanced demands";
    case RealizationCondition::large_total: return "V: total demand above twice the squared cap";
  }
  return "unknown";
}

namespace {

void check_demands(const Digraph& d, const DemandVector& demands) {
  const int n = d.num_vertices();
  if (demands.size() != n || static_cast<int>(demands.out.size()) != n) {
    throw Error(Errc::length_mismatch, "demand vector length differs from vertex count");
  }
  for (int i = 0; i < n; ++i) {
    if (demands.in[i] < 0 || demands.out[i] < 0) {
      throw Error(Errc::negative_demand, "negative demand at vertex " + std::to_string(i));
    }
  }
}

// Dinic's algorithm over a residual graph stored as paired edges.
class Dinic {
 public:
  explicit Dinic(int nodes) : adjacency_(nodes), level_(nodes), next_(nodes) {}

  int add_edge(int from, int to, int capacity) {
    const int id = static_cast<int>(to_.size());
    adjacency_[from].push_back(id);
    to_.push_back(to);
    residual_.push_back(capacity);
    adjacency_[to].push_back(id + 1);
    to_.push_back(from);
    residual_.push_back(0);
    return id;
  }

  long long run(int source, int sink) {
    long long total = 0;
    while (bfs(source, sink)) {
      std::fill(next_.begin(), next_.end(), 0);
      while (long long pushed = dfs(source, sink, std::numeric_limits<long long>::max())) {
        total += pushed;
      }
    }
    return total;
  }

  // Flow on a forward edge equals the residual of its reverse twin.
  int flow_on(int id) const { return residual_[id + 1]; }

 private:
  bool bfs(int source, int sink) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> queue;
    level_[source] = 0;
    queue.push(source);
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop();
      for (int id : adjacency_[u]) {
        if (residual_[id] > 0 && level_[to_[id]] < 0) {
          level_[to_[id]] = level_[u] + 1;
          queue.push(to_[id]);
        }
      }
    }
    return level_[sink] >= 0;
  }

  long long dfs(int u, int sink, long long limit) {
    if (u == sink) return limit;
    for (int& i = next_[u]; i < static_cast<int>(adjacency_[u].size()); ++i) {
      const int id = adjacency_[u][i];
      const int v = to_[id];
      if (residual_[id] <= 0 || level_[v] != level_[u] + 1) continue;
      const long long pushed = dfs(v, sink, std::min<long long>(limit, residual_[id]));
      if (pushed > 0) {
        residual_[id] -= static_cast<int>(pushed);
        residual_[id ^ 1] += static_cast<int>(pushed);
        return pushed;
      }
    }
    return 0;
  }

  std::vector<std::vector<int>> adjacency_;
  std::vector<int> to_;
  std::vector<int> residual_;
  std::vector<int> level_;
  std::vector<int> next_;
};

}  // namespace

FlowNetwork build_network(const Digraph& d, const DemandVector& demands) {
  check_demands(d, demands);
  const int n = d.num_vertices();
  FlowNetwork net;
  net.vertex_count = n;
  net.edges.reserve(2 * n + static_cast<std::size_t>(d.num_non_arcs()));
  for (int i = 0; i < n; ++i) net.edges.push_back({net.source(), net.out_node(i), demands.out[i]});
  for (int i = 0; i < n; ++i) net.edges.push_back({net.in_node(i), net.sink(), demands.in[i]});
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j || d.has_arc(i, j)) continue;
      net.edges.push_back({net.out_node(i), net.in_node(j), 1});
      net.unit_arcs.push_back({i, j});
    }
  }
  return net;
}

FlowResult max_flow(const FlowNetwork& network) {
  Dinic dinic(network.node_count());
  std::vector<int> ids;
  ids.reserve(network.edges.size());
  for (const FlowEdge& e : network.edges) ids.push_back(dinic.add_edge(e.from, e.to, e.capacity));

  FlowResult result;
  result.value = dinic.run(network.source(), network.sink());
  result.flow.reserve(ids.size());
  for (int id : ids) result.flow.push_back(dinic.flow_on(id));
  for (std::size_t e = 0; e < network.unit_arcs.size(); ++e) {
    if (result.flow[network.first_unit_edge() + e] > 0) {
      result.unit_arcs.push_back(network.unit_arcs[e]);
    }
  }
  std::sort(result.unit_arcs.begin(), result.unit_arcs.end());
  return result;
}

std::vector<Arc> realize_demands(const Digraph& d, const DemandVector& demands, int delta_star) {
  check_demands(d, demands);
  const int n = d.num_vertices();
  auto fail = [](RealizationCondition c, const std::string& detail) {
    throw PreconditionViolated(c, to_string(c) + " violated: " + detail);
  };
  if (delta_star > n - 1) {
    fail(RealizationCondition::cap_below_order,
         "cap " + std::to_string(delta_star) + " with " + std::to_string(n) + " vertices");
  }
  for (int i = 0; i < n; ++i) {
    if (d.indegree(i) + demands.in[i] > delta_star) {
      fail(RealizationCondition::indegree_room, "vertex " + std::to_string(i));
    }
  }
  for (int i = 0; i < n; ++i) {
    if (d.outdegree(i) + demands.out[i] > delta_star) {
      fail(RealizationCondition::outdegree_room, "vertex " + std::to_string(i));
    }
  }
  if (!demands.balanced()) fail(RealizationCondition::balanced, "totals differ");
  const long long s = demands.total_in();
  if (s <= 2LL * delta_star * delta_star) {
    fail(RealizationCondition::large_total, "total " + std::to_string(s));
  }

  FlowResult flow = max_flow(build_network(d, demands));
  if (flow.value != s) {
    // Unreachable when the conditions hold.
    throw Error(Errc::precondition_violated, "maximum flow below total demand");
  }
  return std::move(flow.unit_arcs);
}

std::optional<std::vector<Arc>> try_realize_demands(const Digraph& d, const DemandVector& demands) {
  check_demands(d, demands);
  if (!demands.balanced()) throw Error(Errc::unbalanced_demands, "indegree and outdegree demand totals differ");
  FlowResult flow = max_flow(build_network(d, demands));
  if (flow.value != demands.total_in()) return std::nullopt;
  return std::move(flow.unit_arcs);
}

}  // namespace degcomp
