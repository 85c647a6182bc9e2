#include <doctest.h>

#include <algorithm>

#include "degcomp/error.hpp"
#include "degcomp/flow.hpp"
#include "support.hpp"

using namespace degcomp;
using namespace degcomp::testing;

namespace {

// True iff some subset of the non-arcs raises every vertex by its demand.
bool realizable_by_enumeration(const Digraph& d, const DemandVector& demands) {
  std::vector<Arc> free;
  for (Vertex u = 0; u < d.num_vertices(); ++u) {
    for (Vertex v = 0; v < d.num_vertices(); ++v) {
      if (u != v && !d.has_arc(u, v)) free.push_back({u, v});
    }
  }
  for (std::uint32_t mask = 0; mask < (1u << free.size()); ++mask) {
    std::vector<int> in(d.num_vertices(), 0);
    std::vector<int> out(d.num_vertices(), 0);
    for (std::size_t e = 0; e < free.size(); ++e) {
      if (mask >> e & 1u) {
        ++out[free[e].tail];
        ++in[free[e].head];
      }
    }
    if (in == demands.in && out == demands.out) return true;
  }
  return false;
}

bool realizes(const Digraph& d, const DemandVector& demands, const std::vector<Arc>& arcs) {
  const Digraph after = add_arcs(d, arcs);  // throws on a loop or an existing arc
  for (Vertex v = 0; v < d.num_vertices(); ++v) {
    if (after.degree(v) - d.degree(v) != DegreePair{demands.in[v], demands.out[v]}) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("build_network examples") {
  const FlowNetwork net = build_network(Digraph(2), DemandVector{{1, 0}, {0, 1}});
  CHECK(net.node_count() == 6);
  CHECK(net.unit_arcs == std::vector<Arc>{{0, 1}, {1, 0}});
  // Source edges carry outdegree demands, sink edges indegree demands.
  CHECK(net.edges[0].capacity == 0);
  CHECK(net.edges[1].from == net.source());
  CHECK(net.edges[1].to == net.out_node(1));
  CHECK(net.edges[1].capacity == 1);
  CHECK(net.edges[2].from == net.in_node(0));
  CHECK(net.edges[2].to == net.sink());
  CHECK(net.edges[2].capacity == 1);
  CHECK(net.edges[3].capacity == 0);
  CHECK(net.edges[net.first_unit_edge()].from == net.out_node(0));
  CHECK(net.edges[net.first_unit_edge()].to == net.in_node(1));

  const std::vector<Arc> both{{0, 1}, {1, 0}};
  CHECK(build_network(Digraph(2, both), DemandVector{{0, 0}, {0, 0}}).unit_arcs.empty());
  CHECK(build_network(Digraph(3), DemandVector{{0, 0, 0}, {0, 0, 0}}).unit_arcs.size() == 6);
}

TEST_CASE("build_network rejects malformed demands") {
  CHECK_THROWS_AS(build_network(Digraph(2), DemandVector{{1}, {1, 0}}), Error);
  try {
    build_network(Digraph(2), DemandVector{{-1, 0}, {0, 0}});
    FAIL("expected negative_demand");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::negative_demand);
  }
}

TEST_CASE("max_flow examples") {
  CHECK(max_flow(build_network(Digraph(3), DemandVector{{0, 0, 0}, {0, 0, 0}})).value == 0);
  const FlowResult one = max_flow(build_network(Digraph(2), DemandVector{{1, 0}, {0, 1}}));
  CHECK(one.value == 1);
  CHECK(one.unit_arcs == std::vector<Arc>{{1, 0}});
  CHECK(max_flow(build_network(Digraph(3), DemandVector{{1, 1, 1}, {1, 1, 1}})).value == 3);
}

TEST_CASE("realize_demands names the first failed condition") {
  auto condition = [](const Digraph& d, const DemandVector& x, int delta) {
    try {
      realize_demands(d, x, delta);
    } catch (const PreconditionViolated& e) {
      return e.condition();
    }
    FAIL("expected a violated precondition");
    return RealizationCondition::cap_below_order;
  };
  const Digraph d(4);
  CHECK(condition(d, {{0, 0, 0, 0}, {0, 0, 0, 0}}, 1) == RealizationCondition::large_total);
  CHECK(condition(d, {{0, 0, 0, 0}, {0, 0, 0, 0}}, 4) == RealizationCondition::cap_below_order);
  CHECK(condition(d, {{2, 0, 0, 0}, {1, 1, 0, 0}}, 1) == RealizationCondition::indegree_room);
  CHECK(condition(d, {{1, 1, 0, 0}, {2, 0, 0, 0}}, 1) == RealizationCondition::outdegree_room);
  CHECK(condition(d, {{1, 1, 1, 0}, {1, 1, 0, 0}}, 1) == RealizationCondition::balanced);
  CHECK(to_string(RealizationCondition::large_total).rfind("V", 0) == 0);
}

TEST_CASE("realize_demands on ten isolated vertices") {
  const Digraph d(10);
  const DemandVector x{std::vector<int>(10, 1), std::vector<int>(10, 1)};
  const std::vector<Arc> arcs = realize_demands(d, x, 2);
  CHECK(arcs.size() == 10);
  CHECK(realizes(d, x, arcs));
}

TEST_CASE("try_realize_demands examples") {
  CHECK(try_realize_demands(Digraph(3), {{0, 0, 0}, {0, 0, 0}}).value().empty());
  const std::vector<Arc> both{{0, 1}, {1, 0}};
  CHECK_FALSE(try_realize_demands(Digraph(2, both), {{1, 0}, {0, 1}}).has_value());
  CHECK(try_realize_demands(sequence_example_digraph(), {{1, 0, 0, 0}, {0, 0, 0, 1}}).value() == std::vector<Arc>{{3, 0}});
  try {
    try_realize_demands(Digraph(2), {{1, 0}, {0, 0}});
    FAIL("expected unbalanced_demands");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::unbalanced_demands);
  }
}

TEST_CASE("property: flow realization agrees with subset enumeration") {
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    Rng rng(seed);
    const int n = rng.between(1, 4);
    const Digraph d = random_digraph(n, 0.3, rng);
    DemandVector x{std::vector<int>(n), std::vector<int>(n)};
    for (int v = 0; v < n; ++v) {
      x.in[v] = rng.between(0, 2);
      x.out[v] = rng.between(0, 2);
    }
    // Balance by trimming the larger side.
    while (x.total_in() > x.total_out()) {
      auto it = std::max_element(x.in.begin(), x.in.end());
      --*it;
    }
    while (x.total_out() > x.total_in()) {
      auto it = std::max_element(x.out.begin(), x.out.end());
      --*it;
    }
    const auto flow = try_realize_demands(d, x);
    CHECK(flow.has_value() == realizable_by_enumeration(d, x));
    if (flow) {
      CHECK(static_cast<long long>(flow->size()) == x.total_in());
      CHECK(realizes(d, x, *flow));
    }
  }
}

TEST_CASE("property: maximum flow conserves flow and respects capacities") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed + 1000);
    const int n = rng.between(1, 8);
    const Digraph d = random_digraph(n, 0.4, rng);
    DemandVector x{std::vector<int>(n), std::vector<int>(n)};
    for (int v = 0; v < n; ++v) {
      x.in[v] = rng.between(0, 3);
      x.out[v] = rng.between(0, 3);
    }
    const FlowNetwork net = build_network(d, x);
    const FlowResult result = max_flow(net);
    std::vector<long long> balance(net.node_count(), 0);
    for (std::size_t e = 0; e < net.edges.size(); ++e) {
      CHECK(result.flow[e] >= 0);
      CHECK(result.flow[e] <= net.edges[e].capacity);
      balance[net.edges[e].from] -= result.flow[e];
      balance[net.edges[e].to] += result.flow[e];
    }
    for (int node = 1; node + 1 < net.node_count(); ++node) CHECK(balance[node] == 0);
    CHECK(balance[net.sink()] == result.value);
    CHECK(result.value <= std::min(x.total_in(), x.total_out()));
  }
}
