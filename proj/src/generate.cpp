#include "degcomp/generate.hpp"

#include <algorithm>
#include <limits>

#include "degcomp/error.hpp"

namespace degcomp {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw Error(Errc::invalid_argument, "empty sampling range");
  // Reject the top partial copy of [0, bound) to keep the draw uniform.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return x % bound;
}

int Rng::between(int lo, int hi) {
  if (hi < lo) throw Error(Errc::invalid_argument, "empty sampling range");
  return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

bool Rng::chance(double p) {
  constexpr std::uint64_t grid = std::uint64_t{1} << 53;
  return static_cast<double>(engine_() >> 11) < p * static_cast<double>(grid);
}

Digraph random_digraph(int n, double density, Rng& rng) {
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v && rng.chance(density)) arcs.push_back({u, v});
    }
  }
  return Digraph(n, arcs);
}

namespace {

std::vector<Arc> random_non_arcs(const Digraph& d, int count, Rng& rng) {
  std::vector<Arc> free;
  for (Vertex u = 0; u < d.num_vertices(); ++u) {
    for (Vertex v = 0; v < d.num_vertices(); ++v) {
      if (u != v && !d.has_arc(u, v)) free.push_back({u, v});
    }
  }
  count = std::min<int>(count, static_cast<int>(free.size()));
  // Partial Fisher-Yates.
  for (int i = 0; i < count; ++i) {
    const auto j = i + static_cast<std::size_t>(rng.below(free.size() - i));
    std::swap(free[i], free[j]);
  }
  free.resize(count);
  return free;
}

DegreeListFunction random_lists(const Digraph& d, const GenOptions& o, Rng& rng) {
  const int bound = d.max_degree() + o.slack;
  std::vector<std::vector<DegreePair>> lists(d.num_vertices());
  for (Vertex v = 0; v < d.num_vertices(); ++v) {
    const DegreePair deg = d.degree(v);
    for (int i = 0; i < o.list_size; ++i) {
      lists[v].push_back({rng.between(std::max(0, deg.in - 1), deg.in + o.slack),
                          rng.between(std::max(0, deg.out - 1), deg.out + o.slack)});
    }
  }
  return DegreeListFunction(std::move(lists), bound);
}

DegreeSequence random_target(const Digraph& d, const GenOptions& o, Rng& rng) {
  const Digraph completed = add_arcs(d, random_non_arcs(d, o.budget, rng));
  std::vector<DegreePair> target = degree_sequence(completed).entries();
  const int n = static_cast<int>(target.size());
  if (n >= 2 && rng.chance(o.perturb)) {
    // Move one unit of indegree or outdegree; totals stay balanced.
    const bool in = rng.chance(0.5);
    const int from = rng.between(0, n - 1);
    const int to = rng.between(0, n - 1);
    int& source = in ? target[from].in : target[from].out;
    if (from != to && source > 0) {
      --source;
      ++(in ? target[to].in : target[to].out);
    }
  }
  std::sort(target.begin(), target.end());
  return DegreeSequence(std::move(target));
}

}  // namespace

ProblemInstance generate_instance(const GenOptions& o) {
  if (o.vertices < 0 || o.budget < 0 || o.slack < 0 || o.list_size < 0) {
    throw Error(Errc::invalid_argument, "generator sizes must be non-negative");
  }
  if (!(o.density >= 0.0 && o.density <= 1.0)) {
    throw Error(Errc::invalid_argument, "density must lie in [0, 1]");
  }
  Rng rng(o.seed);
  Digraph d = random_digraph(o.vertices, o.density, rng);
  switch (o.problem) {
    case Problem::ddconc: {
      DegreeListFunction tau = random_lists(d, o, rng);
      return ProblemInstance::ddconc(std::move(d), o.budget, std::move(tau));
    }
    case Problem::ddseqc: {
      DegreeSequence target = random_target(d, o, rng);
      return ProblemInstance::ddseqc(std::move(d), std::move(target));
    }
    case Problem::dda:
      return ProblemInstance::dda(std::move(d), o.anonymity, o.budget);
  }
  throw Error(Errc::invalid_argument, "unknown problem");
}

}  // namespace degcomp
