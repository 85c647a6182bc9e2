#include "degcomp/kernel.hpp"

#include <algorithm>
#include <cassert>

#include "degcomp/error.hpp"

namespace degcomp {

namespace {

std::map<Vertex, Vertex> identity_map(int n) {
  std::map<Vertex, Vertex> kept;
  for (int v = 0; v < n; ++v) kept.emplace(v, v);
  return kept;
}

KernelResult trivial(KernelVerdict verdict, ProblemInstance instance, std::string reason) {
  KernelResult result;
  result.verdict = verdict;
  result.instance = std::move(instance);
  result.reason = std::move(reason);
  return result;
}

KernelResult unchanged(ProblemInstance instance) {
  KernelResult result;
  result.verdict = KernelVerdict::unchanged;
  result.kept = identity_map(instance.graph.num_vertices());
  result.instance = std::move(instance);
  return result;
}

std::vector<Vertex> sorted_members(const std::vector<char>& member) {
  std::vector<Vertex> result;
  for (int v = 0; v < static_cast<int>(member.size()); ++v) {
    if (member[v]) result.push_back(v);
  }
  return result;
}

}  // namespace

std::vector<Vertex> compute_alpha_set(const Digraph& d, const DegreeListFunction& tau,
                                      const AlphaSetSpec& spec) {
  if (spec.alpha < 1) throw Error(Errc::invalid_argument, "alpha must be positive");
  if (tau.size() != d.num_vertices()) {
    throw Error(Errc::length_mismatch, "degree lists do not match the vertex count");
  }
  const int n = d.num_vertices();
  std::vector<char> member(n, 0);
  std::map<std::pair<DegreePair, DegreePair>, int> used;
  const DegreePair zero{0, 0};

  for (Vertex v = 0; v < n; ++v) {
    if (!is_satisfied(d, tau, v)) {
      member[v] = 1;
      continue;
    }
    const DegreePair deg = d.degree(v);
    if (spec.variant == AlphaVariant::block_set) {
      int& slots = used[{deg, zero}];
      if (slots < spec.alpha) {
        ++slots;
        member[v] = 1;
      }
      continue;
    }
    const DegreePair key_deg = spec.variant == AlphaVariant::block_type_set ? deg : zero;
    for (DegreePair t : vertex_types(d, tau, v, spec.cap)) {
      if (t == zero) continue;
      int& slots = used[{key_deg, t}];
      if (slots < spec.alpha) {
        ++slots;
        member[v] = 1;
      }
    }
  }
  return sorted_members(member);
}

std::vector<Vertex> compute_block_set(const Digraph& d, int alpha) {
  if (alpha < 1) throw Error(Errc::invalid_argument, "alpha must be positive");
  std::vector<Vertex> result;
  for (const auto& [deg, members] : blocks(d)) {
    const int take = std::min<int>(alpha, static_cast<int>(members.size()));
    result.insert(result.end(), members.begin(), members.begin() + take);
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::string to_string(TrivialNoReason reason) {
  switch (reason) {
    case TrivialNoReason::none: return "Pass";
    case TrivialNoReason::too_many_unsatisfied: return "TooManyUnsatisfied";
    case TrivialNoReason::degree_exceeds_cap: return "DegreeExceedsCap";
  }
  return "unknown";
}

TrivialNoReason reduce_trivial_no(const Digraph& d, int s, const DegreeListFunction& tau,
                                  int delta_star) {
  if (count_unsatisfied(d, tau) > 2LL * s) return TrivialNoReason::too_many_unsatisfied;
  if (d.max_degree() > delta_star) return TrivialNoReason::degree_exceeds_cap;
  return TrivialNoReason::none;
}

std::string to_string(KernelVerdict verdict) {
  switch (verdict) {
    case KernelVerdict::reduced: return "reduced";
    case KernelVerdict::trivial_yes: return "trivial_yes";
    case KernelVerdict::trivial_no: return "trivial_no";
    case KernelVerdict::unchanged: return "unchanged";
  }
  return "unknown";
}

long long ddconc_kernel_bound(int s, int delta_star, int max_degree) {
  const long long side = delta_star + 1LL;
  return 2LL * s + side * side * 2LL * s * (max_degree + 1LL);
}

long long ddseqc_retained_bound(int s, int max_degree) {
  const long long side = max_degree + 1LL;
  return 2LL * s * side * side * side;
}

long long dda_kernel_bound(int s, int k, int max_degree) {
  const long long delta = max_degree;
  const long long beta = (delta + 2) * 2LL * s;
  const long long retained = (delta + 1) * (delta + 1) * (beta + 2LL * s);
  const long long padding = std::max(delta + s + 1, std::min<long long>(k, beta));
  return retained + 2 * delta * retained + 2 * padding;
}

KernelResult kernelize_ddconc(const Digraph& d, int s, const DegreeListFunction& tau,
                              int delta_star) {
  const ProblemInstance empty = ProblemInstance::ddconc(Digraph(0), 0, DegreeListFunction({}, 0));
  const TrivialNoReason reason = reduce_trivial_no(d, s, tau, delta_star);
  if (reason != TrivialNoReason::none) {
    return trivial(KernelVerdict::trivial_no, empty, to_string(reason));
  }
  // The unsatisfied-count check passed with no budget: nothing is unsatisfied.
  if (s == 0) return trivial(KernelVerdict::trivial_yes, empty, "all vertices satisfied");

  const int alpha = 2 * s * (d.max_degree() + 1);
  const std::vector<Vertex> kept =
      compute_alpha_set(d, tau, {alpha, AlphaVariant::type_set, delta_star});
  if (static_cast<int>(kept.size()) == d.num_vertices()) {
    return unchanged(ProblemInstance::ddconc(d, s, tau));
  }

  std::vector<char> member(d.num_vertices(), 0);
  for (Vertex v : kept) member[v] = 1;
  std::vector<std::vector<DegreePair>> lists(kept.size());
  for (std::size_t i = 0; i < kept.size(); ++i) {
    const Vertex v = kept[i];
    DegreePair outside{0, 0};
    for (Vertex u : d.in_neighbors(v)) outside.in += member[u] ? 0 : 1;
    for (Vertex u : d.out_neighbors(v)) outside.out += member[u] ? 0 : 1;
    for (DegreePair p : tau.allowed(v)) {
      if (!outside.dominated_by(p)) continue;
      const DegreePair shifted = p - outside;
      if (shifted.in <= delta_star && shifted.out <= delta_star) lists[i].push_back(shifted);
    }
  }

  KernelResult result;
  result.verdict = KernelVerdict::reduced;
  result.instance = ProblemInstance::ddconc(d.induced(kept), s,
                                            DegreeListFunction(std::move(lists), delta_star));
  for (std::size_t i = 0; i < kept.size(); ++i) result.kept.emplace(static_cast<Vertex>(i), kept[i]);
  assert(result.instance.graph.num_vertices() <= ddconc_kernel_bound(s, delta_star, d.max_degree()));
  return result;
}

KernelResult kernelize_ddseqc(const Digraph& d, const DegreeSequence& sigma) {
  if (sigma.size() != d.num_vertices()) {
    throw Error(Errc::length_mismatch, "target sequence does not match the vertex count");
  }
  const ProblemInstance empty = ProblemInstance::ddseqc(Digraph(0), DegreeSequence());
  if (d.max_indegree() > sigma.max_indegree() || d.max_outdegree() > sigma.max_outdegree()) {
    return trivial(KernelVerdict::trivial_no, empty, "degrees cannot decrease");
  }
  const ProblemInstance original = ProblemInstance::ddseqc(d, sigma);
  const auto implied = implied_budget(original);
  if (!implied) return trivial(KernelVerdict::trivial_no, empty, "inconsistent insertion count");
  const int s = *implied;
  if (s == 0) {
    return degree_sequence(d).same_multiset(sigma)
               ? trivial(KernelVerdict::trivial_yes, empty, "target already met")
               : trivial(KernelVerdict::trivial_no, empty, "target differs with no insertions");
  }

  const int alpha = 2 * s * (d.max_degree() + 1);
  const std::vector<Vertex> kept = compute_block_set(d, alpha);
  std::vector<char> member(d.num_vertices(), 0);
  for (Vertex v : kept) member[v] = 1;

  // A dropped degree must be removable from the target; otherwise more than
  // 2s vertices would have to change degree.
  std::map<DegreePair, int> target_count = sigma.multiplicities();
  for (Vertex v = 0; v < d.num_vertices(); ++v) {
    if (member[v]) continue;
    if (--target_count[d.degree(v)] < 0) {
      return trivial(KernelVerdict::trivial_no, empty, "too many vertices of one degree");
    }
  }
  if (static_cast<int>(kept.size()) == d.num_vertices()) return unchanged(original);

  const int retained = static_cast<int>(kept.size());
  const int dummies = sigma.max_component() + 2;
  std::vector<Arc> arcs = d.induced(kept).arcs();
  for (int i = 0; i < dummies; ++i) {
    for (int j = 0; j < dummies; ++j) {
      if (i != j) arcs.push_back({retained + i, retained + j});
    }
  }
  for (int i = 0; i < retained; ++i) {
    const Vertex v = kept[i];
    int missing_in = 0;
    int missing_out = 0;
    for (Vertex u : d.in_neighbors(v)) missing_in += member[u] ? 0 : 1;
    for (Vertex u : d.out_neighbors(v)) missing_out += member[u] ? 0 : 1;
    for (int w = 0; w < missing_in; ++w) arcs.push_back({retained + w, i});
    for (int w = 0; w < missing_out; ++w) arcs.push_back({i, retained + w});
  }
  Digraph kernel(retained + dummies, arcs);

  std::vector<DegreePair> target;
  for (const auto& [deg, count] : target_count) target.insert(target.end(), count, deg);
  for (int i = 0; i < dummies; ++i) target.push_back(kernel.degree(retained + i));
  std::sort(target.begin(), target.end());

  KernelResult result;
  result.verdict = KernelVerdict::reduced;
  for (int i = 0; i < retained; ++i) result.kept.emplace(i, kept[i]);
  for (int i = 0; i < dummies; ++i) result.added.push_back(retained + i);
  result.instance = ProblemInstance::ddseqc(std::move(kernel), DegreeSequence(std::move(target)));
  assert(retained <= ddseqc_retained_bound(s, d.max_degree()));
  return result;
}

KernelResult kernelize_dda(const Digraph& d, int k, int s) {
  if (k < 1) throw Error(Errc::invalid_argument, "anonymity must be positive");
  if (s < 0) throw Error(Errc::invalid_argument, "negative budget");
  const ProblemInstance empty = ProblemInstance::dda(Digraph(0), 1, 0);
  if (s == 0) {
    return is_k_anonymous(degree_sequence(d), k)
               ? trivial(KernelVerdict::trivial_yes, empty, "already anonymous")
               : trivial(KernelVerdict::trivial_no, empty, "not anonymous with no insertions");
  }

  const long long delta = d.max_degree();
  const long long budget = 2LL * s;
  const long long beta = (delta + 2) * budget;
  const long long n = d.num_vertices();
  if (n <= (delta + 1) * (delta + 1) * (beta + budget)) {
    return unchanged(ProblemInstance::dda(d, k, s));
  }
  const long long reduced_k = std::min<long long>(k, beta);

  std::vector<Vertex> kept;
  for (const auto& [deg, members] : blocks(d)) {
    const long long size = static_cast<long long>(members.size());
    if (budget < size && size < k - budget) {
      return trivial(KernelVerdict::trivial_no, empty, "insufficient budget for a block");
    }
    long long take = 0;
    if (k <= beta) {
      take = std::min(size, beta + budget);
    } else if (size <= budget) {
      take = size;
    } else {
      take = reduced_k + std::min(budget, size - k);
    }
    assert(take >= 0 && take <= size);
    kept.insert(kept.end(), members.begin(), members.begin() + take);
  }
  std::sort(kept.begin(), kept.end());

  const Digraph core = d.induced(kept);
  std::vector<Arc> arcs = core.arcs();
  int next = static_cast<int>(kept.size());
  std::vector<Vertex> sinks;    // receive an arc from a retained vertex
  std::vector<Vertex> sources;  // send an arc to a retained vertex
  for (int i = 0; i < static_cast<int>(kept.size()); ++i) {
    for (int c = d.outdegree(kept[i]) - core.outdegree(i); c > 0; --c) {
      arcs.push_back({i, next});
      sinks.push_back(next++);
    }
    for (int c = d.indegree(kept[i]) - core.indegree(i); c > 0; --c) {
      arcs.push_back({next, i});
      sources.push_back(next++);
    }
  }
  const long long floor_size = std::max(delta + s + 1, reduced_k);
  while (static_cast<long long>(std::min(sinks.size(), sources.size())) < floor_size) {
    const Vertex v = next++;
    const Vertex u = next++;
    sinks.push_back(v);
    sources.push_back(u);
    arcs.push_back({u, v});
  }
  for (Vertex a : sinks) {
    for (Vertex b : sinks) {
      if (a != b) arcs.push_back({a, b});
    }
  }
  for (Vertex a : sources) {
    for (Vertex b : sources) {
      if (a != b) arcs.push_back({a, b});
    }
  }
  for (Vertex a : sinks) {
    for (Vertex b : sources) arcs.push_back({a, b});
  }

  KernelResult result;
  result.verdict = KernelVerdict::reduced;
  for (int i = 0; i < static_cast<int>(kept.size()); ++i) result.kept.emplace(i, kept[i]);
  for (int v = static_cast<int>(kept.size()); v < next; ++v) result.added.push_back(v);
  result.instance =
      ProblemInstance::dda(Digraph(next, arcs), static_cast<int>(reduced_k), s);
  assert(next <= dda_kernel_bound(s, k, static_cast<int>(delta)));
  return result;
}

std::vector<Arc> lift_solution(const KernelResult& result, std::span<const Arc> kernel_solution) {
  if (result.verdict == KernelVerdict::trivial_no) {
    throw Error(Errc::invalid_argument, "cannot lift a solution of a no-instance");
  }
  std::vector<char> is_added(result.instance.graph.num_vertices(), 0);
  for (Vertex v : result.added) is_added[v] = 1;
  auto map_vertex = [&](Vertex v) {
    if (v >= 0 && v < static_cast<int>(is_added.size()) && is_added[v]) {
      throw Error(Errc::solution_touches_added_vertex,
                  "kernel vertex " + std::to_string(v) + " has no original");
    }
    const auto it = result.kept.find(v);
    if (it == result.kept.end()) {
      throw Error(Errc::vertex_out_of_range, "kernel vertex " + std::to_string(v) + " unknown");
    }
    return it->second;
  };
  std::vector<Arc> lifted;
  lifted.reserve(kernel_solution.size());
  for (const Arc& a : kernel_solution) lifted.push_back({map_vertex(a.tail), map_vertex(a.head)});
  std::sort(lifted.begin(), lifted.end());
  return lifted;
}

}  // namespace degcomp
