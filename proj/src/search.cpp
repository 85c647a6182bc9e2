#include "degcomp/search.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "degcomp/error.hpp"
#include "degcomp/flow.hpp"
#include "degcomp/kernel.hpp"
#include "degcomp/numprob.hpp"

namespace degcomp {

namespace {

// Depth-first enumeration of candidate subsets of a fixed size. The state
// tracks how many vertices must still change degree; a branch dies once that
// exceeds twice the arcs left, since one arc changes at most two vertices.
class BoundedSearch {
 public:
  BoundedSearch(const ProblemInstance& instance, std::span<const Vertex> vertices)
      : inst_(instance), d_(instance.graph) {
    const int n = d_.num_vertices();
    std::vector<char> member(n, 0);
    for (Vertex v : vertices) member[v] = 1;
    for (Vertex u = 0; u < n; ++u) {
      if (!member[u]) continue;
      for (Vertex v = 0; v < n; ++v) {
        if (member[v] && u != v && !d_.has_arc(u, v)) candidates_.push_back({u, v});
      }
    }
    in_.resize(n);
    out_.resize(n);
    for (Vertex v = 0; v < n; ++v) {
      in_[v] = d_.indegree(v);
      out_[v] = d_.outdegree(v);
    }
    if (inst_.problem == Problem::ddseqc) {
      target_count_ = inst_.target.multiplicities();
      target_max_in_ = inst_.target.max_indegree();
      target_max_out_ = inst_.target.max_outdegree();
    }
    for (Vertex v = 0; v < n; ++v) enter(v);
  }

  std::optional<std::vector<Arc>> run(int smallest, int largest) {
    largest = std::min<long long>(largest, static_cast<long long>(candidates_.size()));
    for (int size = smallest; size <= largest; ++size) {
      chosen_.clear();
      if (extend(0, size)) return chosen_;
    }
    return std::nullopt;
  }

 private:
  DegreePair degree(Vertex v) const { return {in_[v], out_[v]}; }

  bool hopeless(Vertex v) const {
    const DegreePair deg = degree(v);
    switch (inst_.problem) {
      case Problem::ddconc:
        return std::none_of(inst_.tau.allowed(v).begin(), inst_.tau.allowed(v).end(),
                            [&](DegreePair p) { return deg.dominated_by(p); });
      case Problem::ddseqc:
        return deg.in > target_max_in_ || deg.out > target_max_out_;
      case Problem::dda:
        return false;
    }
    return false;
  }

  int surplus(DegreePair t) const {
    const auto have = count_.find(t);
    if (have == count_.end()) return 0;
    const auto want = target_count_.find(t);
    return std::max(0, have->second - (want == target_count_.end() ? 0 : want->second));
  }

  // Adds v's current degree to the bookkeeping.
  void enter(Vertex v) {
    const DegreePair deg = degree(v);
    hopeless_ += hopeless(v) ? 1 : 0;
    if (inst_.problem == Problem::ddconc) {
      unsatisfied_ += inst_.tau.allows(v, deg) ? 0 : 1;
      return;
    }
    if (inst_.problem == Problem::ddseqc) excess_ -= surplus(deg);
    ++count_[deg];
    if (inst_.problem == Problem::ddseqc) excess_ += surplus(deg);
  }

  void leave(Vertex v) {
    const DegreePair deg = degree(v);
    hopeless_ -= hopeless(v) ? 1 : 0;
    if (inst_.problem == Problem::ddconc) {
      unsatisfied_ -= inst_.tau.allows(v, deg) ? 0 : 1;
      return;
    }
    if (inst_.problem == Problem::ddseqc) excess_ -= surplus(deg);
    if (--count_[deg] == 0) count_.erase(deg);
    if (inst_.problem == Problem::ddseqc) excess_ += surplus(deg);
  }

  void apply(const Arc& a, int delta) {
    leave(a.tail);
    leave(a.head);
    out_[a.tail] += delta;
    in_[a.head] += delta;
    enter(a.tail);
    enter(a.head);
  }

  // Vertices that must still change degree.
  long long required_changes() const {
    switch (inst_.problem) {
      case Problem::ddconc:
        return unsatisfied_;
      case Problem::ddseqc:
        return excess_;
      case Problem::dda: {
        // A short block either empties or gains members; each changing
        // vertex leaves one block and joins one.
        long long shortfall = 0;
        for (const auto& [deg, count] : count_) {
          if (count < inst_.anonymity) shortfall += std::min(count, inst_.anonymity - count);
        }
        return (shortfall + 1) / 2;
      }
    }
    return 0;
  }

  bool extend(std::size_t start, int left) {
    if (hopeless_ > 0 || required_changes() > 2LL * left) return false;
    if (left == 0) return true;
    for (std::size_t i = start; i + left <= candidates_.size(); ++i) {
      apply(candidates_[i], +1);
      chosen_.push_back(candidates_[i]);
      if (extend(i + 1, left - 1)) return true;
      chosen_.pop_back();
      apply(candidates_[i], -1);
    }
    return false;
  }

  const ProblemInstance& inst_;
  const Digraph& d_;
  std::vector<Arc> candidates_;
  std::vector<Arc> chosen_;
  std::vector<int> in_;
  std::vector<int> out_;
  int hopeless_ = 0;
  int unsatisfied_ = 0;
  long long excess_ = 0;
  std::map<DegreePair, int> count_;
  std::map<DegreePair, int> target_count_;
  int target_max_in_ = 0;
  int target_max_out_ = 0;
};

std::vector<Vertex> alpha_set_of(const ProblemInstance& instance, int s) {
  const int alpha = std::max(1, 2 * s * (instance.graph.max_degree() + 1));
  if (instance.problem == Problem::ddconc) {
    return compute_alpha_set(instance.graph, instance.tau,
                             {alpha, AlphaVariant::type_set, delta_star_cap(instance)});
  }
  return compute_block_set(instance.graph, alpha);
}

Solution finish(const ProblemInstance& instance, std::vector<Arc> arcs, std::string route) {
  std::sort(arcs.begin(), arcs.end());
  Solution solution;
  solution.certificate = certify(instance, arcs, std::move(route));
  solution.arcs = std::move(arcs);
  return solution;
}

std::optional<Solution> through_kernel(const ProblemInstance& original, const KernelResult& kernel) {
  switch (kernel.verdict) {
    case KernelVerdict::trivial_no:
      return std::nullopt;
    case KernelVerdict::trivial_yes:
      return finish(original, {}, "search");
    case KernelVerdict::reduced:
    case KernelVerdict::unchanged:
      break;
  }
  const ProblemInstance& reduced = kernel.instance;
  std::optional<Solution> found;
  if (reduced.problem == Problem::ddconc) {
    found = solve_bounded(reduced);
  } else {
    // Solutions avoiding added vertices exist; the block set is taken over
    // the retained part, whose degrees are those of the original.
    const int s = std::max(effective_budget(reduced), 0);
    int max_kept_degree = 0;
    for (const auto& [kernel_vertex, original_vertex] : kernel.kept) {
      max_kept_degree = std::max(max_kept_degree, reduced.graph.degree(kernel_vertex).max_component());
    }
    const int alpha = std::max(1, 2 * s * (max_kept_degree + 1));
    std::vector<Vertex> vertices;
    for (Vertex v : compute_block_set(reduced.graph, alpha)) {
      if (kernel.kept.count(v)) vertices.push_back(v);
    }
    found = solve_bounded_within(reduced, vertices);
  }
  if (!found) return std::nullopt;
  return finish(original, lift_solution(kernel, found->arcs), "search");
}

DegreeListFunction clip_lists(const DegreeListFunction& tau, int cap) {
  std::vector<std::vector<DegreePair>> lists(tau.size());
  for (Vertex v = 0; v < tau.size(); ++v) {
    for (DegreePair p : tau.allowed(v)) {
      if (p.in <= cap && p.out <= cap) lists[v].push_back(p);
    }
  }
  return DegreeListFunction(std::move(lists), std::min(tau.bound(), cap));
}

std::optional<Solution> solve_ddconc(const ProblemInstance& instance) {
  const Digraph& d = instance.graph;
  ProblemInstance current = instance;
  current.budget = effective_budget(instance);
  for (;;) {
    const int cap = delta_star_cap(current);
    const long long threshold = 2LL * cap * cap;
    if (current.budget <= threshold) {
      return through_kernel(instance, kernelize_ddconc(d, current.budget, instance.tau, cap));
    }
    const NddccTable table(degree_sequence(d), clip_lists(instance.tau, cap), current.budget);
    for (long long s = threshold + 1; s <= current.budget; ++s) {
      if (auto number = table.solution(static_cast<int>(s))) {
        return finish(instance, realize_demands(d, number->demands, cap), "flow");
      }
    }
    current.budget = static_cast<int>(threshold);
  }
}

std::optional<Solution> solve_ddseqc(const ProblemInstance& instance) {
  const Digraph& d = instance.graph;
  const auto implied = implied_budget(instance);
  if (!implied) return std::nullopt;
  if (instance.target.max_component() > std::max(d.num_vertices() - 1, 0)) return std::nullopt;
  const int cap = delta_star_cap(instance);
  if (*implied <= 2LL * cap * cap) {
    return through_kernel(instance, kernelize_ddseqc(d, instance.target));
  }
  const DegreeSequence sigma = degree_sequence(d);
  const auto matching = solve_nddsc(sigma, instance.target);
  if (!matching) return std::nullopt;
  std::vector<DegreePair> matched(sigma.size());
  for (int i = 0; i < sigma.size(); ++i) matched[i] = instance.target[matching->pi[i]];
  const DemandVector demands = demands_from_solution(sigma, DegreeSequence(std::move(matched)));
  return finish(instance, realize_demands(d, demands, cap), "flow");
}

std::optional<Solution> solve_dda(const ProblemInstance& instance) {
  const Digraph& d = instance.graph;
  ProblemInstance current = instance;
  current.budget = effective_budget(instance);
  for (;;) {
    const int cap = delta_star_cap(current);
    const long long threshold = 2LL * cap * cap;
    if (current.budget <= threshold) {
      return through_kernel(instance, kernelize_dda(d, instance.anonymity, current.budget));
    }
    const NdaSolver solver(degree_sequence(d), instance.anonymity, cap, current.budget);
    for (long long s = threshold + 1; s <= current.budget; ++s) {
      if (auto number = solver.solution(static_cast<int>(s))) {
        return finish(instance, realize_demands(d, number->demands, cap), "flow");
      }
    }
    current.budget = static_cast<int>(threshold);
  }
}

}  // namespace

std::optional<Solution> solve_bounded_within(const ProblemInstance& instance,
                                             std::span<const Vertex> vertices) {
  const int s = effective_budget(instance);
  if (s < 0) return std::nullopt;
  BoundedSearch search(instance, vertices);
  const int smallest = instance.problem == Problem::ddseqc ? s : 0;
  auto arcs = search.run(smallest, s);
  if (!arcs) return std::nullopt;
  return finish(instance, std::move(*arcs), "search");
}

std::optional<Solution> solve_bounded(const ProblemInstance& instance) {
  const int s = effective_budget(instance);
  if (s < 0) return std::nullopt;
  return solve_bounded_within(instance, alpha_set_of(instance, s));
}

std::optional<Solution> solve(const ProblemInstance& instance) {
  switch (instance.problem) {
    case Problem::ddconc: return solve_ddconc(instance);
    case Problem::ddseqc: return solve_ddseqc(instance);
    case Problem::dda: return solve_dda(instance);
  }
  return std::nullopt;
}

Certificate certify(const ProblemInstance& instance, std::span<const Arc> arcs, std::string route) {
  Certificate cert;
  cert.route = std::move(route);
  const Digraph& d = instance.graph;
  const int n = d.num_vertices();

  cert.insertable = true;
  std::set<std::pair<int, int>> seen;
  for (const Arc& a : arcs) {
    const bool in_range = a.tail >= 0 && a.tail < n && a.head >= 0 && a.head < n;
    if (!in_range || a.tail == a.head || d.has_arc(a.tail, a.head) ||
        !seen.emplace(a.tail, a.head).second) {
      cert.insertable = false;
    }
  }

  const long long count = static_cast<long long>(arcs.size());
  if (instance.problem == Problem::ddseqc) {
    const long long in = instance.target.total_in() - d.num_arcs();
    const long long out = instance.target.total_out() - d.num_arcs();
    cert.within_budget = in == out && count == in;
  } else {
    cert.within_budget = count <= instance.budget;
  }
  if (!cert.insertable) return cert;

  std::vector<DegreePair> final_degree(n);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : d.out_neighbors(v)) {
      ++final_degree[v].out;
      ++final_degree[w].in;
    }
  }
  for (const Arc& a : arcs) {
    ++final_degree[a.tail].out;
    ++final_degree[a.head].in;
  }

  switch (instance.problem) {
    case Problem::ddconc: {
      cert.degree_lists = true;
      for (Vertex v = 0; v < n; ++v) {
        const auto allowed = instance.tau.allowed(v);
        if (std::find(allowed.begin(), allowed.end(), final_degree[v]) == allowed.end()) {
          cert.degree_lists = false;
        }
      }
      cert.sequence_property = true;
      break;
    }
    case Problem::ddseqc: {
      std::vector<DegreePair> want = instance.target.entries();
      std::sort(want.begin(), want.end());
      std::vector<DegreePair> have = final_degree;
      std::sort(have.begin(), have.end());
      cert.degree_lists = true;
      cert.sequence_property = want == have;
      break;
    }
    case Problem::dda: {
      std::map<DegreePair, int> occurrences;
      for (DegreePair p : final_degree) ++occurrences[p];
      cert.degree_lists = true;
      cert.sequence_property = std::all_of(occurrences.begin(), occurrences.end(), [&](const auto& e) {
        return e.second >= instance.anonymity;
      });
      break;
    }
  }
  return cert;
}

bool verify_solution(const ProblemInstance& instance, const Solution& solution) {
  const Certificate cert = certify(instance, solution.arcs, solution.certificate.route);
  return cert.insertable && cert.within_budget && cert.degree_lists && cert.sequence_property;
}

}  // namespace degcomp
