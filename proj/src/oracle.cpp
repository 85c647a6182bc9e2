#include "degcomp/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "degcomp/error.hpp"

namespace degcomp {

namespace {

// Saturating binomial coefficient.
long long choose(long long n, long long r, long long ceiling) {
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  long long value = 1;
  for (long long i = 1; i <= r; ++i) {
    value = value * (n - r + i) / i;
    if (value > ceiling) return ceiling + 1;
  }
  return value;
}

void guard(bool too_large, const std::string& what) {
  if (too_large) throw Error(Errc::instance_too_large, what);
}

bool definition_holds(const ProblemInstance& inst, const std::vector<DegreePair>& degrees) {
  switch (inst.problem) {
    case Problem::ddconc:
      for (Vertex v = 0; v < static_cast<int>(degrees.size()); ++v) {
        if (!inst.tau.allows(v, degrees[v])) return false;
      }
      return true;
    case Problem::ddseqc:
      return check_property(DegreeSequence(degrees), ExactSequence{inst.target});
    case Problem::dda:
      return check_property(DegreeSequence(degrees), KAnonymous{inst.anonymity});
  }
  return false;
}

}  // namespace

std::optional<Solution> brute_force_graph(const ProblemInstance& instance,
                                          const OracleLimits& limits) {
  const Digraph& d = instance.graph;
  const int n = d.num_vertices();
  guard(n > limits.max_vertices, "too many vertices for enumeration");

  int lowest = 0;
  int highest = 0;
  if (instance.problem == Problem::ddseqc) {
    const long long in = instance.target.total_in() - d.num_arcs();
    const long long out = instance.target.total_out() - d.num_arcs();
    if (in != out || in < 0 || in > d.num_non_arcs()) return std::nullopt;
    lowest = highest = static_cast<int>(in);
  } else {
    highest = static_cast<int>(std::min<long long>(instance.budget, d.num_non_arcs()));
  }
  guard(highest > limits.max_budget, "budget too large for enumeration");

  std::vector<Arc> candidates;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v && !d.has_arc(u, v)) candidates.push_back({u, v});
    }
  }
  long long subsets = 0;
  for (int size = lowest; size <= highest; ++size) {
    subsets += choose(static_cast<long long>(candidates.size()), size, limits.max_candidates);
    guard(subsets > limits.max_candidates, "too many arc subsets for enumeration");
  }

  std::vector<DegreePair> degrees(n);
  for (Vertex v = 0; v < n; ++v) degrees[v] = d.degree(v);
  std::vector<Arc> chosen;
  std::function<bool(std::size_t, int)> pick = [&](std::size_t start, int left) {
    if (left == 0) return definition_holds(instance, degrees);
    for (std::size_t i = start; i + left <= candidates.size(); ++i) {
      const Arc a = candidates[i];
      ++degrees[a.tail].out;
      ++degrees[a.head].in;
      chosen.push_back(a);
      if (pick(i + 1, left - 1)) return true;
      chosen.pop_back();
      --degrees[a.tail].out;
      --degrees[a.head].in;
    }
    return false;
  };
  for (int size = lowest; size <= highest; ++size) {
    if (pick(0, size)) {
      Solution solution;
      solution.arcs = chosen;
      solution.certificate.insertable = true;
      solution.certificate.within_budget = true;
      solution.certificate.degree_lists = true;
      solution.certificate.sequence_property = true;
      solution.certificate.route = "oracle";
      return solution;
    }
  }
  return std::nullopt;
}

std::optional<NumberSolution> brute_force_nddcc(const DegreeSequence& sigma, int s,
                                                const DegreeListFunction& tau,
                                                const OracleLimits& limits) {
  if (tau.size() != sigma.size()) throw Error(Errc::length_mismatch, "degree lists do not cover the sequence");
  const int n = sigma.size();
  std::vector<std::vector<DegreePair>> options(n);
  long long product = 1;
  for (int i = 0; i < n; ++i) {
    for (DegreePair p : tau.allowed(i)) {
      if (sigma[i].dominated_by(p)) options[i].push_back(p);
    }
    product = std::min(product * static_cast<long long>(options[i].size()), limits.max_candidates + 1);
  }
  guard(product > limits.max_candidates, "too many target sequences for enumeration");

  std::vector<DegreePair> target(n);
  std::function<bool(int, long long, long long)> pick = [&](int i, long long in, long long out) {
    if (in > s || out > s) return false;
    if (i == n) return in == s && out == s;
    for (DegreePair p : options[i]) {
      target[i] = p;
      if (pick(i + 1, in + p.in - sigma[i].in, out + p.out - sigma[i].out)) return true;
    }
    return false;
  };
  if (!pick(0, 0, 0)) return std::nullopt;
  DegreeSequence result(target);
  return NumberSolution{result, demands_from_solution(sigma, result)};
}

std::optional<Bijection> brute_force_nddsc(const DegreeSequence& sigma, const DegreeSequence& phi,
                                           const OracleLimits& limits) {
  if (sigma.size() != phi.size()) throw Error(Errc::length_mismatch, "sequence lengths differ");
  guard(sigma.size() > std::max(limits.max_vertices, 8), "too many entries for all bijections");
  Bijection b;
  b.pi.resize(sigma.size());
  std::iota(b.pi.begin(), b.pi.end(), 0);
  do {
    if (is_nddsc_bijection(sigma, phi, b)) return b;
  } while (std::next_permutation(b.pi.begin(), b.pi.end()));
  return std::nullopt;
}

std::optional<NumberSolution> brute_force_nda(const DegreeSequence& sigma, int s, int k, int xi,
                                              const OracleLimits& limits) {
  const int n = sigma.size();
  if (s < 0) return std::nullopt;
  // Increment vectors with total at most s, once per component.
  const long long per_side = choose(static_cast<long long>(s) + n, n, limits.max_candidates);
  guard(per_side > limits.max_candidates / std::max(per_side, 1LL), "too many sequences for enumeration");

  std::vector<DegreePair> target(n);
  std::function<bool(int, int, int)> pick = [&](int i, int in_left, int out_left) {
    if (i == n) {
      return in_left == 0 && out_left == 0 && is_k_anonymous(DegreeSequence(target), k);
    }
    for (int a = 0; a <= in_left && sigma[i].in + a <= xi; ++a) {
      for (int b = 0; b <= out_left && sigma[i].out + b <= xi; ++b) {
        target[i] = sigma[i] + DegreePair{a, b};
        if (pick(i + 1, in_left - a, out_left - b)) return true;
      }
    }
    return false;
  };
  if (!pick(0, s, s)) return std::nullopt;
  DegreeSequence result(target);
  return NumberSolution{result, demands_from_solution(sigma, result)};
}

bool is_nddcc_solution(const DegreeSequence& sigma, int s, const DegreeListFunction& tau,
                       const DegreeSequence& target) {
  if (sigma.size() != target.size() || tau.size() != sigma.size()) return false;
  long long in = 0;
  long long out = 0;
  for (int i = 0; i < sigma.size(); ++i) {
    if (!sigma[i].dominated_by(target[i]) || !tau.allows(i, target[i])) return false;
    in += target[i].in - sigma[i].in;
    out += target[i].out - sigma[i].out;
  }
  return in == s && out == s;
}

bool is_nddsc_bijection(const DegreeSequence& sigma, const DegreeSequence& phi,
                        const Bijection& pi) {
  const int n = sigma.size();
  if (phi.size() != n || static_cast<int>(pi.pi.size()) != n) return false;
  std::vector<char> hit(n, 0);
  for (int i = 0; i < n; ++i) {
    const int j = pi.pi[i];
    if (j < 0 || j >= n || hit[j]) return false;
    hit[j] = 1;
    if (!sigma[i].dominated_by(phi[j])) return false;
  }
  return true;
}

bool is_nda_solution(const DegreeSequence& sigma, int s, int k, int xi,
                     const DegreeSequence& target) {
  if (sigma.size() != target.size()) return false;
  long long in = 0;
  long long out = 0;
  for (int i = 0; i < sigma.size(); ++i) {
    if (!sigma[i].dominated_by(target[i]) || target[i].max_component() > xi) return false;
    in += target[i].in - sigma[i].in;
    out += target[i].out - sigma[i].out;
  }
  return in == s && out == s && is_k_anonymous(target, k);
}

}  // namespace degcomp
