#include <algorithm>
#include <functional>
#include <numeric>

#include "degcomp/error.hpp"
#include "degcomp/numprob.hpp"

namespace degcomp {

DemandVector demands_from_solution(const DegreeSequence& sigma, const DegreeSequence& target) {
  if (sigma.size() != target.size()) {
    throw Error(Errc::length_mismatch, "sequence lengths differ");
  }
  DemandVector demands;
  demands.in.resize(sigma.size());
  demands.out.resize(sigma.size());
  for (int i = 0; i < sigma.size(); ++i) {
    const DegreePair delta = target[i] - sigma[i];
    if (delta.in < 0 || delta.out < 0) {
      throw Error(Errc::negative_demand, "target does not dominate entry " + std::to_string(i));
    }
    demands.in[i] = delta.in;
    demands.out[i] = delta.out;
  }
  return demands;
}

NddccTable::NddccTable(DegreeSequence sigma, DegreeListFunction tau, int max_budget)
    : sigma_(std::move(sigma)), tau_(std::move(tau)) {
  if (tau_.size() != sigma_.size()) {
    throw Error(Errc::length_mismatch, "degree lists do not cover the sequence");
  }
  if (max_budget < 0) throw Error(Errc::invalid_argument, "negative budget");
  const int n = sigma_.size();

  // Increments beyond the largest possible total are never reachable.
  long long most_in = 0;
  long long most_out = 0;
  for (int i = 0; i < n; ++i) {
    int best_in = -1;
    int best_out = -1;
    for (DegreePair p : tau_.allowed(i)) {
      if (!sigma_[i].dominated_by(p)) continue;
      best_in = std::max(best_in, p.in - sigma_[i].in);
      best_out = std::max(best_out, p.out - sigma_[i].out);
    }
    most_in += std::max(best_in, 0);
    most_out += std::max(best_out, 0);
  }
  limit_ = static_cast<int>(std::min<long long>({max_budget, most_in, most_out}));
  requested_ = max_budget;

  const std::size_t side = static_cast<std::size_t>(limit_) + 1;
  cells_.assign(static_cast<std::size_t>(n + 1) * side * side, 0);
  cells_[0] = 1;
  for (int i = 1; i <= n; ++i) {
    const std::size_t from = static_cast<std::size_t>(i - 1) * side * side;
    const std::size_t to = static_cast<std::size_t>(i) * side * side;
    for (int j = 0; j <= limit_; ++j) {
      for (int l = 0; l <= limit_; ++l) {
        if (!cells_[from + j * side + l]) continue;
        for (DegreePair p : tau_.allowed(i - 1)) {
          if (!sigma_[i - 1].dominated_by(p)) continue;
          const int nj = j + p.in - sigma_[i - 1].in;
          const int nl = l + p.out - sigma_[i - 1].out;
          if (nj <= limit_ && nl <= limit_) cells_[to + nj * side + nl] = 1;
        }
      }
    }
  }
}

bool NddccTable::feasible(int s) const {
  if (s < 0 || s > requested_) throw Error(Errc::invalid_argument, "budget outside table range");
  return s <= limit_ && reachable(sigma_.size(), s, s);
}

std::optional<NumberSolution> NddccTable::solution(int s) const {
  if (!feasible(s)) return std::nullopt;
  std::vector<DegreePair> target(sigma_.size());
  int j = s;
  int l = s;
  for (int i = sigma_.size(); i >= 1; --i) {
    bool found = false;
    for (DegreePair p : tau_.allowed(i - 1)) {
      if (!sigma_[i - 1].dominated_by(p)) continue;
      const int pj = j - (p.in - sigma_[i - 1].in);
      const int pl = l - (p.out - sigma_[i - 1].out);
      if (pj < 0 || pl < 0 || !reachable(i - 1, pj, pl)) continue;
      target[i - 1] = p;
      j = pj;
      l = pl;
      found = true;
      break;
    }
    if (!found) throw Error(Errc::invalid_argument, "inconsistent reachability table");
  }
  DegreeSequence result(std::move(target));
  DemandVector demands = demands_from_solution(sigma_, result);
  return NumberSolution{std::move(result), std::move(demands)};
}

std::optional<NumberSolution> solve_nddcc(const DegreeSequence& sigma, int s,
                                          const DegreeListFunction& tau) {
  if (s < 0) return std::nullopt;
  return NddccTable(sigma, tau, s).solution(s);
}

std::optional<Bijection> solve_nddsc(const DegreeSequence& sigma, const DegreeSequence& phi) {
  if (sigma.size() != phi.size()) throw Error(Errc::length_mismatch, "sequence lengths differ");
  const int n = sigma.size();
  std::vector<int> match_of_target(n, -1);
  std::vector<char> visited(n);

  std::function<bool(int)> augment = [&](int i) {
    for (int j = 0; j < n; ++j) {
      if (visited[j] || !sigma[i].dominated_by(phi[j])) continue;
      visited[j] = 1;
      if (match_of_target[j] < 0 || augment(match_of_target[j])) {
        match_of_target[j] = i;
        return true;
      }
    }
    return false;
  };

  for (int i = 0; i < n; ++i) {
    std::fill(visited.begin(), visited.end(), 0);
    if (!augment(i)) return std::nullopt;
  }
  Bijection result;
  result.pi.assign(n, -1);
  for (int j = 0; j < n; ++j) result.pi[match_of_target[j]] = j;
  return result;
}

DegreeSequence expand_plan(const DegreeSequence& sigma, const BlockTransitionPlan& plan) {
  std::map<DegreePair, std::vector<DegreePair>> destinations;
  for (const auto& [move, count] : plan.moves) {
    if (count < 0 || !move.first.dominated_by(move.second)) {
      throw Error(Errc::invalid_argument, "plan moves a tuple downwards");
    }
    auto& list = destinations[move.first];
    list.insert(list.end(), count, move.second);
  }
  std::map<DegreePair, std::size_t> next;
  std::vector<DegreePair> target(sigma.size());
  for (int i = 0; i < sigma.size(); ++i) {
    const auto it = destinations.find(sigma[i]);
    std::size_t& cursor = next[sigma[i]];
    if (it == destinations.end() || cursor >= it->second.size()) {
      throw Error(Errc::invalid_argument, "plan does not cover every tuple");
    }
    target[i] = it->second[cursor++];
  }
  for (const auto& [type, list] : destinations) {
    if (next[type] != list.size()) throw Error(Errc::invalid_argument, "plan moves absent tuples");
  }
  return DegreeSequence(std::move(target));
}

NdaInstance reduce_partition_to_nda(std::span<const int> a) {
  long long sum = 0;
  for (int value : a) {
    if (value <= 0) throw Error(Errc::invalid_argument, "partition elements must be positive");
    sum += value;
  }
  if (sum % 2 != 0) throw Error(Errc::odd_sum, "element sum " + std::to_string(sum) + " is odd");
  const long long half = sum / 2;
  for (int value : a) {
    // An element equal to half is its own witness and stays admissible.
    if (value > half) {
      throw Error(Errc::element_too_large,
                  "element " + std::to_string(value) + " exceeds " + std::to_string(half));
    }
  }
  std::vector<DegreePair> tuples;
  tuples.reserve(5 * a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    // Consecutive groups sit 2B apart, beyond the reach of budget B.
    const long long top = 2 * half * static_cast<long long>(i + 2);
    const int v = a[i];
    tuples.push_back({static_cast<int>(top - v), 0});
    tuples.push_back({static_cast<int>(top), 0});
    tuples.push_back({static_cast<int>(top), 0});
    tuples.push_back({static_cast<int>(top - v), v});
    tuples.push_back({static_cast<int>(top - v), v});
  }
  return NdaInstance{DegreeSequence(std::move(tuples)), static_cast<int>(half), 2};
}

}  // namespace degcomp
