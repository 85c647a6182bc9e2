#include <algorithm>
#include <array>
#include <boost/dynamic_bitset.hpp>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "degcomp/error.hpp"
#include "degcomp/numprob.hpp"

namespace degcomp {

namespace {

using Bits = boost::dynamic_bitset<>;

struct Group {
  std::vector<std::pair<int, int>> members;  // (type index, count)
  int size = 0;
  DegreePair top;
  int base_in = 0;
  int base_out = 0;
};

struct Partition {
  std::vector<Group> groups;
  int base_in = 0;
  int base_out = 0;
};

struct Component {
  std::vector<int> types;  // global type indices, ascending
  std::vector<Partition> partitions;
  std::vector<int> witness;  // per cost cell: partition index or -1
  std::vector<int> cells;    // reachable cost cells, ascending
};

// Sums of size * shift over groups, shift in [0, room], truncated at limit.
// prefix[g] holds the sums reachable with the first g groups.
std::vector<Bits> shift_sums(const std::vector<std::pair<int, int>>& size_room, int limit) {
  std::vector<Bits> prefix;
  prefix.reserve(size_room.size() + 1);
  Bits start(static_cast<std::size_t>(limit) + 1);
  start.set(0);
  prefix.push_back(start);
  for (const auto& [size, room] : size_room) {
    const Bits& current = prefix.back();
    Bits next = current;
    for (int shift = 1; shift <= room && static_cast<long long>(size) * shift <= limit; ++shift) {
      next |= current << (static_cast<std::size_t>(size) * shift);
    }
    prefix.push_back(std::move(next));
  }
  return prefix;
}

// Shifts reproducing `total` from the prefix table, smallest shift first from
// the last group backwards.
std::vector<int> pick_shifts(const std::vector<Bits>& prefix,
                             const std::vector<std::pair<int, int>>& size_room, int total) {
  std::vector<int> shifts(size_room.size(), 0);
  for (std::size_t g = size_room.size(); g-- > 0;) {
    const auto [size, room] = size_room[g];
    bool found = false;
    for (int shift = 0; shift <= room; ++shift) {
      const long long rest = total - static_cast<long long>(size) * shift;
      if (rest < 0) break;
      if (prefix[g].test(static_cast<std::size_t>(rest))) {
        shifts[g] = shift;
        total = static_cast<int>(rest);
        found = true;
        break;
      }
    }
    if (!found) throw Error(Errc::invalid_argument, "inconsistent shift table");
  }
  return shifts;
}

}  // namespace

struct NdaSolver::State {
  DegreeSequence sigma;
  int k = 1;
  int xi = 0;
  int limit = 0;
  std::vector<DegreePair> types;
  std::vector<int> counts;
  std::vector<Component> components;
  // choice[c][cell] = cost cell taken from component c to reach `cell`.
  std::vector<std::vector<int>> choice;
  std::vector<std::uint8_t> reachable;

  int side() const { return limit + 1; }
  int cell(int in, int out) const { return in * side() + out; }

  std::vector<std::pair<int, int>> rooms_in(const Partition& p) const {
    std::vector<std::pair<int, int>> result;
    for (const Group& g : p.groups) result.emplace_back(g.size, xi - g.top.in);
    return result;
  }
  std::vector<std::pair<int, int>> rooms_out(const Partition& p) const {
    std::vector<std::pair<int, int>> result;
    for (const Group& g : p.groups) result.emplace_back(g.size, xi - g.top.out);
    return result;
  }

  void build_components();
  void enumerate(Component& comp);
  void absorb(Component& comp, const Partition& p, std::set<std::vector<int>>& seen);
  void combine();
};

void NdaSolver::State::build_components() {
  const int m = static_cast<int>(types.size());
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      if (std::abs(types[a].in - types[b].in) <= limit &&
          std::abs(types[a].out - types[b].out) <= limit) {
        parent[find(a)] = find(b);
      }
    }
  }
  std::map<int, std::size_t> index_of_root;
  for (int a = 0; a < m; ++a) {
    const int root = find(a);
    auto [it, inserted] = index_of_root.emplace(root, components.size());
    if (inserted) components.emplace_back();
    components[it->second].types.push_back(a);
  }
}

void NdaSolver::State::absorb(Component& comp, const Partition& p,
                              std::set<std::vector<int>>& seen) {
  std::vector<int> signature{p.base_in, p.base_out};
  std::vector<std::array<int, 3>> shape;
  for (const Group& g : p.groups) shape.push_back({g.size, xi - g.top.in, xi - g.top.out});
  std::sort(shape.begin(), shape.end());
  for (const auto& s : shape) signature.insert(signature.end(), s.begin(), s.end());
  if (!seen.insert(signature).second) return;

  const Bits sums_in = shift_sums(rooms_in(p), limit - p.base_in).back();
  const Bits sums_out = shift_sums(rooms_out(p), limit - p.base_out).back();
  const int index = static_cast<int>(comp.partitions.size());
  bool useful = false;
  for (auto a = sums_in.find_first(); a != Bits::npos; a = sums_in.find_next(a)) {
    for (auto b = sums_out.find_first(); b != Bits::npos; b = sums_out.find_next(b)) {
      int& w = comp.witness[cell(p.base_in + static_cast<int>(a), p.base_out + static_cast<int>(b))];
      if (w < 0) {
        w = index;
        useful = true;
      }
    }
  }
  if (useful) comp.partitions.push_back(p);
}

void NdaSolver::State::enumerate(Component& comp) {
  const int m = static_cast<int>(comp.types.size());
  std::vector<int> remaining(m);
  int total = 0;
  for (int i = 0; i < m; ++i) {
    remaining[i] = counts[comp.types[i]];
    total += remaining[i];
  }
  comp.witness.assign(static_cast<std::size_t>(side()) * side(), -1);
  std::set<std::vector<int>> seen;
  Partition current;
  const int max_group = 2 * k - 1;

  // Groups are generated leader type by leader type; groups sharing a leader
  // appear in non-increasing lexicographic order of their count vectors.
  std::function<void(int, int, const std::vector<int>*)> place =
      [&](int left, int leader_prev, const std::vector<int>* vector_prev) {
        if (left == 0) {
          absorb(comp, current, seen);
          return;
        }
        if (left < k) return;
        int leader = 0;
        while (remaining[leader] == 0) ++leader;
        const bool same_leader = leader == leader_prev;

        std::vector<int> vec(m, 0);
        // Builds the count vector type by type, largest counts first.
        std::function<void(int, int, DegreePair, long long, long long)> build =
            [&](int idx, int size, DegreePair top, long long sum_in, long long sum_out) {
              const long long base_in = static_cast<long long>(size) * top.in - sum_in;
              const long long base_out = static_cast<long long>(size) * top.out - sum_out;
              if (current.base_in + base_in > limit || current.base_out + base_out > limit) return;
              if (idx == m) {
                if (size < k) return;
                if (same_leader && *vector_prev < vec) return;
                Group g;
                g.size = size;
                g.top = top;
                g.base_in = static_cast<int>(base_in);
                g.base_out = static_cast<int>(base_out);
                for (int i = leader; i < m; ++i) {
                  if (vec[i] > 0) g.members.emplace_back(comp.types[i], vec[i]);
                }
                for (int i = leader; i < m; ++i) remaining[i] -= vec[i];
                current.groups.push_back(g);
                current.base_in += g.base_in;
                current.base_out += g.base_out;
                const std::vector<int> chosen = vec;
                place(left - size, leader, &chosen);
                current.base_in -= g.base_in;
                current.base_out -= g.base_out;
                current.groups.pop_back();
                for (int i = leader; i < m; ++i) remaining[i] += vec[i];
                return;
              }
              const int lowest = idx == leader ? 1 : 0;
              const int highest = std::min(remaining[idx], max_group - size);
              const DegreePair type = types[comp.types[idx]];
              for (int c = highest; c >= lowest; --c) {
                vec[idx] = c;
                const DegreePair next_top =
                    c > 0 ? DegreePair{std::max(top.in, type.in), std::max(top.out, type.out)} : top;
                build(idx + 1, size + c, next_top, sum_in + static_cast<long long>(c) * type.in,
                      sum_out + static_cast<long long>(c) * type.out);
              }
              vec[idx] = 0;
            };
        build(leader, 0, types[comp.types[leader]], 0, 0);
      };
  place(total, -1, nullptr);

  for (int c = 0; c < side() * side(); ++c) {
    if (comp.witness[c] >= 0) comp.cells.push_back(c);
  }
}

void NdaSolver::State::combine() {
  const int cells_total = side() * side();
  std::vector<std::uint8_t> current(cells_total, 0);
  current[0] = 1;
  for (const Component& comp : components) {
    std::vector<std::uint8_t> next(cells_total, 0);
    std::vector<int> picked(cells_total, -1);
    for (int c = 0; c < cells_total; ++c) {
      if (!current[c]) continue;
      const int in = c / side();
      const int out = c % side();
      for (int q : comp.cells) {
        const int qin = in + q / side();
        const int qout = out + q % side();
        if (qin > limit || qout > limit) continue;
        const int target = cell(qin, qout);
        if (!next[target]) {
          next[target] = 1;
          picked[target] = q;
        }
      }
    }
    current = std::move(next);
    choice.push_back(std::move(picked));
  }
  reachable = std::move(current);
}

NdaSolver::NdaSolver(DegreeSequence sigma, int k, int xi, int max_budget)
    : state_(std::make_unique<State>()) {
  if (k < 1) throw Error(Errc::invalid_argument, "anonymity must be positive");
  if (max_budget < 0) throw Error(Errc::invalid_argument, "negative budget");
  if (sigma.max_component() > xi) {
    throw Error(Errc::invalid_argument, "sequence component exceeds the output bound");
  }
  State& st = *state_;
  st.sigma = std::move(sigma);
  st.k = k;
  st.xi = xi;
  st.limit = max_budget;
  for (const auto& [type, count] : st.sigma.multiplicities()) {
    st.types.push_back(type);
    st.counts.push_back(count);
  }
  st.build_components();
  for (Component& comp : st.components) st.enumerate(comp);
  st.combine();
}

NdaSolver::~NdaSolver() = default;
NdaSolver::NdaSolver(NdaSolver&&) noexcept = default;
NdaSolver& NdaSolver::operator=(NdaSolver&&) noexcept = default;

int NdaSolver::max_budget() const { return state_->limit; }

bool NdaSolver::feasible(int s) const {
  if (s < 0 || s > state_->limit) throw Error(Errc::invalid_argument, "budget outside solver range");
  return state_->reachable[state_->cell(s, s)] != 0;
}

std::optional<BlockTransitionPlan> NdaSolver::plan(int s) const {
  if (!feasible(s)) return std::nullopt;
  const State& st = *state_;
  BlockTransitionPlan result;
  result.xi = st.xi;
  int at = st.cell(s, s);
  for (std::size_t c = st.components.size(); c-- > 0;) {
    const Component& comp = st.components[c];
    const int q = st.choice[c][at];
    at = st.cell(at / st.side() - q / st.side(), at % st.side() - q % st.side());

    const Partition& p = comp.partitions[comp.witness[q]];
    const auto rooms_in = st.rooms_in(p);
    const auto rooms_out = st.rooms_out(p);
    const auto shifts_in = pick_shifts(shift_sums(rooms_in, st.limit - p.base_in), rooms_in,
                                       q / st.side() - p.base_in);
    const auto shifts_out = pick_shifts(shift_sums(rooms_out, st.limit - p.base_out), rooms_out,
                                        q % st.side() - p.base_out);
    for (std::size_t g = 0; g < p.groups.size(); ++g) {
      const Group& group = p.groups[g];
      const DegreePair destination = group.top + DegreePair{shifts_in[g], shifts_out[g]};
      for (const auto& [type, count] : group.members) {
        result.moves[{st.types[type], destination}] += count;
      }
      result.used.insert(destination);
    }
  }
  return result;
}

std::optional<NumberSolution> NdaSolver::solution(int s) const {
  auto p = plan(s);
  if (!p) return std::nullopt;
  DegreeSequence target = expand_plan(state_->sigma, *p);
  DemandVector demands = demands_from_solution(state_->sigma, target);
  return NumberSolution{std::move(target), std::move(demands)};
}

std::optional<NumberSolution> solve_nda(const DegreeSequence& sigma, int s, int k, int xi) {
  if (s < 0) return std::nullopt;
  return NdaSolver(sigma, k, xi, s).solution(s);
}

}  // namespace degcomp
