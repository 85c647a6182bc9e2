#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <variant>
#include <vector>

namespace degcomp {

using Vertex = int;

// (indegree, outdegree). Ordered lexicographically, indegree first.
struct DegreePair {
  int in = 0;
  int out = 0;

  friend constexpr DegreePair operator+(DegreePair a, DegreePair b) {
    return {a.in + b.in, a.out + b.out};
  }
  friend constexpr DegreePair operator-(DegreePair a, DegreePair b) {
    return {a.in - b.in, a.out - b.out};
  }
  friend constexpr auto operator<=>(const DegreePair&, const DegreePair&) = default;

  // Componentwise order.
  constexpr bool dominated_by(DegreePair other) const {
    return in <= other.in && out <= other.out;
  }
  constexpr int max_component() const { return in > out ? in : out; }
};

std::ostream& operator<<(std::ostream& os, DegreePair p);

struct Arc {
  Vertex tail = 0;
  Vertex head = 0;

  friend constexpr auto operator<=>(const Arc&, const Arc&) = default;
};

std::ostream& operator<<(std::ostream& os, Arc a);

// Loop-free digraph without parallel arcs on vertices 0..n-1. Immutable once
// built; adjacency lists are kept sorted.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n);
  // Throws Error{loop_arc | duplicate_arc | vertex_out_of_range}.
  Digraph(int n, std::span<const Arc> arcs);

  int num_vertices() const { return n_; }
  int num_arcs() const { return m_; }
  // Number of ordered pairs (u, v), u != v, that are not arcs.
  long long num_non_arcs() const;

  bool has_arc(Vertex tail, Vertex head) const;
  const std::vector<Vertex>& out_neighbors(Vertex v) const { return out_[v]; }
  const std::vector<Vertex>& in_neighbors(Vertex v) const { return in_[v]; }

  int indegree(Vertex v) const { return static_cast<int>(in_[v].size()); }
  int outdegree(Vertex v) const { return static_cast<int>(out_[v].size()); }
  DegreePair degree(Vertex v) const { return {indegree(v), outdegree(v)}; }

  int max_indegree() const;
  int max_outdegree() const;
  int max_degree() const;

  // Sorted by (tail, head).
  std::vector<Arc> arcs() const;

  // Subgraph induced by `vertices`; vertex vertices[i] becomes i.
  Digraph induced(std::span<const Vertex> vertices) const;

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.n_ == b.n_ && a.out_ == b.out_;
  }

 private:
  void check_vertex(Vertex v) const;

  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
  std::vector<std::uint8_t> matrix_;
};

// Index-aligned list of degree pairs. Equality is entrywise; use
// same_multiset for the order-free comparison.
class DegreeSequence {
 public:
  DegreeSequence() = default;
  // Throws Error{invalid_argument} on a negative component.
  explicit DegreeSequence(std::vector<DegreePair> entries);

  int size() const { return static_cast<int>(entries_.size()); }
  bool empty() const { return entries_.empty(); }
  DegreePair operator[](int i) const { return entries_[i]; }
  const std::vector<DegreePair>& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  int max_indegree() const;
  int max_outdegree() const;
  int max_component() const;
  long long total_in() const;
  long long total_out() const;

  int multiplicity(DegreePair t) const;
  std::map<DegreePair, int> multiplicities() const;
  std::vector<DegreePair> sorted() const;
  bool same_multiset(const DegreeSequence& other) const;

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;

 private:
  std::vector<DegreePair> entries_;
};

// For every vertex a set of admissible degree pairs, all components within
// [0, bound]. Lists are stored sorted and duplicate-free.
class DegreeListFunction {
 public:
  DegreeListFunction() = default;
  // Throws Error{component_exceeds_bound} for a pair outside [0, bound].
  DegreeListFunction(std::vector<std::vector<DegreePair>> allowed, int bound);

  int size() const { return static_cast<int>(allowed_.size()); }
  int bound() const { return bound_; }
  std::span<const DegreePair> allowed(Vertex v) const { return allowed_[v]; }
  bool allows(Vertex v, DegreePair p) const;
  // Total number of listed pairs.
  long long encoded_size() const;

  friend bool operator==(const DegreeListFunction&, const DegreeListFunction&) = default;

 private:
  std::vector<std::vector<DegreePair>> allowed_;
  int bound_ = 0;
};

struct AnyProperty {};
struct ExactSequence {
  DegreeSequence target;
};
struct KAnonymous {
  int k = 1;
};
using SequenceProperty = std::variant<AnyProperty, ExactSequence, KAnonymous>;

DegreeSequence degree_sequence(const Digraph& d);

// Degree pair -> vertices with that degree, ascending.
std::map<DegreePair, std::vector<Vertex>> blocks(const Digraph& d);

// All t in {0..cap}^2 with deg(v) + t in tau(v), ascending. (0,0) is among
// them exactly when v is satisfied.
std::vector<DegreePair> vertex_types(const Digraph& d, const DegreeListFunction& tau,
                                     Vertex v, int cap);

bool is_satisfied(const Digraph& d, const DegreeListFunction& tau, Vertex v);
int count_unsatisfied(const Digraph& d, const DegreeListFunction& tau);

// Every pair occurring in sigma occurs at least k times.
bool is_k_anonymous(const DegreeSequence& sigma, int k);

bool check_property(const DegreeSequence& sigma, const SequenceProperty& property);

// Throws Error{loop_arc | duplicate_arc | vertex_out_of_range}; an arc already
// in d counts as a duplicate.
Digraph add_arcs(const Digraph& d, std::span<const Arc> arcs);

}  // namespace degcomp
