#include "degcomp/core.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "degcomp/error.hpp"

namespace degcomp {

const char* to_string(Errc code) {
  switch (code) {
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::vertex_out_of_range: return "VertexOutOfRange";
    case Errc::loop_arc: return "LoopArc";
    case Errc::duplicate_arc: return "DuplicateArc";
    case Errc::component_exceeds_bound: return "ComponentExceedsBound";
    case Errc::length_mismatch: return "LengthMismatch";
    case Errc::precondition_violated: return "PreconditionViolated";
    case Errc::unbalanced_demands: return "UnbalancedDemands";
    case Errc::negative_demand: return "NegativeDemand";
    case Errc::odd_sum: return "OddSum";
    case Errc::element_too_large: return "ElementTooLarge";
    case Errc::solution_touches_added_vertex: return "SolutionTouchesAddedVertex";
    case Errc::instance_too_large: return "InstanceTooLarge";
    case Errc::parse_error: return "ParseError";
    case Errc::semantic_error: return "SemanticError";
  }
  return "Unknown";
}

std::ostream& operator<<(std::ostream& os, DegreePair p) {
  return os << '(' << p.in << ',' << p.out << ')';
}

std::ostream& operator<<(std::ostream& os, Arc a) {
  return os << '(' << a.tail << "->" << a.head << ')';
}

namespace {

std::string arc_text(Arc a) {
  std::ostringstream os;
  os << a;
  return os.str();
}

}  // namespace

Digraph::Digraph(int n) {
  if (n < 0) throw Error(Errc::invalid_argument, "negative vertex count");
  n_ = n;
  out_.assign(n, {});
  in_.assign(n, {});
  matrix_.assign(static_cast<std::size_t>(n) * n, 0);
}

Digraph::Digraph(int n, std::span<const Arc> arcs) : Digraph(n) {
  for (const Arc& a : arcs) {
    check_vertex(a.tail);
    check_vertex(a.head);
    if (a.tail == a.head) throw Error(Errc::loop_arc, "loop arc " + arc_text(a));
    auto& cell = matrix_[static_cast<std::size_t>(a.tail) * n_ + a.head];
    if (cell) throw Error(Errc::duplicate_arc, "duplicate arc " + arc_text(a));
    cell = 1;
    out_[a.tail].push_back(a.head);
    in_[a.head].push_back(a.tail);
    ++m_;
  }
  for (auto& list : out_) std::sort(list.begin(), list.end());
  for (auto& list : in_) std::sort(list.begin(), list.end());
}

void Digraph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_) {
    throw Error(Errc::vertex_out_of_range,
                "vertex " + std::to_string(v) + " outside 0.." + std::to_string(n_ - 1));
  }
}

long long Digraph::num_non_arcs() const {
  return static_cast<long long>(n_) * (n_ - 1) - m_;
}

bool Digraph::has_arc(Vertex tail, Vertex head) const {
  if (tail < 0 || head < 0 || tail >= n_ || head >= n_) return false;
  return matrix_[static_cast<std::size_t>(tail) * n_ + head] != 0;
}

int Digraph::max_indegree() const {
  int best = 0;
  for (Vertex v = 0; v < n_; ++v) best = std::max(best, indegree(v));
  return best;
}

int Digraph::max_outdegree() const {
  int best = 0;
  for (Vertex v = 0; v < n_; ++v) best = std::max(best, outdegree(v));
  return best;
}

int Digraph::max_degree() const { return std::max(max_indegree(), max_outdegree()); }

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> result;
  result.reserve(m_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : out_[u]) result.push_back({u, v});
  }
  return result;
}

Digraph Digraph::induced(std::span<const Vertex> vertices) const {
  std::vector<int> position(n_, -1);
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i) {
    check_vertex(vertices[i]);
    if (position[vertices[i]] != -1) {
      throw Error(Errc::invalid_argument, "repeated vertex in induced subgraph");
    }
    position[vertices[i]] = i;
  }
  std::vector<Arc> kept;
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i) {
    for (Vertex w : out_[vertices[i]]) {
      if (position[w] != -1) kept.push_back({i, position[w]});
    }
  }
  return Digraph(static_cast<int>(vertices.size()), kept);
}

DegreeSequence::DegreeSequence(std::vector<DegreePair> entries) : entries_(std::move(entries)) {
  for (DegreePair p : entries_) {
    if (p.in < 0 || p.out < 0) {
      throw Error(Errc::invalid_argument, "negative component in degree sequence");
    }
  }
}

int DegreeSequence::max_indegree() const {
  int best = 0;
  for (DegreePair p : entries_) best = std::max(best, p.in);
  return best;
}

int DegreeSequence::max_outdegree() const {
  int best = 0;
  for (DegreePair p : entries_) best = std::max(best, p.out);
  return best;
}

int DegreeSequence::max_component() const { return std::max(max_indegree(), max_outdegree()); }

long long DegreeSequence::total_in() const {
  long long sum = 0;
  for (DegreePair p : entries_) sum += p.in;
  return sum;
}

long long DegreeSequence::total_out() const {
  long long sum = 0;
  for (DegreePair p : entries_) sum += p.out;
  return sum;
}

int DegreeSequence::multiplicity(DegreePair t) const {
  return static_cast<int>(std::count(entries_.begin(), entries_.end(), t));
}

std::map<DegreePair, int> DegreeSequence::multiplicities() const {
  std::map<DegreePair, int> counts;
  for (DegreePair p : entries_) ++counts[p];
  return counts;
}

std::vector<DegreePair> DegreeSequence::sorted() const {
  std::vector<DegreePair> copy = entries_;
  std::sort(copy.begin(), copy.end());
  return copy;
}

bool DegreeSequence::same_multiset(const DegreeSequence& other) const {
  return size() == other.size() && sorted() == other.sorted();
}

DegreeListFunction::DegreeListFunction(std::vector<std::vector<DegreePair>> allowed, int bound)
    : allowed_(std::move(allowed)), bound_(bound) {
  if (bound < 0) throw Error(Errc::invalid_argument, "negative degree bound");
  for (std::size_t v = 0; v < allowed_.size(); ++v) {
    auto& list = allowed_[v];
    for (DegreePair p : list) {
      if (p.in < 0 || p.out < 0 || p.in > bound || p.out > bound) {
        std::ostringstream os;
        os << "pair " << p << " of vertex " << v << " outside [0, " << bound << "]";
        throw Error(Errc::component_exceeds_bound, os.str());
      }
    }
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
}

bool DegreeListFunction::allows(Vertex v, DegreePair p) const {
  const auto& list = allowed_[v];
  return std::binary_search(list.begin(), list.end(), p);
}

long long DegreeListFunction::encoded_size() const {
  long long total = 0;
  for (const auto& list : allowed_) total += static_cast<long long>(list.size());
  return total;
}

DegreeSequence degree_sequence(const Digraph& d) {
  std::vector<DegreePair> entries(d.num_vertices());
  for (Vertex v = 0; v < d.num_vertices(); ++v) entries[v] = d.degree(v);
  return DegreeSequence(std::move(entries));
}

std::map<DegreePair, std::vector<Vertex>> blocks(const Digraph& d) {
  std::map<DegreePair, std::vector<Vertex>> result;
  for (Vertex v = 0; v < d.num_vertices(); ++v) result[d.degree(v)].push_back(v);
  return result;
}

std::vector<DegreePair> vertex_types(const Digraph& d, const DegreeListFunction& tau,
                                     Vertex v, int cap) {
  const DegreePair deg = d.degree(v);
  std::vector<DegreePair> types;
  for (DegreePair p : tau.allowed(v)) {
    if (!deg.dominated_by(p)) continue;
    const DegreePair t = p - deg;
    if (t.in <= cap && t.out <= cap) types.push_back(t);
  }
  // Subtracting a fixed pair preserves the lexicographic order of tau(v).
  return types;
}

bool is_satisfied(const Digraph& d, const DegreeListFunction& tau, Vertex v) {
  return tau.allows(v, d.degree(v));
}

int count_unsatisfied(const Digraph& d, const DegreeListFunction& tau) {
  int count = 0;
  for (Vertex v = 0; v < d.num_vertices(); ++v) count += is_satisfied(d, tau, v) ? 0 : 1;
  return count;
}

bool is_k_anonymous(const DegreeSequence& sigma, int k) {
  for (const auto& [pair, count] : sigma.multiplicities()) {
    if (count < k) return false;
  }
  return true;
}

bool check_property(const DegreeSequence& sigma, const SequenceProperty& property) {
  struct Visitor {
    const DegreeSequence& sigma;
    bool operator()(const AnyProperty&) const { return true; }
    bool operator()(const ExactSequence& p) const { return sigma.same_multiset(p.target); }
    bool operator()(const KAnonymous& p) const { return is_k_anonymous(sigma, p.k); }
  };
  return std::visit(Visitor{sigma}, property);
}

Digraph add_arcs(const Digraph& d, std::span<const Arc> arcs) {
  std::vector<Arc> all = d.arcs();
  all.insert(all.end(), arcs.begin(), arcs.end());
  return Digraph(d.num_vertices(), all);
}

}  // namespace degcomp
