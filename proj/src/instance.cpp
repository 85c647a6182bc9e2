#include "degcomp/instance.hpp"

#include <algorithm>

#include "degcomp/error.hpp"

namespace degcomp {

std::string_view to_string(Problem p) {
  switch (p) {
    case Problem::ddconc: return "ddconc";
    case Problem::ddseqc: return "ddseqc";
    case Problem::dda: return "dda";
  }
  return "unknown";
}

std::optional<Problem> problem_from_string(std::string_view name) {
  if (name == "ddconc") return Problem::ddconc;
  if (name == "ddseqc") return Problem::ddseqc;
  if (name == "dda") return Problem::dda;
  return std::nullopt;
}

ProblemInstance ProblemInstance::ddconc(Digraph d, int s, DegreeListFunction tau) {
  if (s < 0) throw Error(Errc::invalid_argument, "negative budget");
  if (tau.size() != d.num_vertices()) {
    throw Error(Errc::length_mismatch, "degree lists do not match the vertex count");
  }
  ProblemInstance inst;
  inst.problem = Problem::ddconc;
  inst.graph = std::move(d);
  inst.budget = s;
  inst.tau = std::move(tau);
  return inst;
}

ProblemInstance ProblemInstance::ddseqc(Digraph d, DegreeSequence target) {
  if (target.size() != d.num_vertices()) {
    throw Error(Errc::length_mismatch, "target sequence does not match the vertex count");
  }
  ProblemInstance inst;
  inst.problem = Problem::ddseqc;
  inst.graph = std::move(d);
  inst.target = std::move(target);
  return inst;
}

ProblemInstance ProblemInstance::dda(Digraph d, int k, int s) {
  if (s < 0) throw Error(Errc::invalid_argument, "negative budget");
  if (k < 1) throw Error(Errc::invalid_argument, "anonymity must be positive");
  ProblemInstance inst;
  inst.problem = Problem::dda;
  inst.graph = std::move(d);
  inst.budget = s;
  inst.anonymity = k;
  return inst;
}

std::optional<int> implied_budget(const ProblemInstance& instance) {
  if (instance.problem != Problem::ddseqc) return instance.budget;
  const long long in = instance.target.total_in() - instance.graph.num_arcs();
  const long long out = instance.target.total_out() - instance.graph.num_arcs();
  if (in != out || in < 0) return std::nullopt;
  return static_cast<int>(in);
}

int effective_budget(const ProblemInstance& instance) {
  const auto s = implied_budget(instance);
  if (!s) return -1;
  if (instance.problem == Problem::ddseqc) return *s;
  return static_cast<int>(std::min<long long>(*s, instance.graph.num_non_arcs()));
}

SequenceProperty property_of(const ProblemInstance& instance) {
  switch (instance.problem) {
    case Problem::ddconc: return AnyProperty{};
    case Problem::ddseqc: return ExactSequence{instance.target};
    case Problem::dda: return KAnonymous{instance.anonymity};
  }
  return AnyProperty{};
}

long long dda_delta_star_cap(const Digraph& d, int k, int s) {
  const long long delta = d.max_degree();
  return std::min(delta + s, 4LL * k * (delta + 2) * (delta + 2) + delta);
}

int delta_star_cap(const ProblemInstance& instance) {
  const Digraph& d = instance.graph;
  const long long order_cap = std::max(d.num_vertices() - 1, 0);
  const long long s = std::max(effective_budget(instance), 0);
  long long cap = 0;
  switch (instance.problem) {
    case Problem::ddconc:
      cap = std::min<long long>(instance.tau.bound(), d.max_degree() + s);
      break;
    case Problem::ddseqc:
      cap = instance.target.max_component();
      break;
    case Problem::dda:
      cap = dda_delta_star_cap(d, instance.anonymity, static_cast<int>(s));
      break;
  }
  return static_cast<int>(std::min(cap, order_cap));
}

}  // namespace degcomp
