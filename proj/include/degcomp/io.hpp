#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "degcomp/error.hpp"
#include "degcomp/instance.hpp"
#include "degcomp/kernel.hpp"
#include "degcomp/numprob.hpp"

namespace degcomp {

// Malformed JSON. line() is 1-based.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message)
      : Error(Errc::parse_error, "line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

// Well-formed JSON describing an invalid object. field() names the offending
// value, e.g. "arcs[3]".
class SemanticError : public Error {
 public:
  SemanticError(int line, std::string field, const std::string& message)
      : Error(Errc::semantic_error,
              "line " + std::to_string(line) + ", field " + field + ": " + message),
        line_(line),
        field_(std::move(field)) {}
  int line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }

 private:
  int line_;
  std::string field_;
};

// Canonical instance text: fixed key order, sorted arcs and lists, one key
// per line. parse_instance(emit_instance(x)) == x.
std::string emit_instance(const ProblemInstance& instance);
ProblemInstance parse_instance(std::string_view text);

struct SolutionFile {
  Problem problem = Problem::ddconc;
  std::optional<Solution> solution;  // nullopt for a "no" decision
};

std::string emit_solution(Problem problem, const std::optional<Solution>& solution);
SolutionFile parse_solution(std::string_view text);

std::string emit_kernel(const KernelResult& result);

// Raw input of the number-problem solvers.
struct SequenceFile {
  std::string problem;  // "nddcc", "nddsc" or "nda"
  DegreeSequence sequence;
  int budget = 0;                 // nddcc, nda
  int anonymity = 1;              // nda
  std::optional<int> bound;       // nddcc: list bound; nda: largest output value
  DegreeListFunction lists;       // nddcc
  DegreeSequence target;          // nddsc
};

std::string emit_sequence_file(const SequenceFile& file);
SequenceFile parse_sequence_file(std::string_view text);

std::string emit_number_solution(const std::string& problem,
                                 const std::optional<NumberSolution>& solution);
std::string emit_bijection(const std::optional<Bijection>& bijection);

}  // namespace degcomp
