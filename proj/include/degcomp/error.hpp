#pragma once

#include <stdexcept>
#include <string>

namespace degcomp {

enum class Errc {
  invalid_argument,
  vertex_out_of_range,
  loop_arc,
  duplicate_arc,
  component_exceeds_bound,
  length_mismatch,
  precondition_violated,
  unbalanced_demands,
  negative_demand,
  odd_sum,
  element_too_large,
  solution_touches_added_vertex,
  instance_too_large,
  parse_error,
  semantic_error,
};

const char* to_string(Errc code);

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace degcomp
