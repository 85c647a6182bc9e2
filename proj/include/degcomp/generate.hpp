#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "degcomp/core.hpp"
#include "degcomp/instance.hpp"

namespace degcomp {

// Seeded source with its own bounded sampling, so generated instances are
// identical across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  // Uniform in [lo, hi].
  int between(int lo, int hi);
  // True with probability p, resolved on a 2^-53 grid.
  bool chance(double p);

 private:
  std::mt19937_64 engine_;
};

struct GenOptions {
  Problem problem = Problem::ddconc;
  std::uint64_t seed = 0;
  int vertices = 6;
  double density = 0.2;
  int budget = 2;
  int anonymity = 2;
  int slack = 1;       // how far tau pairs reach above the current degree
  int list_size = 2;   // tau pairs drawn per vertex
  double perturb = 0.3;  // ddseqc: chance of moving one target unit
};

// Each ordered pair becomes an arc independently with probability density.
Digraph random_digraph(int n, double density, Rng& rng);

// Throws Error{invalid_argument} on negative sizes or a density outside [0, 1].
ProblemInstance generate_instance(const GenOptions& options);

}  // namespace degcomp
