#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sigma/limits.hpp"

namespace sigma {

// Outcome of one consistency suite. failures counts violated checks;
// first_failure describes the earliest one in deterministic order.
struct SuiteReport {
  std::string name;
  long long checks = 0;
  long long failures = 0;
  std::string first_failure;
  double millis = 0.0;

  bool passed() const { return failures == 0; }
};

// Badness is monotone under enlargement: for sampled connected graphs with
// <= 7 vertices, every pair D included in D' has bad(D) => bad(D').
SuiteReport suite_badness_monotonicity(std::uint64_t seed, bool quick);

// On K_{2,...,2} the living-link verdicts (both variants, never Unknown)
// match the closed form over every support pattern and level. inject_fault
// deliberately flips one expectation, for testing the harness itself.
SuiteReport suite_multipartite_equivalence(bool quick, bool inject_fault = false);

// Random joins: membership in the product matches the prediction from the
// factors' levels at n <= 2; at n = 3 predicted-No implies computed-No.
SuiteReport suite_join_formula(std::uint64_t seed, bool quick);

// The Sigma^1 complement polyhedron agrees pointwise with the negated
// critical-shift sweep over enumerated connected graphs and random
// characters.
SuiteReport suite_polyhedron_sweep(std::uint64_t seed, bool quick);

std::vector<SuiteReport> run_selftest_suites(std::uint64_t seed, bool quick,
                                             bool inject_fault = false);

}  // namespace sigma
