#pragma once

// Randomised and exhaustive property suites shared by the unit tests and the
// acceptance runner.

#include <cstdint>
#include <string>

namespace props {

struct Outcome {
  long trials = 0;
  long failures = 0;
  std::string note;  // first failure, or suite-specific statistics
};

/// Random hosts (n <= 9) and roster patterns, rooted at random host vertices
/// when the arity fits: every returned model validates.
Outcome models_validate(long trials, std::uint64_t seed);

/// Random proper colourings: a swap keeps the colouring proper, swapping the
/// resulting chain restores it, and vertices off the chain keep their colour.
Outcome kempe_swap_involution(long trials, std::uint64_t seed);

/// Random colourings with distinct root colours: whenever every consecutive
/// pair of roots shares a Kempe chain, a rooted cycle model inside the roots'
/// colour classes is returned and validates; otherwise the reported index is the
/// first failing pair. The note records how often the fallback region was used.
Outcome kempe_cycle_models(long trials, std::uint64_t seed);

/// emit/parse identity for every representative with n <= 6 and for every
/// labelled graph with n <= 5.
Outcome graph6_round_trip();

/// canonical_form is unchanged by random relabelling.
Outcome canonical_invariance(long trials, std::uint64_t seed);

}  // namespace props
