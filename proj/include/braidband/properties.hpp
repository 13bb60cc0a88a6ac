#ifndef BRAIDBAND_PROPERTIES_HPP
#define BRAIDBAND_PROPERTIES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "braidband/sweep.hpp"

namespace braidband {

struct PropertyOptions {
  int n = 3;
  int maxLen = 6;
  long long count = 1000;  // item count for seeded sweeps
  std::uint64_t seed = 20240810;
  ExecutionPolicy policy = ExecutionPolicy::Serial;
};

struct PropertyReport {
  std::string property;
  std::string mode;  // "exhaustive" or "seeded"
  SweepOutcome outcome;
};

/// Named bulk verification suites:
///   sl-markov    exhaustive: self-linking / exponent / component invariances
///                under conjugation and stabilization
///   lemma33      exhaustive: foliation counts of the Bennequin surface match
///                (n - m, -n + exp)
///   sqp-sharp    all-positive words satisfy sl = -chi(F_w) exactly
///   nf-vs-oracle normal-form equality agrees with handle-reduction
///                triviality of u v^{-1}
///   nf-sound     normal forms re-expand to their input and are left-weighted
///   garside      centrality of delta^n, tau period, complement involution,
///                cycling monotonicity
///   lemma52      sampled complexes have a small-valence non-fake vertex
///   ab-stab      stabilization preserves chi and drains to an all-aa complex
///   coherence    c-circle transition deltas, monotonicity, closure
///   sqp-brute    summit detection agrees with bounded conjugation search
std::vector<std::string> property_names();

PropertyReport run_property(const std::string& name, const PropertyOptions& opt);

}  // namespace braidband

#endif
