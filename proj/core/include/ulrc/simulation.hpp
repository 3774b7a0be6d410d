#pragma once

#include <cstdint>
#include <map>

#include "ulrc/linear_code.hpp"

namespace ulrc {

/// Outcome of a seeded erasure simulation. Deterministic given the seed:
/// the PRNG is SplitMix64 and patterns are drawn by partial Fisher-Yates,
/// so identical seeds produce identical reports on every platform.
struct SimReport {
  std::uint64_t trials = 0;
  std::size_t erasures = 0;
  std::uint64_t seed = 0;
  std::uint64_t decode_successes = 0;
  /// Pattern size -> number of trials drawn at that size.
  std::map<std::size_t, std::uint64_t> pattern_size_histogram;
  /// Locality r -> number of erased symbols whose witness repair group
  /// survived intact and was charged r symbol reads.
  std::map<int, std::uint64_t> local_repair_histogram;
  /// Erased symbols whose witness repair group was itself hit.
  std::uint64_t locally_unrepairable = 0;

  bool operator==(const SimReport&) const = default;
};

/// Runs `trials` rounds: draw a random message, encode, erase a uniform
/// random pattern of the given size, attempt full erasure decoding, and
/// account per-symbol local repairability against the locality oracle's
/// witness groups.
SimReport run_erasure_simulation(const LinearCode& code, std::uint64_t trials,
                                 std::size_t erasures, std::uint64_t seed,
                                 LocalityMethod method = LocalityMethod::Auto,
                                 const Budget& budget = {});

}  // namespace ulrc
