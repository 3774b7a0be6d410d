#include "ulrc/simulation.hpp"

#include "ulrc/rng.hpp"

namespace ulrc {

SimReport run_erasure_simulation(const LinearCode& code, std::uint64_t trials,
                                 std::size_t erasures, std::uint64_t seed, LocalityMethod method,
                                 const Budget& budget) {
  const auto& F = *code.field();
  const std::size_t n = code.length(), k = code.dimension();
  if (erasures > n) throw PreconditionError("cannot erase more symbols than the code has");

  const auto locality = locality_all(code, method, budget);

  SimReport report;
  report.trials = trials;
  report.erasures = erasures;
  report.seed = seed;

  SplitMix64 rng(seed);
  std::vector<Elem> message(k);
  for (std::uint64_t t = 0; t < trials; ++t) {
    for (std::size_t j = 0; j < k; ++j) message[j] = static_cast<Elem>(rng.below(F.order()));
    const auto codeword = encode(code, message);

    auto drawn = rng.sample_distinct(n, erasures);
    const auto pattern = ErasurePattern::of(std::move(drawn), n);
    ++report.pattern_size_histogram[pattern.size()];

    const auto decoded = erasure_decode(code, codeword, pattern);
    if (decoded && *decoded == message) ++report.decode_successes;

    for (std::size_t i : pattern.erased) {
      const auto& loc = locality.coords[i];
      if (!loc.recoverable) {
        ++report.locally_unrepairable;
        continue;
      }
      bool group_intact = true;
      for (std::size_t other : loc.repair_group) {
        if (pattern.contains(other)) {
          group_intact = false;
          break;
        }
      }
      if (group_intact)
        ++report.local_repair_histogram[loc.locality];
      else
        ++report.locally_unrepairable;
    }
  }
  return report;
}

}  // namespace ulrc
