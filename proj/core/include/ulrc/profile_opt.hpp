#pragma once

#include <utility>
#include <vector>

#include "ulrc/linear_code.hpp"

namespace ulrc {

/// A locality requirement k~_1..k~_r: at least sum_{j<=i} k~_j information
/// symbols of locality at most i must be present, for each i. The code
/// dimension is self-defined as k = sum k~_j.
struct LocalityRequirement {
  std::vector<int> counts;

  long long total() const;
  int max_locality() const { return static_cast<int>(counts.size()); }
  void validate() const;

  bool operator==(const LocalityRequirement&) const = default;
};

/// Prefix-sum dominance plus total equality: profiles shorter than the
/// requirement are padded with zeros, and sum k_j must equal sum k~_j.
bool respects(const InfoLocalityProfile& profile, const LocalityRequirement& req);

/// sum_j ceil(k_j / j): the quantity a distance-optimal profile minimizes
/// (the information-locality distance bound is n - k + 2 - objective).
long long objective(const InfoLocalityProfile& profile);

/// Per-locality record of the greedy assignment, highest locality first:
/// total = k~_j + carry_in, assigned = j * quotient, carry_out = total mod j.
struct GreedyTrace {
  struct Step {
    int locality = 0;
    long long carry_in = 0;
    long long total = 0;
    long long quotient = 0;
    long long carry_out = 0;
    long long assigned = 0;
  };
  std::vector<Step> steps;  // locality r down to 1
};

/// The distance-optimal profile for the requirement: walking localities
/// from r down to 1, each class keeps the largest multiple of j not
/// exceeding its share and passes the residue down. Every assigned count
/// is divisible by its locality, and the result respects the requirement.
std::pair<InfoLocalityProfile, GreedyTrace> greedy_optimal_profile(const LocalityRequirement& req);

/// Minimum objective over every profile respecting the requirement, by
/// depth-first enumeration of prefix-feasible vectors. Independent of the
/// greedy logic. Requires sum k~_j <= 14 and r <= 6.
long long exhaustive_optimal_objective(const LocalityRequirement& req);

/// Same enumeration, also collecting every minimizing profile.
struct ExhaustiveOptima {
  long long objective = 0;
  std::vector<std::vector<int>> profiles;
};
ExhaustiveOptima exhaustive_optima(const LocalityRequirement& req);

/// Step log of the canonicalizing transform. ResidueShift moves
/// k_j mod j symbols from class j down to class (k_j mod j) and never
/// changes the objective; TransferUp moves symbols from a lower donor
/// class to a higher deficient class and never increases it.
struct TransformLog {
  struct Step {
    enum class Kind { ResidueShift, TransferUp };
    Kind kind = Kind::ResidueShift;
    int from = 0, to = 0;
    long long amount = 0;
    long long objective_after = 0;
    std::vector<int> profile_after;
  };
  std::vector<Step> steps;
};

struct CanonicalizeResult {
  InfoLocalityProfile profile;
  TransformLog log;
};

/// Rewrites an objective-optimal profile into the greedy profile through
/// objective-preserving moves. Rejects profiles that do not respect the
/// requirement, and reports the objective gap for non-optimal inputs
/// instead of transforming them.
CanonicalizeResult canonicalize(const InfoLocalityProfile& profile,
                                const LocalityRequirement& req);

}  // namespace ulrc
