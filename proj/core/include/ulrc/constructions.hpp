#pragma once

#include <optional>
#include <vector>

#include "ulrc/bounds.hpp"
#include "ulrc/linear_code.hpp"

namespace ulrc {

/// Systematic (k+d-1, k, d) MDS code over GF(q): Reed-Solomon evaluation
/// at the first k+d-1 field elements in canonical index order, row-reduced
/// to place the identity on the first k coordinates. Every parity column
/// has full Hamming weight k. Requires q >= k + d - 1.
LinearCode systematic_mds(int k, int d, std::uint64_t q);

/// A parity-splitting code: identity on the information coordinates, one
/// global MDS parity split into per-group restrictions, and d-2 untouched
/// global parities.
struct PyramidCode {
  LinearCode code;
  /// The profile the caller asked for (localities are honored as upper
  /// bounds; a class whose size is not divisible by its locality gets one
  /// smaller final group).
  InfoLocalityProfile requested_profile;
  /// Per-coordinate design: counts of information symbols by their actual
  /// group size. Equals requested_profile exactly when j divides k_j for
  /// every class; this is the profile the locality oracle measures.
  InfoLocalityProfile designed_profile;
  int d_design = 0;

  struct Group {
    int locality_class = 0;              // the class the group was cut from
    std::vector<std::size_t> members;    // information coordinates
    std::size_t parity_coordinate = 0;   // the split parity covering them
  };
  std::vector<Group> groups;
};

/// Builds the (k + d - 2 + sum ceil(k_j/j), k, d) code for the profile.
/// Requires d >= 2 and q >= k + d - 1.
PyramidCode pyramid_unequal(const InfoLocalityProfile& profile, int d, std::uint64_t q);

/// Rank-metric precoded code with all-symbol locality: the message is
/// precoded with an (N, k) evaluation code of linearized polynomials at
/// GF(q)-independent points, the precode symbols are partitioned into
/// local groups of size j per class, and each group is extended by one
/// single-parity symbol over GF(q).
struct GabidulinLRC {
  LinearCode code;  // over GF(q^m)
  AllSymbolLocalityProfile intended_profile;
  std::size_t precode_length = 0;           // N
  std::vector<Elem> evaluation_points;      // g_1..g_N (polynomial-basis powers)
  std::vector<Elem> effective_points;       // per coordinate: the point whose
                                            // f-image the symbol carries
  std::vector<std::vector<std::size_t>> groups;  // coordinate sets, size j+1
  std::vector<std::size_t> group_of;             // coordinate -> group index
  long long design_distance = 0;
};

/// Requires (j+1) | n_j for every class (the generalization without
/// divisibility has no stated procedure and is rejected), k <= N, m >= N,
/// q >= ra + 1, and ra <= k.
GabidulinLRC gabidulin_lrc(int k, const AllSymbolLocalityProfile& nprofile, std::uint64_t q,
                           unsigned m);

/// Two-stage erasure decoder: surviving symbols are evaluations of the
/// message polynomial at known effective points; any k surviving
/// GF(q)-independent points determine the message. Returns nullopt when
/// no such subset survives.
std::optional<std::vector<Elem>> lrc_erasure_decode(const GabidulinLRC& lrc,
                                                    std::span<const Elem> received,
                                                    const ErasurePattern& pattern);

/// Designed repair group of coordinate i (bypasses the locality oracle).
/// nullopt for the unconstrained tail parities of a pyramid code.
std::optional<std::vector<std::size_t>> repair_group_of(const PyramidCode& pc, std::size_t i);
std::vector<std::size_t> repair_group_of(const GabidulinLRC& lrc, std::size_t i);

}  // namespace ulrc
