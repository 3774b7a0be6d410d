#pragma once

#include <vector>

#include "ulrc/linear_code.hpp"

namespace ulrc {

/// A distance bound together with every intermediate used to assemble it,
/// so reports can be audited: bound = n - k + 2 - sum(terms).
struct BoundReport {
  enum class Kind { Gopalan, Info, AllSymbol };

  Kind kind = Kind::Gopalan;
  long long n = 0, k = 0;
  std::vector<int> profile;            // echo of the input profile (or {r} for Gopalan)
  std::vector<long long> terms;        // the ceil summands, in order
  long long bound = 0;

  // AllSymbol intermediates: k'_j = n_j - ceil(n_j / (j+1)), the pivot
  // localities r' and r.
  std::vector<long long> k_prime;
  int r_prime = 0;
  int r = 0;
};

/// d <= n - k - ceil(k/r) + 2 for a code with information locality r.
long long gopalan_bound(long long n, long long k, long long r);
BoundReport gopalan_bound_report(long long n, long long k, long long r);

/// d <= n - k - sum_j ceil(k_j / j) + 2 for information locality profile
/// {k_1..k_r}.
BoundReport unequal_info_bound(long long n, long long k, const InfoLocalityProfile& profile);

/// The all-symbol-profile distance bound. Raises PreconditionError when r
/// is undefined (no locality j in [r'+1, ra] has n_j >= 2).
BoundReport unequal_all_symbol_bound(long long n, long long k,
                                     const AllSymbolLocalityProfile& profile);

/// Greedy construction of a coordinate set S with rank(S) = k - 1, built
/// by repeatedly absorbing the repair neighbourhood of a smallest-locality
/// coordinate outside S (ties broken by lowest index). By Fact-style
/// counting, |S| <= n - d for the code's distance d, with equality on
/// distance-optimal constructed codes.
struct WitnessSet {
  std::vector<std::size_t> coordinates;  // sorted
  std::size_t rank = 0;

  struct Step {
    std::size_t picked = 0;      // the chosen coordinate
    int locality = 0;            // its locality
    std::size_t size_delta = 0;  // s_i = |S_i| - |S_{i-1}|
    std::size_t rank_delta = 0;  // t_i = rank(S_i) - rank(S_{i-1})
    bool truncated = false;      // true when only a subset of the
                                 // neighbourhood was added to stop at k-1
  };
  std::vector<Step> log;
};

WitnessSet witness_set(const LinearCode& code, LocalityMethod method = LocalityMethod::Auto,
                       const Budget& budget = {});

}  // namespace ulrc
