#include "ulrc/bounds.hpp"

#include <algorithm>
#include <set>

#include "ulrc/linalg.hpp"

namespace ulrc {
namespace {

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

}  // namespace

long long gopalan_bound(long long n, long long k, long long r) {
  return gopalan_bound_report(n, k, r).bound;
}

BoundReport gopalan_bound_report(long long n, long long k, long long r) {
  if (r < 1 || r > k || k > n) throw PreconditionError("gopalan_bound requires 1 <= r <= k <= n");
  BoundReport report;
  report.kind = BoundReport::Kind::Gopalan;
  report.n = n;
  report.k = k;
  report.profile = {static_cast<int>(r)};
  report.terms = {ceil_div(k, r)};
  report.bound = n - k - report.terms[0] + 2;
  return report;
}

BoundReport unequal_info_bound(long long n, long long k, const InfoLocalityProfile& profile) {
  profile.validate();
  if (profile.counts.empty()) throw PreconditionError("empty information locality profile");
  if (profile.total() != k)
    throw PreconditionError("information locality profile must sum to k");
  if (k > n) throw PreconditionError("k must not exceed n");

  BoundReport report;
  report.kind = BoundReport::Kind::Info;
  report.n = n;
  report.k = k;
  report.profile = profile.counts;
  long long sum = 0;
  for (std::size_t j = 1; j <= profile.counts.size(); ++j) {
    const long long term = ceil_div(profile.counts[j - 1], static_cast<long long>(j));
    report.terms.push_back(term);
    sum += term;
  }
  report.bound = n - k - sum + 2;
  return report;
}

BoundReport unequal_all_symbol_bound(long long n, long long k,
                                     const AllSymbolLocalityProfile& profile) {
  profile.validate();
  if (profile.counts.empty()) throw PreconditionError("empty all-symbol locality profile");
  if (profile.total() != n) throw PreconditionError("all-symbol locality profile must sum to n");
  const int ra = profile.max_locality();
  if (ra > k)
    throw PreconditionError("maximum locality must not exceed k for the all-symbol bound");

  BoundReport report;
  report.kind = BoundReport::Kind::AllSymbol;
  report.n = n;
  report.k = k;
  report.profile = profile.counts;

  for (int j = 1; j <= ra; ++j) {
    const long long nj = profile.counts[j - 1];
    report.k_prime.push_back(nj - ceil_div(nj, j + 1));
  }

  // r' is the last locality whose cumulative k' stays below k; the empty
  // prefix has sum 0 < k, so r' = 0 when even the first class reaches k.
  int r_prime = 0;
  long long prefix = 0;
  for (int i = 1; i <= ra; ++i) {
    prefix += report.k_prime[i - 1];
    if (prefix < k) r_prime = i;
  }
  report.r_prime = r_prime;

  int r = 0;
  for (int j = r_prime + 1; j <= ra; ++j) {
    if (profile.counts[j - 1] >= 2) {
      r = j;
      break;
    }
  }
  if (r == 0)
    throw PreconditionError(
        "all-symbol bound undefined: no locality j in [" + std::to_string(r_prime + 1) + ", " +
        std::to_string(ra) + "] has n_j >= 2, so min{r'+1 <= j <= ra : n_j >= 2} is empty");
  report.r = r;

  long long sum_terms = 0, sum_k_prime = 0;
  for (int j = 1; j <= r - 1; ++j) {
    const long long term = ceil_div(profile.counts[j - 1], j + 1);
    report.terms.push_back(term);
    sum_terms += term;
    sum_k_prime += report.k_prime[j - 1];
  }
  const long long last = ceil_div(k - sum_k_prime, r);
  report.terms.push_back(last);
  report.bound = n - k + 2 - sum_terms - last;
  return report;
}

WitnessSet witness_set(const LinearCode& code, LocalityMethod method, const Budget& budget) {
  const std::size_t n = code.length(), k = code.dimension();
  const auto report = locality_all(code, method, budget);
  for (std::size_t i = 0; i < n; ++i)
    if (!report.coords[i].recoverable)
      throw PreconditionError("coordinate " + std::to_string(i) +
                              " is unrecoverable; witness construction undefined");

  WitnessSet out;
  std::set<std::size_t> members;
  EchelonBasis span(ExtOps{code.field().get()}, k);

  while (span.rank() + 2 <= k) {
    // Smallest-locality coordinate outside S, lowest index on ties.
    std::size_t pick = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (members.count(i)) continue;
      if (pick == n || report.coords[i].locality < report.coords[pick].locality) pick = i;
    }
    if (pick == n) break;  // every coordinate collected; rank is k

    std::vector<std::size_t> neighbourhood = report.coords[pick].repair_group;
    neighbourhood.push_back(pick);
    std::sort(neighbourhood.begin(), neighbourhood.end());

    std::vector<std::size_t> fresh;
    for (std::size_t c : neighbourhood)
      if (!members.count(c)) fresh.push_back(c);

    EchelonBasis probe = span;
    for (std::size_t c : fresh) probe.absorb(code.column(c));

    WitnessSet::Step step;
    step.picked = pick;
    step.locality = report.coords[pick].locality;
    const std::size_t rank_before = span.rank();

    if (probe.rank() < k) {
      for (std::size_t c : fresh) {
        span.absorb(code.column(c));
        members.insert(c);
      }
      step.size_delta = fresh.size();
    } else {
      // Adding the full neighbourhood would reach rank k; add members in
      // index order and stop at rank k - 1.
      std::size_t added = 0;
      for (std::size_t c : fresh) {
        if (span.rank() == k - 1) break;
        span.absorb(code.column(c));
        members.insert(c);
        ++added;
      }
      step.size_delta = added;
      step.truncated = true;
    }
    step.rank_delta = span.rank() - rank_before;
    out.log.push_back(step);
  }

  out.coordinates.assign(members.begin(), members.end());
  out.rank = span.rank();
  return out;
}

}  // namespace ulrc
