#include "ulrc/profile_opt.hpp"

#include <algorithm>
#include <numeric>

namespace ulrc {
namespace {

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

long long objective_of(const std::vector<int>& counts) {
  long long sum = 0;
  for (std::size_t j = 1; j <= counts.size(); ++j)
    sum += ceil_div(counts[j - 1], static_cast<long long>(j));
  return sum;
}

std::vector<int> padded(const std::vector<int>& v, std::size_t len) {
  std::vector<int> out = v;
  if (out.size() < len) out.resize(len, 0);
  return out;
}

}  // namespace

long long LocalityRequirement::total() const {
  return std::accumulate(counts.begin(), counts.end(), 0LL);
}

void LocalityRequirement::validate() const {
  if (counts.empty()) throw PreconditionError("locality requirement must not be empty");
  const long long k = total();
  for (int c : counts) {
    if (c < 0) throw PreconditionError("locality requirement: negative count");
    if (c > k) throw PreconditionError("locality requirement: count exceeds k");
  }
  if (k < 1) throw PreconditionError("locality requirement must request at least one symbol");
}

bool respects(const InfoLocalityProfile& profile, const LocalityRequirement& req) {
  profile.validate();
  req.validate();
  if (profile.total() != req.total()) return false;
  const std::size_t len = std::max(profile.counts.size(), req.counts.size());
  const auto p = padded(profile.counts, len);
  const auto r = padded(req.counts, len);
  long long psum = 0, rsum = 0;
  for (std::size_t i = 0; i < len; ++i) {
    psum += p[i];
    rsum += r[i];
    if (psum < rsum) return false;
  }
  return true;
}

long long objective(const InfoLocalityProfile& profile) {
  profile.validate();
  return objective_of(profile.counts);
}

std::pair<InfoLocalityProfile, GreedyTrace> greedy_optimal_profile(const LocalityRequirement& req) {
  req.validate();
  const int r = req.max_locality();
  std::vector<int> assigned(r, 0);
  GreedyTrace trace;
  long long carry = 0;
  for (int j = r; j >= 1; --j) {
    const long long total = req.counts[j - 1] + carry;
    const long long quotient = total / j;
    const long long remainder = total % j;
    assigned[j - 1] = static_cast<int>(j * quotient);
    trace.steps.push_back({j, carry, total, quotient, remainder, j * quotient});
    carry = remainder;
  }
  return {InfoLocalityProfile::trimmed(std::move(assigned)), std::move(trace)};
}

namespace {

void enumerate_profiles(const std::vector<int>& req, long long k, std::size_t depth,
                        long long cur_total, long long req_prefix, long long partial_objective,
                        std::vector<int>& work, ExhaustiveOptima& out) {
  if (depth == req.size()) {
    if (cur_total != k) return;
    if (partial_objective < out.objective) {
      out.objective = partial_objective;
      out.profiles.clear();
    }
    if (partial_objective == out.objective) out.profiles.push_back(work);
    return;
  }
  if (partial_objective > out.objective) return;
  const std::size_t j = depth + 1;
  const long long next_req_prefix = req_prefix + req[depth];
  const long long low = std::max(0LL, next_req_prefix - cur_total);
  const long long high = k - cur_total;
  for (long long v = low; v <= high; ++v) {
    work[depth] = static_cast<int>(v);
    enumerate_profiles(req, k, depth + 1, cur_total + v, next_req_prefix,
                       partial_objective + ceil_div(v, static_cast<long long>(j)), work, out);
  }
  work[depth] = 0;
}

}  // namespace

ExhaustiveOptima exhaustive_optima(const LocalityRequirement& req) {
  req.validate();
  if (req.total() > 14 || req.max_locality() > 6)
    throw BudgetExceeded("exhaustive profile search supports k <= 14 and r <= 6");
  ExhaustiveOptima out;
  out.objective = req.total() + 1;  // above any achievable objective
  std::vector<int> work(req.counts.size(), 0);
  enumerate_profiles(req.counts, req.total(), 0, 0, 0, 0, work, out);
  return out;
}

long long exhaustive_optimal_objective(const LocalityRequirement& req) {
  return exhaustive_optima(req).objective;
}

namespace {

void log_step(TransformLog& log, TransformLog::Step::Kind kind, int from, int to, long long amount,
              const std::vector<int>& profile) {
  TransformLog::Step step;
  step.kind = kind;
  step.from = from;
  step.to = to;
  step.amount = amount;
  step.objective_after = objective_of(profile);
  step.profile_after = profile;
  log.steps.push_back(std::move(step));
}

// k_j mod j symbols move from class j to the class named by the residue;
// the donor's ceil term drops by one and the target's rises by one.
void shift_residue(std::vector<int>& v, int j, TransformLog& log) {
  const int g = v[j - 1] % j;
  if (g == 0) return;
  v[j - 1] -= g;
  v[g - 1] += g;
  log_step(log, TransformLog::Step::Kind::ResidueShift, j, g, g, v);
}

}  // namespace

CanonicalizeResult canonicalize(const InfoLocalityProfile& profile,
                                const LocalityRequirement& req) {
  if (!respects(profile, req))
    throw PreconditionError("profile does not respect the locality requirement");
  auto [kstar_profile, trace] = greedy_optimal_profile(req);
  (void)trace;
  const long long best = objective_of(kstar_profile.counts);
  const long long have = objective(profile);
  if (have != best)
    throw PreconditionError("profile is not optimal for the requirement: objective " +
                            std::to_string(have) + " vs optimal " + std::to_string(best) +
                            " (gap " + std::to_string(have - best) + ")");

  // A respecting profile can only carry zeros beyond the requirement's
  // largest locality, so a common padded length covers both vectors.
  const int r = static_cast<int>(std::max<std::size_t>(req.counts.size(), profile.counts.size()));
  std::vector<int> work = padded(profile.counts, r);
  std::vector<int> target = padded(kstar_profile.counts, r);
  CanonicalizeResult out{kstar_profile, {}};

  // First make every class divisible by its locality, largest class
  // first; residues cascade strictly downward.
  for (int j = r; j >= 1; --j) shift_residue(work, j, out.log);

  // Then move surplus mass from lower donors up into the highest
  // deficient class until the greedy profile is reached.
  while (work != target) {
    int jm = 0;
    for (int j = r; j >= 1; --j) {
      if (work[j - 1] != target[j - 1]) {
        jm = j;
        break;
      }
    }
    if (work[jm - 1] > target[jm - 1])
      throw Error("canonicalize: highest differing class exceeds the greedy profile");
    while (work[jm - 1] < target[jm - 1]) {
      int jp = 0;
      for (int j = jm - 1; j >= 1; --j) {
        if (work[j - 1] > target[j - 1]) {
          jp = j;
          break;
        }
      }
      if (jp == 0) throw Error("canonicalize: no donor class below the deficient class");
      const long long deficit = target[jm - 1] - work[jm - 1];
      const long long surplus = work[jp - 1] - target[jp - 1];
      const long long amount = std::min(deficit, surplus);
      work[jm - 1] += static_cast<int>(amount);
      work[jp - 1] -= static_cast<int>(amount);
      log_step(out.log, TransformLog::Step::Kind::TransferUp, jp, jm, amount, work);
      if (deficit < surplus) shift_residue(work, jp, out.log);
    }
  }

  out.profile = InfoLocalityProfile::trimmed(std::move(work));
  return out;
}

}  // namespace ulrc
