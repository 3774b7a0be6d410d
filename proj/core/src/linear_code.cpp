#include "ulrc/linear_code.hpp"

#include <algorithm>
#include <numeric>

#include "ulrc/linalg.hpp"

namespace ulrc {
namespace {

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t t = c.size();
  for (std::size_t i = t; i-- > 0;) {
    if (c[i] != i + n - t) {
      ++c[i];
      for (std::size_t j = i + 1; j < t; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::uint64_t pow_capped(std::uint64_t base, std::size_t exp, std::uint64_t cap) {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (v > cap / base) return cap + 1;
    v *= base;
  }
  return v;
}

void validate_counts(const std::vector<int>& counts, const char* what) {
  for (int c : counts)
    if (c < 0) throw PreconditionError(std::string(what) + ": negative count");
  if (!counts.empty() && counts.back() == 0)
    throw PreconditionError(std::string(what) + ": trailing zero class");
}

}  // namespace

long long InfoLocalityProfile::total() const {
  return std::accumulate(counts.begin(), counts.end(), 0LL);
}

void InfoLocalityProfile::validate() const { validate_counts(counts, "information locality profile"); }

InfoLocalityProfile InfoLocalityProfile::trimmed(std::vector<int> counts) {
  while (!counts.empty() && counts.back() == 0) counts.pop_back();
  InfoLocalityProfile p{std::move(counts)};
  p.validate();
  return p;
}

long long AllSymbolLocalityProfile::total() const {
  return std::accumulate(counts.begin(), counts.end(), 0LL);
}

void AllSymbolLocalityProfile::validate() const {
  validate_counts(counts, "all-symbol locality profile");
}

AllSymbolLocalityProfile AllSymbolLocalityProfile::trimmed(std::vector<int> counts) {
  while (!counts.empty() && counts.back() == 0) counts.pop_back();
  AllSymbolLocalityProfile p{std::move(counts)};
  p.validate();
  return p;
}

ErasurePattern ErasurePattern::of(std::vector<std::size_t> indices, std::size_t n) {
  std::sort(indices.begin(), indices.end());
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] >= n) throw PreconditionError("erasure index out of range");
    if (i > 0 && indices[i] == indices[i - 1])
      throw PreconditionError("duplicate erasure index");
  }
  return ErasurePattern{std::move(indices)};
}

bool ErasurePattern::contains(std::size_t i) const {
  return std::binary_search(erased.begin(), erased.end(), i);
}

LinearCode::LinearCode(FieldPtr field, std::vector<std::vector<Elem>> columns,
                       std::optional<std::vector<std::size_t>> systematic_positions)
    : field_(std::move(field)), columns_(std::move(columns)),
      systematic_positions_(std::move(systematic_positions)) {
  if (!field_) throw PreconditionError("null field spec");
  if (columns_.empty()) throw PreconditionError("code must have at least one coordinate");
  k_ = columns_[0].size();
  if (k_ == 0) throw PreconditionError("code dimension must be at least 1");
  for (const auto& col : columns_) {
    if (col.size() != k_) throw PreconditionError("columns have inconsistent length");
    for (Elem v : col)
      if (!field_->element_in_range(v)) throw PreconditionError("column entry out of field range");
  }
  EchelonBasis basis(ExtOps{field_.get()}, k_);
  for (const auto& col : columns_) {
    basis.absorb(col);
    if (basis.rank() == k_) break;
  }
  if (basis.rank() != k_) throw PreconditionError("generator columns do not have rank k");
  if (systematic_positions_) {
    if (systematic_positions_->size() != k_)
      throw PreconditionError("systematic position list must have length k");
    for (std::size_t j = 0; j < k_; ++j) {
      const std::size_t pos = (*systematic_positions_)[j];
      if (pos >= columns_.size()) throw PreconditionError("systematic position out of range");
      for (std::size_t r = 0; r < k_; ++r) {
        const Elem want = (r == j) ? 1 : 0;
        if (columns_[pos][r] != want)
          throw PreconditionError("systematic position is not a unit column");
      }
    }
  }
}

std::vector<Elem> encode(const LinearCode& code, std::span<const Elem> message) {
  const auto& F = *code.field();
  if (message.size() != code.dimension())
    throw PreconditionError("message length does not match code dimension");
  for (Elem v : message)
    if (!F.element_in_range(v)) throw PreconditionError("message symbol out of field range");
  std::vector<Elem> cw(code.length(), 0);
  for (std::size_t i = 0; i < code.length(); ++i) {
    const auto& col = code.column(i);
    Elem acc = 0;
    for (std::size_t j = 0; j < code.dimension(); ++j)
      acc = F.add(acc, F.mul(message[j], col[j]));
    cw[i] = acc;
  }
  return cw;
}

int min_distance(const LinearCode& code, const Budget& budget) {
  const std::size_t n = code.length(), k = code.dimension();
  std::uint64_t rank_ops = 0;
  std::vector<bool> erased(n);
  for (std::size_t t = 1; t + k <= n + 1; ++t) {
    std::vector<std::size_t> comb(t);
    for (std::size_t i = 0; i < t; ++i) comb[i] = i;
    do {
      if (++rank_ops > budget.max_rank_ops)
        throw BudgetExceeded("min_distance: rank computation budget exceeded");
      std::fill(erased.begin(), erased.end(), false);
      for (std::size_t i : comb) erased[i] = true;
      EchelonBasis basis(ExtOps{code.field().get()}, k);
      for (std::size_t i = 0; i < n; ++i) {
        if (erased[i]) continue;
        basis.absorb(code.column(i));
        if (basis.rank() == k) break;
      }
      if (basis.rank() < k) return static_cast<int>(t);
    } while (next_combination(comb, n));
  }
  throw Error("min_distance: no erasure pattern below the Singleton bound defeats the code");
}

int min_distance_by_enumeration(const LinearCode& code, const Budget& budget) {
  const auto& F = *code.field();
  const std::size_t n = code.length(), k = code.dimension();
  const std::uint64_t q = F.order();
  const std::uint64_t total = pow_capped(q, k, budget.max_messages);
  if (total > budget.max_messages)
    throw BudgetExceeded("min_distance_by_enumeration: q^k exceeds the message budget");

  // Rows of the generator matrix, for incremental codeword updates.
  std::vector<std::vector<Elem>> rows(k, std::vector<Elem>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j) rows[j][i] = code.column(i)[j];

  std::vector<Elem> digits(k, 0), cw(n, 0);
  int best = static_cast<int>(n) + 1;
  for (std::uint64_t step = 1; step < total; ++step) {
    std::size_t j = 0;
    for (;;) {
      const Elem old = digits[j];
      const Elem fresh = (old + 1 < q) ? old + 1 : 0;
      digits[j] = fresh;
      const Elem delta = F.sub(fresh, old);
      for (std::size_t i = 0; i < n; ++i) cw[i] = F.add(cw[i], F.mul(delta, rows[j][i]));
      if (fresh != 0) break;
      ++j;
    }
    int wt = 0;
    for (Elem v : cw) wt += (v != 0);
    if (wt < best) best = wt;
  }
  return best;
}

std::vector<std::vector<Elem>> dual_basis(const LinearCode& code) {
  const std::size_t n = code.length(), k = code.dimension();
  std::vector<std::vector<Elem>> rows(k, std::vector<Elem>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j) rows[j][i] = code.column(i)[j];
  return kernel_basis(*code.field(), std::move(rows), n);
}

namespace {

// True when the support of h (minus coordinate i) precedes the stored
// repair group lexicographically; weights are already known equal.
bool support_lex_less(const std::vector<Elem>& h, std::size_t i,
                      const std::vector<std::size_t>& stored) {
  std::size_t at = 0;
  for (std::size_t j = 0; j < h.size(); ++j) {
    if (h[j] == 0 || j == i) continue;
    if (at == stored.size()) return false;
    if (j < stored[at]) return true;
    if (j > stored[at]) return false;
    ++at;
  }
  return false;
}

LocalityReport locality_by_dual(const LinearCode& code, const Budget& budget) {
  const auto& F = *code.field();
  const std::size_t n = code.length();
  const auto duals = dual_basis(code);
  const std::size_t D = duals.size();
  const std::uint64_t q = F.order();

  const std::uint64_t words = pow_capped(q, D, budget.max_dual_words);
  if (words > budget.max_dual_words)
    throw BudgetExceeded("locality: q^(n-k) exceeds the dual enumeration budget");

  std::vector<int> best_wt(n, -1);
  std::vector<std::vector<std::size_t>> best_group(n);

  std::vector<Elem> digits(D, 0), h(n, 0);
  for (std::uint64_t step = 1; step < words; ++step) {
    std::size_t t = 0;
    for (;;) {
      const Elem old = digits[t];
      const Elem fresh = (old + 1 < q) ? old + 1 : 0;
      digits[t] = fresh;
      const Elem delta = F.sub(fresh, old);
      for (std::size_t i = 0; i < n; ++i) h[i] = F.add(h[i], F.mul(delta, duals[t][i]));
      if (fresh != 0) break;
      ++t;
    }
    int wt = 0;
    for (Elem v : h) wt += (v != 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (h[i] == 0) continue;
      const int loc = wt - 1;
      if (best_wt[i] == -1 || loc < best_wt[i] ||
          (loc == best_wt[i] && support_lex_less(h, i, best_group[i]))) {
        best_wt[i] = loc;
        auto& group = best_group[i];
        group.clear();
        for (std::size_t j = 0; j < n; ++j)
          if (h[j] != 0 && j != i) group.push_back(j);
      }
    }
  }

  LocalityReport report;
  report.method_used = LocalityMethod::DualEnumeration;
  report.coords.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (best_wt[i] < 0) continue;
    report.coords[i] = CoordinateLocality{true, best_wt[i], std::move(best_group[i])};
  }
  return report;
}

// Progressive sweep over repair-set sizes; resolving size t for a
// coordinate certifies no smaller repair set exists. `stop_rank`, when
// set, ends the sweep once the resolved coordinates span that rank
// (enough for the information profile, which never needs the localities
// of high-locality parities beyond the truncation point).
LocalityReport locality_by_search(const LinearCode& code, const Budget& budget,
                                  std::size_t stop_rank, EchelonBasis* resolved_span,
                                  std::vector<int>* rank_delta_per_locality) {
  const std::size_t n = code.length();
  std::uint64_t rank_ops = 0;

  LocalityReport report;
  report.method_used = LocalityMethod::SubsetSearch;
  report.coords.resize(n);
  std::size_t unresolved = n;

  for (std::size_t t = 1; t < n && unresolved > 0; ++t) {
    std::vector<std::size_t> resolved_now;
    for (std::size_t i = 0; i < n; ++i) {
      if (report.coords[i].recoverable) continue;
      std::vector<std::size_t> others;
      others.reserve(n - 1);
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) others.push_back(j);
      std::vector<std::size_t> comb(t);
      for (std::size_t c = 0; c < t; ++c) comb[c] = c;
      do {
        if (++rank_ops > budget.max_rank_ops)
          throw BudgetExceeded("locality: rank computation budget exceeded");
        EchelonBasis span(ExtOps{code.field().get()}, code.dimension());
        for (std::size_t c : comb) span.absorb(code.column(others[c]));
        if (span.in_span(code.column(i))) {
          auto& entry = report.coords[i];
          entry.recoverable = true;
          entry.locality = static_cast<int>(t);
          entry.repair_group.clear();
          for (std::size_t c : comb) entry.repair_group.push_back(others[c]);
          resolved_now.push_back(i);
          --unresolved;
          break;
        }
      } while (next_combination(comb, n - 1));
    }
    if (resolved_span) {
      const std::size_t before = resolved_span->rank();
      for (std::size_t i : resolved_now) resolved_span->absorb(code.column(i));
      if (rank_delta_per_locality)
        rank_delta_per_locality->push_back(static_cast<int>(resolved_span->rank() - before));
      if (resolved_span->rank() >= stop_rank) break;
    }
  }
  return report;
}

LocalityMethod pick_method(const LinearCode& code, LocalityMethod method) {
  if (method != LocalityMethod::Auto) return method;
  const std::uint64_t q = code.field()->order();
  const std::size_t D = code.length() - code.dimension();
  return pow_capped(q, D, std::uint64_t{1} << 16) <= (std::uint64_t{1} << 16)
             ? LocalityMethod::DualEnumeration
             : LocalityMethod::SubsetSearch;
}

}  // namespace

bool LocalityReport::all_recoverable() const {
  return std::all_of(coords.begin(), coords.end(),
                     [](const CoordinateLocality& c) { return c.recoverable; });
}

LocalityReport locality_all(const LinearCode& code, LocalityMethod method, const Budget& budget) {
  switch (pick_method(code, method)) {
    case LocalityMethod::DualEnumeration:
      return locality_by_dual(code, budget);
    default:
      return locality_by_search(code, budget, code.length() + 1, nullptr, nullptr);
  }
}

CoordinateLocality coordinate_locality(const LinearCode& code, std::size_t i,
                                       LocalityMethod method, const Budget& budget) {
  if (i >= code.length()) throw PreconditionError("coordinate index out of range");
  return locality_all(code, method, budget).coords[i];
}

AllSymbolLocalityProfile all_symbol_profile(const LinearCode& code, LocalityMethod method,
                                            const Budget& budget) {
  const auto report = locality_all(code, method, budget);
  std::vector<int> counts;
  for (std::size_t i = 0; i < report.coords.size(); ++i) {
    const auto& c = report.coords[i];
    if (!c.recoverable)
      throw PreconditionError("coordinate " + std::to_string(i) +
                              " is unrecoverable; all-symbol locality profile undefined");
    if (static_cast<std::size_t>(c.locality) > counts.size()) counts.resize(c.locality, 0);
    ++counts[c.locality - 1];
  }
  return AllSymbolLocalityProfile::trimmed(std::move(counts));
}

InfoLocalityProfile info_profile(const LinearCode& code, LocalityMethod method,
                                 const Budget& budget) {
  const std::size_t k = code.dimension();
  const auto chosen = pick_method(code, method);

  std::vector<int> deltas;
  if (chosen == LocalityMethod::SubsetSearch) {
    EchelonBasis span(ExtOps{code.field().get()}, k);
    locality_by_search(code, budget, k, &span, &deltas);
    if (span.rank() < k)
      throw PreconditionError(
          "recoverable coordinates do not span the code; information locality profile undefined");
  } else {
    const auto report = locality_by_dual(code, budget);
    int max_loc = 0;
    for (const auto& c : report.coords)
      if (c.recoverable) max_loc = std::max(max_loc, c.locality);
    EchelonBasis span(ExtOps{code.field().get()}, k);
    for (int j = 1; j <= max_loc && span.rank() < k; ++j) {
      const std::size_t before = span.rank();
      for (std::size_t i = 0; i < report.coords.size(); ++i)
        if (report.coords[i].recoverable && report.coords[i].locality == j)
          span.absorb(code.column(i));
      deltas.push_back(static_cast<int>(span.rank() - before));
    }
    if (span.rank() < k)
      throw PreconditionError(
          "recoverable coordinates do not span the code; information locality profile undefined");
  }
  return InfoLocalityProfile::trimmed(std::move(deltas));
}

std::optional<std::vector<Elem>> erasure_decode(const LinearCode& code,
                                                std::span<const Elem> received,
                                                const ErasurePattern& pattern) {
  const auto& F = *code.field();
  const std::size_t n = code.length(), k = code.dimension();
  if (received.size() != n) throw PreconditionError("received word length mismatch");
  if (!pattern.erased.empty() && pattern.erased.back() >= n)
    throw PreconditionError("erasure pattern out of range");

  std::vector<std::vector<Elem>> rows;
  std::vector<Elem> rhs;
  for (std::size_t i = 0; i < n; ++i) {
    if (pattern.contains(i)) continue;
    if (!F.element_in_range(received[i]))
      throw PreconditionError("received symbol out of field range");
    rows.push_back(code.column(i));
    rhs.push_back(received[i]);
  }
  if (rows.size() < k) return std::nullopt;
  return solve_unique(F, std::move(rows), std::move(rhs));
}

Elem local_repair(const LinearCode& code, std::span<const Elem> codeword, std::size_t i,
                  LocalityMethod method, const Budget& budget) {
  const auto& F = *code.field();
  if (codeword.size() != code.length()) throw PreconditionError("codeword length mismatch");
  const auto loc = coordinate_locality(code, i, method, budget);
  if (!loc.recoverable)
    throw PreconditionError("coordinate " + std::to_string(i) + " is unrecoverable");

  // c_i = sum_l lambda_l c_l over the witness group; the group is a
  // minimal spanning set, hence independent, so the lambdas are unique.
  std::vector<std::vector<Elem>> rows(code.dimension(),
                                      std::vector<Elem>(loc.repair_group.size()));
  for (std::size_t c = 0; c < loc.repair_group.size(); ++c)
    for (std::size_t r = 0; r < code.dimension(); ++r)
      rows[r][c] = code.column(loc.repair_group[c])[r];
  auto lambdas = solve_unique(F, std::move(rows), code.column(i));
  if (!lambdas) throw Error("local_repair: witness group failed to express the coordinate");

  Elem acc = 0;
  for (std::size_t c = 0; c < loc.repair_group.size(); ++c)
    acc = F.add(acc, F.mul((*lambdas)[c], codeword[loc.repair_group[c]]));
  return acc;
}

}  // namespace ulrc
