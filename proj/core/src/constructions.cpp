#include "ulrc/constructions.hpp"

#include <algorithm>
#include <numeric>

#include "ulrc/linalg.hpp"

namespace ulrc {

LinearCode systematic_mds(int k, int d, std::uint64_t q) {
  if (k < 1 || d < 1) throw PreconditionError("systematic_mds requires k >= 1 and d >= 1");
  const long long n = static_cast<long long>(k) + d - 1;
  if (static_cast<std::uint64_t>(n) > q)
    throw PreconditionError("systematic_mds requires q >= k + d - 1");
  auto field = field_from_order(q);
  const auto& F = *field;

  // Vandermonde columns (1, x, ..., x^{k-1}) at the first n field elements.
  std::vector<std::vector<Elem>> vand(n, std::vector<Elem>(k));
  for (long long i = 0; i < n; ++i) {
    const Elem x = static_cast<Elem>(i);
    Elem p = 1;
    for (int j = 0; j < k; ++j) {
      vand[i][j] = p;
      p = F.mul(p, x);
    }
  }

  // Row-reduce so the first k coordinates carry the identity: multiply by
  // the inverse of the first k columns, i.e. solve A^T y = c_i for each
  // column.
  std::vector<std::vector<Elem>> lead(k, std::vector<Elem>(k));
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) lead[r][c] = vand[c][r];

  std::vector<std::vector<Elem>> columns(n);
  for (long long i = 0; i < n; ++i) {
    auto solved = solve_unique(F, lead, vand[i]);
    if (!solved) throw Error("systematic_mds: leading columns are singular");  // unreachable
    columns[i] = std::move(*solved);
  }

  std::vector<std::size_t> systematic(k);
  for (int j = 0; j < k; ++j) systematic[j] = static_cast<std::size_t>(j);
  return LinearCode(field, std::move(columns), std::move(systematic));
}

PyramidCode pyramid_unequal(const InfoLocalityProfile& profile, int d, std::uint64_t q) {
  profile.validate();
  if (profile.counts.empty()) throw PreconditionError("empty information locality profile");
  if (d < 2) throw PreconditionError("pyramid_unequal requires d >= 2");
  const long long k = profile.total();
  if (k < 1) throw PreconditionError("profile must place at least one information symbol");
  if (static_cast<std::uint64_t>(k + d - 1) > q)
    throw PreconditionError("pyramid_unequal requires q >= k + d - 1");

  const LinearCode base = systematic_mds(static_cast<int>(k), d, q);
  const auto& p0 = base.column(k);  // the parity to split; full weight k

  // Information coordinates are assigned to classes in increasing
  // locality, in index order; each class splits into groups of at most j.
  std::vector<std::vector<Elem>> columns;
  for (long long i = 0; i < k; ++i) columns.push_back(base.column(i));

  std::vector<PyramidCode::Group> groups;
  std::vector<int> designed_counts;
  std::size_t cursor = 0;
  for (int j = 1; j <= profile.max_locality(); ++j) {
    int left = profile.counts[j - 1];
    while (left > 0) {
      const int size = std::min(left, j);
      PyramidCode::Group g;
      g.locality_class = j;
      for (int t = 0; t < size; ++t) g.members.push_back(cursor++);
      left -= size;
      groups.push_back(std::move(g));
      if (static_cast<int>(designed_counts.size()) < size) designed_counts.resize(size, 0);
      designed_counts[size - 1] += size;
    }
  }

  for (auto& g : groups) {
    std::vector<Elem> col(k, 0);
    for (std::size_t member : g.members) col[member] = p0[member];
    g.parity_coordinate = columns.size();
    columns.push_back(std::move(col));
  }
  for (int t = 1; t <= d - 2; ++t) columns.push_back(base.column(k + t));

  std::vector<std::size_t> systematic(k);
  for (long long j = 0; j < k; ++j) systematic[j] = static_cast<std::size_t>(j);

  PyramidCode out{LinearCode(base.field(), std::move(columns), std::move(systematic)),
                  profile,
                  InfoLocalityProfile::trimmed(std::move(designed_counts)),
                  d,
                  std::move(groups)};
  return out;
}

GabidulinLRC gabidulin_lrc(int k, const AllSymbolLocalityProfile& nprofile, std::uint64_t q,
                           unsigned m) {
  nprofile.validate();
  if (nprofile.counts.empty()) throw PreconditionError("empty all-symbol locality profile");
  const int ra = nprofile.max_locality();
  for (int j = 1; j <= ra; ++j) {
    if (nprofile.counts[j - 1] % (j + 1) != 0)
      throw PreconditionError("(j+1) must divide n_j: class " + std::to_string(j) + " has n_j = " +
                              std::to_string(nprofile.counts[j - 1]));
  }
  long long N = 0;
  for (int j = 1; j <= ra; ++j)
    N += static_cast<long long>(nprofile.counts[j - 1]) / (j + 1) * j;
  if (k < 1 || k > N)
    throw PreconditionError("dimension must satisfy 1 <= k <= N = " + std::to_string(N));
  if (m < N) throw PreconditionError("extension degree m must be at least N = " + std::to_string(N));
  if (q < static_cast<std::uint64_t>(ra) + 1)
    throw PreconditionError("base field must satisfy q >= ra + 1");
  if (ra > k)
    throw PreconditionError("maximum locality must not exceed k");

  const auto [p, w] = factor_prime_power(q);
  auto field = FieldSpec::make(p, w, m);
  const auto& F = *field;

  // Evaluation points: the first N polynomial-basis powers, pairwise
  // GF(q)-independent.
  std::vector<Elem> evaluation_points;
  for (long long i = 0; i < N; ++i)
    evaluation_points.push_back(F.pow(static_cast<Elem>(q), static_cast<std::uint64_t>(i)));

  std::vector<Elem> effective_points;
  std::vector<std::vector<std::size_t>> groups;
  std::vector<std::size_t> group_of;
  std::size_t next_point = 0;
  for (int j = 1; j <= ra; ++j) {
    const int group_count = nprofile.counts[j - 1] / (j + 1);
    for (int g = 0; g < group_count; ++g) {
      std::vector<std::size_t> group;
      Elem parity_point = 0;
      for (int t = 0; t < j; ++t) {
        const Elem point = evaluation_points[next_point++];
        group.push_back(effective_points.size());
        effective_points.push_back(point);
        parity_point = F.add(parity_point, point);
      }
      group.push_back(effective_points.size());
      effective_points.push_back(parity_point);
      const std::size_t gid = groups.size();
      groups.push_back(group);
      group_of.resize(effective_points.size());
      for (std::size_t c : group) group_of[c] = gid;
    }
  }

  const std::size_t n = effective_points.size();
  std::vector<std::vector<Elem>> columns(n, std::vector<Elem>(k));
  for (std::size_t i = 0; i < n; ++i)
    for (int s = 0; s < k; ++s)
      columns[i][s] = F.frobenius(effective_points[i], static_cast<unsigned>(s));

  const long long design =
      unequal_all_symbol_bound(static_cast<long long>(n), k, nprofile).bound;
  return GabidulinLRC{LinearCode(field, std::move(columns)),
                      nprofile,
                      static_cast<std::size_t>(N),
                      std::move(evaluation_points),
                      std::move(effective_points),
                      std::move(groups),
                      std::move(group_of),
                      design};
}

std::optional<std::vector<Elem>> lrc_erasure_decode(const GabidulinLRC& lrc,
                                                    std::span<const Elem> received,
                                                    const ErasurePattern& pattern) {
  const auto& F = *lrc.code.field();
  const std::size_t n = lrc.code.length(), k = lrc.code.dimension();
  if (received.size() != n) throw PreconditionError("received word length mismatch");
  if (!pattern.erased.empty() && pattern.erased.back() >= n)
    throw PreconditionError("erasure pattern out of range");

  // Greedily collect k surviving coordinates whose effective points are
  // GF(q)-independent.
  BaseEchelonBasis indep(BaseOps{lrc.code.field().get()}, F.ext_degree());
  std::vector<Elem> points, values;
  for (std::size_t i = 0; i < n && points.size() < k; ++i) {
    if (pattern.contains(i)) continue;
    if (!F.element_in_range(received[i]))
      throw PreconditionError("received symbol out of field range");
    if (indep.absorb(F.to_vector(lrc.effective_points[i]))) {
      points.push_back(lrc.effective_points[i]);
      values.push_back(received[i]);
    }
  }
  if (points.size() < k) return std::nullopt;
  return moore_solve(lrc.code.field(), points, values).coefficients();
}

std::optional<std::vector<std::size_t>> repair_group_of(const PyramidCode& pc, std::size_t i) {
  if (i >= pc.code.length()) throw PreconditionError("coordinate index out of range");
  for (const auto& g : pc.groups) {
    if (g.parity_coordinate == i) return g.members;
    for (std::size_t member : g.members) {
      if (member == i) {
        std::vector<std::size_t> out;
        for (std::size_t other : g.members)
          if (other != i) out.push_back(other);
        out.push_back(g.parity_coordinate);
        return out;
      }
    }
  }
  return std::nullopt;  // unconstrained tail parity
}

std::vector<std::size_t> repair_group_of(const GabidulinLRC& lrc, std::size_t i) {
  if (i >= lrc.code.length()) throw PreconditionError("coordinate index out of range");
  std::vector<std::size_t> out;
  for (std::size_t other : lrc.groups[lrc.group_of[i]])
    if (other != i) out.push_back(other);
  return out;
}

}  // namespace ulrc
