#pragma once

// Shared helpers for the unit and acceptance suites: test-local reference
// arithmetic (kept independent of the library internals it checks) and
// seeded generators for random codes and requirements.

#include <cstdint>
#include <vector>

#include "ulrc/linear_code.hpp"
#include "ulrc/profile_opt.hpp"
#include "ulrc/rng.hpp"

namespace testsup {

// --- reference GF(4) with modulus x^2 + x + 1, written out by hand ---
inline ulrc::Elem gf4_add(ulrc::Elem a, ulrc::Elem b) { return a ^ b; }
inline ulrc::Elem gf4_mul(ulrc::Elem a, ulrc::Elem b) {
  static const ulrc::Elem table[4][4] = {
      {0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
  return table[a][b];
}

// --- naive polynomial helpers over a caller-supplied field ---
template <class Add, class Mul>
std::vector<ulrc::Elem> poly_mul(const std::vector<ulrc::Elem>& a,
                                 const std::vector<ulrc::Elem>& b, Add add, Mul mul) {
  std::vector<ulrc::Elem> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = add(out[i + j], mul(a[i], b[j]));
  return out;
}

/// Whether the monic polynomial f (low-degree-first, leading 1) factors as
/// a product of two monic polynomials of the given degrees over a field of
/// `order` elements. Exhaustive product enumeration.
template <class Add, class Mul>
bool has_factorization(const std::vector<ulrc::Elem>& f, std::size_t deg_a, std::uint64_t order,
                       Add add, Mul mul) {
  const std::size_t deg_f = f.size() - 1;
  const std::size_t deg_b = deg_f - deg_a;
  std::uint64_t combos_a = 1;
  for (std::size_t i = 0; i < deg_a; ++i) combos_a *= order;
  std::uint64_t combos_b = 1;
  for (std::size_t i = 0; i < deg_b; ++i) combos_b *= order;
  std::vector<ulrc::Elem> a(deg_a + 1, 0), b(deg_b + 1, 0);
  a[deg_a] = 1;
  b[deg_b] = 1;
  for (std::uint64_t va = 0; va < combos_a; ++va) {
    std::uint64_t t = va;
    for (std::size_t i = 0; i < deg_a; ++i) {
      a[i] = static_cast<ulrc::Elem>(t % order);
      t /= order;
    }
    for (std::uint64_t vb = 0; vb < combos_b; ++vb) {
      std::uint64_t u = vb;
      for (std::size_t i = 0; i < deg_b; ++i) {
        b[i] = static_cast<ulrc::Elem>(u % order);
        u /= order;
      }
      if (poly_mul(a, b, add, mul) == f) return true;
    }
  }
  return false;
}

template <class Add, class Mul>
bool reference_irreducible(const std::vector<ulrc::Elem>& f, std::uint64_t order, Add add,
                           Mul mul) {
  const std::size_t deg = f.size() - 1;
  for (std::size_t da = 1; da <= deg / 2; ++da)
    if (has_factorization(f, da, order, add, mul)) return false;
  return true;
}

// --- seeded random systematic codes with planted local parities ---
//
// Identity on the first k coordinates; the information symbols are
// partitioned into groups of size 1..4, each covered by a parity with
// nonzero coefficients on its group; zero or more full-weight global
// parities follow. Every coordinate is recoverable, so d >= 2.
struct PlantedCode {
  ulrc::LinearCode code;
  std::vector<std::vector<std::size_t>> groups;  // information-coordinate groups
};

inline PlantedCode random_planted_code(ulrc::SplitMix64& rng, std::uint64_t q, std::size_t max_n) {
  const auto field = ulrc::field_from_order(q);
  for (;;) {
    const std::size_t k = 2 + static_cast<std::size_t>(rng.below(5));  // 2..6
    std::vector<std::vector<std::size_t>> groups;
    std::size_t at = 0;
    while (at < k) {
      const std::size_t size =
          std::min<std::size_t>(1 + static_cast<std::size_t>(rng.below(4)), k - at);
      std::vector<std::size_t> g;
      for (std::size_t i = 0; i < size; ++i) g.push_back(at++);
      groups.push_back(std::move(g));
    }
    const std::size_t globals = static_cast<std::size_t>(rng.below(3));  // 0..2
    const std::size_t n = k + groups.size() + globals;
    if (n > max_n) continue;

    std::vector<std::vector<ulrc::Elem>> columns;
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<ulrc::Elem> e(k, 0);
      e[j] = 1;
      columns.push_back(std::move(e));
    }
    for (const auto& g : groups) {
      std::vector<ulrc::Elem> col(k, 0);
      for (std::size_t member : g)
        col[member] = static_cast<ulrc::Elem>(1 + rng.below(q - 1));
      columns.push_back(std::move(col));
    }
    for (std::size_t t = 0; t < globals; ++t) {
      std::vector<ulrc::Elem> col(k);
      for (std::size_t j = 0; j < k; ++j)
        col[j] = static_cast<ulrc::Elem>(1 + rng.below(q - 1));
      columns.push_back(std::move(col));
    }
    std::vector<std::size_t> systematic(k);
    for (std::size_t j = 0; j < k; ++j) systematic[j] = j;
    return PlantedCode{ulrc::LinearCode(field, std::move(columns), std::move(systematic)),
                       std::move(groups)};
  }
}

inline ulrc::LocalityRequirement random_requirement(ulrc::SplitMix64& rng, int max_k, int max_r) {
  for (;;) {
    const int r = 1 + static_cast<int>(rng.below(max_r));
    const int k = 1 + static_cast<int>(rng.below(max_k));
    std::vector<int> counts(r, 0);
    for (int i = 0; i < k; ++i) ++counts[rng.below(r)];
    ulrc::LocalityRequirement req{std::move(counts)};
    if (req.total() == k) return req;
  }
}

inline std::vector<ulrc::Elem> random_message(ulrc::SplitMix64& rng, const ulrc::FieldSpec& field,
                                              std::size_t k) {
  std::vector<ulrc::Elem> m(k);
  for (auto& v : m) v = static_cast<ulrc::Elem>(rng.below(field.order()));
  return m;
}

}  // namespace testsup
