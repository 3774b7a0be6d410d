#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "ulrc/errors.hpp"

namespace ulrc {

/// Canonical index of a field element, in [0, q^m). The index is the
/// mixed-radix encoding of the element's coordinates: an element of
/// GF(q^m) with polynomial-basis coordinates c_0..c_{m-1} in GF(q) has
/// index sum(c_i * q^i), where each GF(q) coordinate is itself indexed
/// by its base-p digit expansion. Index 0 is zero, index 1 is one.
using Elem = std::uint32_t;

/// Description of a tower GF(p) < GF(q) < GF(q^m) with q = p^w.
///
/// Both moduli are the lexicographically smallest irreducible monic
/// polynomials of their degree (coefficient sequences compared
/// low-degree-first), so every run produces the same field tables.
/// Immutable after construction; all operations are pure and safe for
/// unrestricted concurrent use.
class FieldSpec {
 public:
  /// Builds GF((p^w)^m). Rejects non-prime p and towers whose order
  /// exceeds 2^32. Multiplication uses log/antilog tables when the order
  /// fits 2^16, generic polynomial arithmetic above that.
  static std::shared_ptr<const FieldSpec> make(std::uint64_t p, unsigned w, unsigned m);

  /// Rebuilds a spec from explicit moduli (deserialization path). The
  /// moduli must equal the canonical lexicographically-smallest choice.
  static std::shared_ptr<const FieldSpec> make_checked(std::uint64_t p, unsigned w, unsigned m,
                                                       const std::vector<Elem>& base_modulus,
                                                       const std::vector<Elem>& ext_modulus);

  std::uint64_t characteristic() const { return p_; }
  unsigned base_degree() const { return w_; }
  unsigned ext_degree() const { return m_; }
  std::uint64_t base_order() const { return q_; }    // q = p^w
  std::uint64_t order() const { return order_; }     // q^m

  /// Coefficients low-degree-first, length degree+1, leading 1.
  const std::vector<Elem>& base_modulus() const { return base_mod_; }
  const std::vector<Elem>& ext_modulus() const { return ext_mod_; }

  bool matches(const FieldSpec& other) const;
  bool element_in_range(Elem a) const { return a < order_; }
  bool base_element_in_range(Elem a) const { return a < q_; }

  // --- arithmetic in GF(q^m), on canonical indices ---
  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;  // rejects 0
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;  // 0^0 = 1
  /// a^(q^i); frobenius(a, m) == a for all a.
  Elem frobenius(Elem a, unsigned i) const;

  /// GF(q)-linear bijection GF(q^m) -> GF(q)^m over the polynomial basis
  /// {1, alpha, ..., alpha^(m-1)}; basis element alpha^i maps to the unit
  /// vector with a one in position i.
  std::vector<Elem> to_vector(Elem a) const;
  Elem from_vector(std::span<const Elem> coords) const;

  /// GF(q) -> GF(q^m) as a constant polynomial (identity on indices).
  Elem embed_base(Elem c) const;

  // --- arithmetic in the base field GF(q), on indices < q ---
  Elem base_add(Elem a, Elem b) const;
  Elem base_sub(Elem a, Elem b) const;
  Elem base_neg(Elem a) const;
  Elem base_mul(Elem a, Elem b) const;
  Elem base_inv(Elem a) const;
  Elem base_pow(Elem a, std::uint64_t e) const;

 private:
  FieldSpec() = default;
  void build_tables();
  Elem mul_generic(Elem a, Elem b) const;
  Elem base_mul_raw(Elem a, Elem b) const;

  std::uint64_t p_ = 0;
  unsigned w_ = 0, m_ = 0;
  std::uint64_t q_ = 0, order_ = 0;
  std::vector<Elem> base_mod_, ext_mod_;

  bool base_tabled_ = false;
  std::vector<Elem> base_exp_, base_log_;
  bool ext_tabled_ = false;
  std::vector<Elem> ext_exp_, ext_log_;
};

using FieldPtr = std::shared_ptr<const FieldSpec>;

/// Value wrapper pairing an element index with its owning field.
/// Operations on elements from different FieldSpecs are rejected.
class FieldElement {
 public:
  FieldElement(FieldPtr spec, Elem value);

  Elem value() const { return value_; }
  const FieldPtr& spec() const { return spec_; }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement operator-() const;
  FieldElement inverse() const;
  FieldElement pow(std::uint64_t e) const;
  FieldElement frobenius(unsigned i) const;

  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

 private:
  FieldPtr spec_;
  Elem value_;
};

/// f(x) = sum_i a_i x^(q^i) with coefficients a_0..a_{K-1} over GF(q^m).
/// Evaluation is a GF(q)-linear map on GF(q^m).
class LinearizedPolynomial {
 public:
  LinearizedPolynomial(FieldPtr spec, std::vector<Elem> coefficients);

  const FieldPtr& spec() const { return spec_; }
  const std::vector<Elem>& coefficients() const { return coeffs_; }
  std::size_t coefficient_count() const { return coeffs_.size(); }

  Elem evaluate(Elem x) const;
  FieldElement evaluate(const FieldElement& x) const;

 private:
  FieldPtr spec_;
  std::vector<Elem> coeffs_;
};

/// Interpolates the unique linearized polynomial of q-degree <= K-1 with
/// f(points[i]) = values[i], by Gaussian elimination on the K x K system
/// M[i][j] = points[i]^(q^j). The points must be GF(q)-linearly
/// independent (checked via the rank of their to_vector images); a
/// dependent set raises PreconditionError.
LinearizedPolynomial moore_solve(const FieldPtr& spec, std::span<const Elem> points,
                                 std::span<const Elem> values);

/// Splits q into (p, w) with p prime and p^w = q; rejects non-prime-powers.
std::pair<std::uint64_t, unsigned> factor_prime_power(std::uint64_t q);

/// GF(q) itself, i.e. make(p, w, 1) for q = p^w.
FieldPtr field_from_order(std::uint64_t q);

}  // namespace ulrc
