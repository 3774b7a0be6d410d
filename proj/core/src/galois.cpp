#include "ulrc/galois.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include "ulrc/linalg.hpp"

namespace ulrc {
namespace {

constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 32;
constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 16;

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exp, const char* what) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (r > kMaxOrder / base) throw PreconditionError(std::string(what) + " exceeds 2^32");
    r *= base;
  }
  if (r > kMaxOrder) throw PreconditionError(std::string(what) + " exceeds 2^32");
  return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Coefficient-field interface for the polynomial routines below. Used at
// two levels: GF(p) while choosing the base modulus, GF(q) while choosing
// the extension modulus.
struct CoeffOps {
  std::uint64_t size;
  std::function<Elem(Elem, Elem)> add;
  std::function<Elem(Elem, Elem)> sub;
  std::function<Elem(Elem, Elem)> mul;
};

// Polynomials are coefficient vectors, low degree first.
Elem poly_eval(const std::vector<Elem>& f, Elem x, const CoeffOps& ops) {
  Elem acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = ops.add(ops.mul(acc, x), f[i]);
  return acc;
}

// Remainder of a modulo monic g.
std::vector<Elem> poly_mod_monic(std::vector<Elem> a, const std::vector<Elem>& g,
                                 const CoeffOps& ops) {
  const std::size_t dg = g.size() - 1;
  for (std::size_t i = a.size(); i-- > dg;) {
    const Elem c = a[i];
    if (c == 0) continue;
    a[i] = 0;
    for (std::size_t j = 0; j < dg; ++j) a[i - dg + j] = ops.sub(a[i - dg + j], ops.mul(c, g[j]));
  }
  a.resize(dg);
  return a;
}

bool poly_is_zero(const std::vector<Elem>& a) {
  return std::all_of(a.begin(), a.end(), [](Elem c) { return c == 0; });
}

// Irreducibility of a monic polynomial: a root scan suffices up to degree
// 3, full trial division by all monic polynomials of degree <= deg/2
// above that.
bool is_irreducible_monic(const std::vector<Elem>& f, const CoeffOps& ops) {
  const std::size_t deg = f.size() - 1;
  if (deg == 1) return true;
  if (deg <= 3) {
    for (std::uint64_t x = 0; x < ops.size; ++x)
      if (poly_eval(f, static_cast<Elem>(x), ops) == 0) return false;
    return true;
  }
  for (std::size_t e = 1; e <= deg / 2; ++e) {
    std::vector<Elem> g(e + 1, 0);
    g[e] = 1;
    std::uint64_t combos = 1;
    for (std::size_t i = 0; i < e; ++i) combos *= ops.size;
    for (std::uint64_t v = 0; v < combos; ++v) {
      std::uint64_t t = v;
      for (std::size_t i = 0; i < e; ++i) {
        g[i] = static_cast<Elem>(t % ops.size);
        t /= ops.size;
      }
      if (poly_is_zero(poly_mod_monic(f, g, ops))) return false;
    }
  }
  return true;
}

// Lexicographically smallest irreducible monic polynomial of the given
// degree, coefficient sequences compared low-degree-first.
std::vector<Elem> lex_smallest_irreducible(unsigned degree, const CoeffOps& ops) {
  std::vector<Elem> f(degree + 1, 0);
  f[degree] = 1;
  std::uint64_t combos = 1;
  for (unsigned i = 0; i < degree; ++i) combos *= ops.size;
  for (std::uint64_t v = 0; v < combos; ++v) {
    std::uint64_t t = v;
    // The low-degree coefficient is the most significant position of the
    // enumeration counter, so v ascends in low-degree-first lex order.
    for (unsigned i = 0; i < degree; ++i) {
      f[degree - 1 - i] = static_cast<Elem>(t % ops.size);
      t /= ops.size;
    }
    if (is_irreducible_monic(f, ops)) return f;
  }
  throw Error("no irreducible polynomial found");  // unreachable for true fields
}

Elem pow_with(Elem a, std::uint64_t e, const std::function<Elem(Elem, Elem)>& mul) {
  Elem r = 1, b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

Elem find_generator(std::uint64_t size, const std::function<Elem(Elem, Elem)>& mul) {
  if (size == 2) return 1;
  const std::uint64_t n = size - 1;
  const auto factors = prime_factors(n);
  for (std::uint64_t cand = 2; cand < size; ++cand) {
    bool ok = true;
    for (std::uint64_t f : factors) {
      if (pow_with(static_cast<Elem>(cand), n / f, mul) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return static_cast<Elem>(cand);
  }
  throw Error("no multiplicative generator found");  // unreachable
}

// Digit-wise base-p addition without carry: valid at every level of the
// tower because the canonical index is the base-p expansion of the
// element's GF(p) coordinates.
Elem add_digitwise(Elem a, Elem b, std::uint64_t p) {
  if (p == 2) return a ^ b;
  std::uint64_t x = a, y = b, result = 0, mult = 1;
  while (x || y) {
    result += ((x % p + y % p) % p) * mult;
    x /= p;
    y /= p;
    mult *= p;
  }
  return static_cast<Elem>(result);
}

Elem neg_digitwise(Elem a, std::uint64_t p) {
  if (p == 2) return a;
  std::uint64_t x = a, result = 0, mult = 1;
  while (x) {
    const std::uint64_t d = x % p;
    result += (d ? p - d : 0) * mult;
    x /= p;
    mult *= p;
  }
  return static_cast<Elem>(result);
}

}  // namespace

// ---------------------------------------------------------------------------
// FieldSpec

std::shared_ptr<const FieldSpec> FieldSpec::make(std::uint64_t p, unsigned w, unsigned m) {
  if (!is_prime(p)) throw PreconditionError("field characteristic is not prime");
  if (w < 1 || m < 1) throw PreconditionError("field degrees must be at least 1");

  auto spec = std::shared_ptr<FieldSpec>(new FieldSpec());
  spec->p_ = p;
  spec->w_ = w;
  spec->m_ = m;
  spec->q_ = checked_pow(p, w, "base field order");
  spec->order_ = checked_pow(spec->q_, m, "field order");

  const CoeffOps prime_ops{
      p,
      [p](Elem a, Elem b) { return static_cast<Elem>((std::uint64_t{a} + b) % p); },
      [p](Elem a, Elem b) { return static_cast<Elem>((std::uint64_t{a} + p - b) % p); },
      [p](Elem a, Elem b) { return static_cast<Elem>((std::uint64_t{a} * b) % p); },
  };
  spec->base_mod_ = lex_smallest_irreducible(w, prime_ops);

  spec->build_tables();
  return spec;
}

void FieldSpec::build_tables() {
  if (w_ > 1 && q_ <= kTableLimit) {
    base_exp_.resize(q_ - 1);
    base_log_.assign(q_, 0);
    const Elem g = find_generator(q_, [this](Elem a, Elem b) { return base_mul_raw(a, b); });
    Elem cur = 1;
    for (std::uint64_t i = 0; i < q_ - 1; ++i) {
      base_exp_[i] = cur;
      base_log_[cur] = static_cast<Elem>(i);
      cur = base_mul_raw(cur, g);
    }
    base_tabled_ = true;
  }

  const CoeffOps base_ops{
      q_,
      [this](Elem a, Elem b) { return base_add(a, b); },
      [this](Elem a, Elem b) { return base_sub(a, b); },
      [this](Elem a, Elem b) { return base_mul(a, b); },
  };
  ext_mod_ = lex_smallest_irreducible(m_, base_ops);

  if (m_ > 1 && order_ <= kTableLimit) {
    ext_exp_.resize(order_ - 1);
    ext_log_.assign(order_, 0);
    const Elem g = find_generator(order_, [this](Elem a, Elem b) { return mul_generic(a, b); });
    Elem cur = 1;
    for (std::uint64_t i = 0; i < order_ - 1; ++i) {
      ext_exp_[i] = cur;
      ext_log_[cur] = static_cast<Elem>(i);
      cur = mul_generic(cur, g);
    }
    ext_tabled_ = true;
  }
}

std::shared_ptr<const FieldSpec> FieldSpec::make_checked(std::uint64_t p, unsigned w, unsigned m,
                                                         const std::vector<Elem>& base_modulus,
                                                         const std::vector<Elem>& ext_modulus) {
  auto spec = make(p, w, m);
  if (spec->base_modulus() != base_modulus || spec->ext_modulus() != ext_modulus)
    throw PreconditionError("field moduli are not the canonical lexicographically-smallest choice");
  return spec;
}

bool FieldSpec::matches(const FieldSpec& other) const {
  if (this == &other) return true;
  return p_ == other.p_ && w_ == other.w_ && m_ == other.m_ && base_mod_ == other.base_mod_ &&
         ext_mod_ == other.ext_mod_;
}

Elem FieldSpec::add(Elem a, Elem b) const { return add_digitwise(a, b, p_); }
Elem FieldSpec::neg(Elem a) const { return neg_digitwise(a, p_); }
Elem FieldSpec::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem FieldSpec::base_add(Elem a, Elem b) const { return add_digitwise(a, b, p_); }
Elem FieldSpec::base_neg(Elem a) const { return neg_digitwise(a, p_); }
Elem FieldSpec::base_sub(Elem a, Elem b) const { return base_add(a, base_neg(b)); }

// GF(q) product by polynomial arithmetic over GF(p) modulo the base
// modulus; the table path shortcuts this after construction.
Elem FieldSpec::base_mul_raw(Elem a, Elem b) const {
  if (w_ == 1) return static_cast<Elem>((std::uint64_t{a} * b) % p_);
  std::uint64_t da[64], db[64];
  std::uint64_t x = a, y = b;
  for (unsigned i = 0; i < w_; ++i) {
    da[i] = x % p_;
    x /= p_;
    db[i] = y % p_;
    y /= p_;
  }
  std::uint64_t prod[127] = {0};
  for (unsigned i = 0; i < w_; ++i) {
    if (!da[i]) continue;
    for (unsigned j = 0; j < w_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
  }
  for (unsigned i = 2 * w_ - 2; i >= w_; --i) {
    const std::uint64_t c = prod[i];
    if (!c) continue;
    prod[i] = 0;
    for (unsigned j = 0; j < w_; ++j)
      prod[i - w_ + j] = (prod[i - w_ + j] + (p_ - c % p_) * base_mod_[j]) % p_;
    if (i == w_) break;
  }
  std::uint64_t result = 0, mult = 1;
  for (unsigned i = 0; i < w_; ++i) {
    result += prod[i] * mult;
    mult *= p_;
  }
  return static_cast<Elem>(result);
}

Elem FieldSpec::base_mul(Elem a, Elem b) const {
  if (base_tabled_) {
    if (a == 0 || b == 0) return 0;
    return base_exp_[(std::uint64_t{base_log_[a]} + base_log_[b]) % (q_ - 1)];
  }
  return base_mul_raw(a, b);
}

Elem FieldSpec::base_pow(Elem a, std::uint64_t e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  if (base_tabled_) {
    const std::uint64_t n = q_ - 1;
    return base_exp_[(std::uint64_t{base_log_[a]} * (e % n)) % n];
  }
  return pow_with(a, e, [this](Elem x, Elem y) { return base_mul(x, y); });
}

Elem FieldSpec::base_inv(Elem a) const {
  if (a == 0) throw PreconditionError("inverse of zero");
  if (base_tabled_) {
    const std::uint64_t n = q_ - 1;
    return base_exp_[(n - base_log_[a]) % n];
  }
  return base_pow(a, q_ - 2);
}

// GF(q^m) product by polynomial arithmetic over GF(q) modulo the
// extension modulus.
Elem FieldSpec::mul_generic(Elem a, Elem b) const {
  if (m_ == 1) return base_mul(a, b);
  Elem da[32], db[32];
  std::uint64_t x = a, y = b;
  for (unsigned i = 0; i < m_; ++i) {
    da[i] = static_cast<Elem>(x % q_);
    x /= q_;
    db[i] = static_cast<Elem>(y % q_);
    y /= q_;
  }
  Elem prod[63] = {0};
  for (unsigned i = 0; i < m_; ++i) {
    if (!da[i]) continue;
    for (unsigned j = 0; j < m_; ++j)
      prod[i + j] = base_add(prod[i + j], base_mul(da[i], db[j]));
  }
  for (unsigned i = 2 * m_ - 2; i >= m_; --i) {
    const Elem c = prod[i];
    if (c) {
      prod[i] = 0;
      for (unsigned j = 0; j < m_; ++j)
        prod[i - m_ + j] = base_sub(prod[i - m_ + j], base_mul(c, ext_mod_[j]));
    }
    if (i == m_) break;
  }
  std::uint64_t result = 0, mult = 1;
  for (unsigned i = 0; i < m_; ++i) {
    result += std::uint64_t{prod[i]} * mult;
    mult *= q_;
  }
  return static_cast<Elem>(result);
}

Elem FieldSpec::mul(Elem a, Elem b) const {
  if (ext_tabled_) {
    if (a == 0 || b == 0) return 0;
    return ext_exp_[(std::uint64_t{ext_log_[a]} + ext_log_[b]) % (order_ - 1)];
  }
  return mul_generic(a, b);
}

Elem FieldSpec::pow(Elem a, std::uint64_t e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  if (ext_tabled_) {
    const std::uint64_t n = order_ - 1;
    return ext_exp_[(std::uint64_t{ext_log_[a]} * (e % n)) % n];
  }
  return pow_with(a, e, [this](Elem x, Elem y) { return mul(x, y); });
}

Elem FieldSpec::inv(Elem a) const {
  if (a == 0) throw PreconditionError("inverse of zero");
  if (ext_tabled_) {
    const std::uint64_t n = order_ - 1;
    return ext_exp_[(n - ext_log_[a]) % n];
  }
  if (m_ == 1) return base_inv(a);
  return pow(a, order_ - 2);
}

Elem FieldSpec::frobenius(Elem a, unsigned i) const {
  i %= m_;
  if (i == 0) return a;
  std::uint64_t e = 1;
  for (unsigned t = 0; t < i; ++t) e *= q_;
  return pow(a, e);
}

std::vector<Elem> FieldSpec::to_vector(Elem a) const {
  std::vector<Elem> coords(m_);
  std::uint64_t x = a;
  for (unsigned i = 0; i < m_; ++i) {
    coords[i] = static_cast<Elem>(x % q_);
    x /= q_;
  }
  return coords;
}

Elem FieldSpec::from_vector(std::span<const Elem> coords) const {
  if (coords.size() != m_) throw PreconditionError("coordinate vector has wrong length");
  std::uint64_t result = 0, mult = 1;
  for (unsigned i = 0; i < m_; ++i) {
    if (coords[i] >= q_) throw PreconditionError("coordinate outside the base field");
    result += std::uint64_t{coords[i]} * mult;
    mult *= q_;
  }
  return static_cast<Elem>(result);
}

Elem FieldSpec::embed_base(Elem c) const {
  if (c >= q_) throw PreconditionError("element outside the base field");
  return c;
}

// ---------------------------------------------------------------------------
// FieldElement

namespace {
void require_same(const FieldElement& a, const FieldElement& b) {
  if (!a.spec()->matches(*b.spec()))
    throw PreconditionError("operands belong to different fields");
}
}  // namespace

FieldElement::FieldElement(FieldPtr spec, Elem value) : spec_(std::move(spec)), value_(value) {
  if (!spec_) throw PreconditionError("null field spec");
  if (!spec_->element_in_range(value_)) throw PreconditionError("element index out of range");
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return {a.spec_, a.spec_->add(a.value_, b.value_)};
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return {a.spec_, a.spec_->sub(a.value_, b.value_)};
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return {a.spec_, a.spec_->mul(a.value_, b.value_)};
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return {a.spec_, a.spec_->div(a.value_, b.value_)};
}

FieldElement FieldElement::operator-() const { return {spec_, spec_->neg(value_)}; }
FieldElement FieldElement::inverse() const { return {spec_, spec_->inv(value_)}; }
FieldElement FieldElement::pow(std::uint64_t e) const { return {spec_, spec_->pow(value_, e)}; }
FieldElement FieldElement::frobenius(unsigned i) const {
  return {spec_, spec_->frobenius(value_, i)};
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.spec_->matches(*b.spec_) && a.value_ == b.value_;
}

// ---------------------------------------------------------------------------
// LinearizedPolynomial

LinearizedPolynomial::LinearizedPolynomial(FieldPtr spec, std::vector<Elem> coefficients)
    : spec_(std::move(spec)), coeffs_(std::move(coefficients)) {
  if (!spec_) throw PreconditionError("null field spec");
  for (Elem c : coeffs_)
    if (!spec_->element_in_range(c)) throw PreconditionError("coefficient index out of range");
}

Elem LinearizedPolynomial::evaluate(Elem x) const {
  if (!spec_->element_in_range(x)) throw PreconditionError("argument index out of range");
  Elem acc = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    acc = spec_->add(acc, spec_->mul(coeffs_[i], spec_->frobenius(x, static_cast<unsigned>(i))));
  return acc;
}

FieldElement LinearizedPolynomial::evaluate(const FieldElement& x) const {
  if (!spec_->matches(*x.spec())) throw PreconditionError("argument belongs to a different field");
  return {spec_, evaluate(x.value())};
}

LinearizedPolynomial moore_solve(const FieldPtr& spec, std::span<const Elem> points,
                                 std::span<const Elem> values) {
  if (!spec) throw PreconditionError("null field spec");
  if (points.size() != values.size() || points.empty())
    throw PreconditionError("moore_solve: points and values must be non-empty and equal length");
  const std::size_t K = points.size();

  BaseEchelonBasis indep(BaseOps{spec.get()}, spec->ext_degree());
  for (Elem g : points) {
    if (!spec->element_in_range(g)) throw PreconditionError("point index out of range");
    if (!indep.absorb(spec->to_vector(g)))
      throw PreconditionError("moore_solve: evaluation points are GF(q)-linearly dependent");
  }

  std::vector<std::vector<Elem>> rows(K, std::vector<Elem>(K));
  for (std::size_t i = 0; i < K; ++i)
    for (std::size_t j = 0; j < K; ++j)
      rows[i][j] = spec->frobenius(points[i], static_cast<unsigned>(j));
  auto solution = solve_unique(*spec, std::move(rows), {values.begin(), values.end()});
  if (!solution) throw Error("moore_solve: singular system for independent points");  // unreachable
  return {spec, std::move(*solution)};
}

std::pair<std::uint64_t, unsigned> factor_prime_power(std::uint64_t q) {
  if (q < 2) throw PreconditionError("field order must be at least 2");
  std::uint64_t p = q;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  unsigned w = 0;
  std::uint64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++w;
  }
  if (rest != 1) throw PreconditionError("field order is not a prime power");
  return {p, w};
}

FieldPtr field_from_order(std::uint64_t q) {
  const auto [p, w] = factor_prime_power(q);
  return FieldSpec::make(p, w, 1);
}

}  // namespace ulrc
