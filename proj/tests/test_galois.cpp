#include "doctest.h"
#include "support.hpp"
#include "ulrc/galois.hpp"
#include "ulrc/linalg.hpp"
#include "ulrc/rng.hpp"

using namespace ulrc;

TEST_SUITE_BEGIN("galois");

TEST_CASE("prime fields and trivial towers") {
  auto gf2 = FieldSpec::make(2, 1, 1);
  CHECK(gf2->order() == 2);
  CHECK(gf2->base_modulus() == std::vector<Elem>{0, 1});
  CHECK(gf2->ext_modulus() == std::vector<Elem>{0, 1});
  CHECK(gf2->add(1, 1) == 0);
  CHECK(gf2->mul(1, 1) == 1);

  auto gf5 = FieldSpec::make(5, 1, 1);
  CHECK(gf5->order() == 5);
  CHECK(gf5->inv(2) == 3);  // 2 * 3 = 6 = 1 mod 5
  CHECK(gf5->mul(2, gf5->inv(2)) == 1);
}

TEST_CASE("GF(4) uses the modulus x^2 + x + 1 and matches the hand table") {
  auto gf4 = FieldSpec::make(2, 2, 1);
  CHECK(gf4->base_modulus() == std::vector<Elem>{1, 1, 1});
  CHECK(gf4->mul(2, 2) == 3);  // x * x = x + 1
  for (Elem a = 0; a < 4; ++a)
    for (Elem b = 0; b < 4; ++b) {
      CHECK(gf4->mul(a, b) == testsup::gf4_mul(a, b));
      CHECK(gf4->add(a, b) == testsup::gf4_add(a, b));
    }
}

TEST_CASE("GF(4^4) moduli verified irreducible and lexicographically minimal") {
  auto f = FieldSpec::make(2, 2, 4);
  CHECK(f->base_order() == 4);
  CHECK(f->order() == 256);
  CHECK(f->base_modulus() == std::vector<Elem>{1, 1, 1});

  const auto& ext = f->ext_modulus();
  REQUIRE(ext.size() == 5);
  CHECK(ext[4] == 1);
  // Independent exhaustive factorization check over the hand-written GF(4).
  CHECK(testsup::reference_irreducible(ext, 4, testsup::gf4_add, testsup::gf4_mul));

  // Every lexicographically smaller monic quartic must be reducible.
  auto lex_value = [](const std::vector<Elem>& p) {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) v = v * 4 + p[i];
    return v;
  };
  const std::uint64_t chosen = lex_value(ext);
  for (std::uint64_t v = 0; v < chosen; ++v) {
    std::vector<Elem> cand(5, 0);
    cand[4] = 1;
    std::uint64_t t = v;
    for (int i = 3; i >= 0; --i) {
      cand[i] = static_cast<Elem>(t % 4);
      t /= 4;
    }
    CAPTURE(v);
    CHECK_FALSE(testsup::reference_irreducible(cand, 4, testsup::gf4_add, testsup::gf4_mul));
  }
}

TEST_CASE("construction rejects bad parameters") {
  CHECK_THROWS_AS(FieldSpec::make(4, 1, 1), PreconditionError);   // not prime
  CHECK_THROWS_AS(FieldSpec::make(1, 1, 1), PreconditionError);
  CHECK_THROWS_AS(FieldSpec::make(2, 1, 40), PreconditionError);  // order overflow
  CHECK_THROWS_AS(FieldSpec::make(2, 0, 1), PreconditionError);
  CHECK_THROWS_AS(field_from_order(12), PreconditionError);       // not a prime power
  CHECK(field_from_order(8)->order() == 8);
  CHECK(factor_prime_power(27) == std::pair<std::uint64_t, unsigned>{3, 3});
}

namespace {

void check_axioms(const FieldPtr& f, int samples) {
  SplitMix64 rng(0x9a0cu ^ f->order());
  const std::uint64_t q = f->order();
  for (int s = 0; s < samples; ++s) {
    const Elem a = static_cast<Elem>(rng.below(q));
    const Elem b = static_cast<Elem>(rng.below(q));
    const Elem c = static_cast<Elem>(rng.below(q));
    REQUIRE(f->add(a, b) == f->add(b, a));
    REQUIRE(f->mul(a, b) == f->mul(b, a));
    REQUIRE(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
    REQUIRE(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
    REQUIRE(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
    REQUIRE(f->add(a, f->neg(a)) == 0);
    if (a != 0) REQUIRE(f->mul(a, f->inv(a)) == 1);
    REQUIRE(f->mul(a, 1) == a);
    REQUIRE(f->add(a, 0) == a);
  }
}

}  // namespace

TEST_CASE("field axioms hold on random triples") {
  for (auto f : {FieldSpec::make(2, 1, 1), FieldSpec::make(2, 2, 1), FieldSpec::make(5, 1, 1),
                 FieldSpec::make(2, 1, 3), FieldSpec::make(2, 2, 2), FieldSpec::make(2, 2, 4),
                 FieldSpec::make(3, 1, 2), FieldSpec::make(7, 1, 1), FieldSpec::make(2, 3, 1),
                 FieldSpec::make(2, 4, 1), FieldSpec::make(3, 2, 1)})
    check_axioms(f, 2000);
}

TEST_CASE("generic arithmetic path beyond the table limit") {
  auto f = FieldSpec::make(2, 1, 17);  // 2^17 elements, no tables
  CHECK(f->order() == std::uint64_t{1} << 17);
  check_axioms(f, 300);
  SplitMix64 rng(77);
  for (int s = 0; s < 200; ++s) {
    const Elem a = static_cast<Elem>(rng.below(f->order()));
    const Elem b = static_cast<Elem>(rng.below(f->order()));
    // Characteristic-2 Frobenius is additive.
    REQUIRE(f->frobenius(f->add(a, b), 1) == f->add(f->frobenius(a, 1), f->frobenius(b, 1)));
  }
}

TEST_CASE("pow edge cases") {
  auto f = FieldSpec::make(2, 2, 4);
  CHECK(f->pow(0, 0) == 1);
  CHECK(f->pow(0, 5) == 0);
  CHECK(f->pow(7, 0) == 1);
  CHECK(f->pow(7, 255) == 1);  // group order
  CHECK_THROWS_AS(f->inv(0), PreconditionError);
  CHECK_THROWS_AS(f->base_inv(0), PreconditionError);
}

TEST_CASE("frobenius fixes the base field and has order m") {
  auto f = FieldSpec::make(2, 2, 4);
  SplitMix64 rng(3);
  for (int s = 0; s < 500; ++s) {
    const Elem a = static_cast<Elem>(rng.below(f->order()));
    REQUIRE(f->frobenius(a, 0) == a);
    REQUIRE(f->frobenius(a, f->ext_degree()) == a);
    const Elem b = static_cast<Elem>(rng.below(f->order()));
    REQUIRE(f->frobenius(f->add(a, b), 1) == f->add(f->frobenius(a, 1), f->frobenius(b, 1)));
    REQUIRE(f->frobenius(f->mul(a, b), 1) == f->mul(f->frobenius(a, 1), f->frobenius(b, 1)));
  }
  for (Elem c = 0; c < 4; ++c) REQUIRE(f->frobenius(f->embed_base(c), 1) == f->embed_base(c));
}

TEST_CASE("to_vector is a GF(q)-linear bijection over the polynomial basis") {
  auto f = FieldSpec::make(2, 2, 4);
  const auto zero = f->to_vector(0);
  CHECK(zero == std::vector<Elem>{0, 0, 0, 0});

  // alpha^i maps to the i-th unit vector.
  for (unsigned i = 0; i < f->ext_degree(); ++i) {
    const Elem basis = f->pow(static_cast<Elem>(f->base_order()), i);
    const auto vec = f->to_vector(basis);
    for (unsigned j = 0; j < f->ext_degree(); ++j) REQUIRE(vec[j] == (i == j ? 1u : 0u));
  }

  SplitMix64 rng(11);
  for (int s = 0; s < 500; ++s) {
    const Elem a = static_cast<Elem>(rng.below(f->order()));
    const Elem b = static_cast<Elem>(rng.below(f->order()));
    const Elem c = static_cast<Elem>(rng.below(f->base_order()));
    REQUIRE(f->from_vector(f->to_vector(a)) == a);
    const Elem combo = f->add(a, f->mul(f->embed_base(c), b));
    auto va = f->to_vector(a);
    const auto vb = f->to_vector(b);
    for (unsigned j = 0; j < f->ext_degree(); ++j)
      va[j] = f->base_add(va[j], f->base_mul(c, vb[j]));
    REQUIRE(f->to_vector(combo) == va);
  }
}

TEST_CASE("linearized polynomial evaluation") {
  auto f = FieldSpec::make(2, 2, 4);
  SplitMix64 rng(13);

  LinearizedPolynomial identity(f, {1});
  LinearizedPolynomial zero(f, {});
  for (int s = 0; s < 100; ++s) {
    const Elem x = static_cast<Elem>(rng.below(f->order()));
    REQUIRE(identity.evaluate(x) == x);
    REQUIRE(zero.evaluate(x) == 0);
  }

  for (int s = 0; s < 1000; ++s) {
    std::vector<Elem> coeffs(1 + rng.below(4));
    for (auto& cc : coeffs) cc = static_cast<Elem>(rng.below(f->order()));
    LinearizedPolynomial poly(f, coeffs);
    REQUIRE(poly.evaluate(0u) == 0);
    const Elem x = static_cast<Elem>(rng.below(f->order()));
    const Elem y = static_cast<Elem>(rng.below(f->order()));
    const Elem a = f->embed_base(static_cast<Elem>(rng.below(f->base_order())));
    const Elem b = f->embed_base(static_cast<Elem>(rng.below(f->base_order())));
    const Elem lhs = poly.evaluate(f->add(f->mul(a, x), f->mul(b, y)));
    const Elem rhs = f->add(f->mul(a, poly.evaluate(x)), f->mul(b, poly.evaluate(y)));
    REQUIRE(lhs == rhs);
  }
}

TEST_CASE("moore_solve recovers interpolants") {
  auto f = FieldSpec::make(2, 2, 4);
  SplitMix64 rng(17);

  SUBCASE("single point") {
    const Elem g = 7, v = 133;
    auto poly = moore_solve(f, std::vector<Elem>{g}, std::vector<Elem>{v});
    REQUIRE(poly.coefficient_count() == 1);
    CHECK(poly.coefficients()[0] == f->mul(v, f->inv(g)));
    CHECK(poly.evaluate(g) == v);
  }

  SUBCASE("round trip for every K <= m") {
    for (unsigned K = 1; K <= f->ext_degree(); ++K) {
      for (int trial = 0; trial < 50; ++trial) {
        // Random GF(q)-independent points by rejection.
        std::vector<Elem> points;
        BaseEchelonBasis indep(BaseOps{f.get()}, f->ext_degree());
        while (points.size() < K) {
          const Elem cand = static_cast<Elem>(rng.below(f->order()));
          if (indep.absorb(f->to_vector(cand))) points.push_back(cand);
        }
        std::vector<Elem> coeffs(K);
        for (auto& cc : coeffs) cc = static_cast<Elem>(rng.below(f->order()));
        LinearizedPolynomial poly(f, coeffs);
        std::vector<Elem> values;
        for (Elem g : points) values.push_back(poly.evaluate(g));
        auto solved = moore_solve(f, points, values);
        REQUIRE(solved.coefficients() == coeffs);
      }
    }
  }

  SUBCASE("GF(q)-dependent points are rejected") {
    const Elem g = 9;
    const Elem scaled = f->mul(f->embed_base(3), g);  // 3 in GF(4)
    CHECK_THROWS_AS(moore_solve(f, std::vector<Elem>{g, scaled}, std::vector<Elem>{1, 2}),
                    PreconditionError);
  }
}

TEST_CASE("field elements reject mixed-field operands") {
  auto gf4 = FieldSpec::make(2, 2, 1);
  auto gf5 = FieldSpec::make(5, 1, 1);
  FieldElement a(gf4, 2), b(gf4, 3), c(gf5, 2);
  CHECK((a * b).value() == 1);
  CHECK((a + a).value() == 0);
  CHECK_THROWS_AS(a + c, PreconditionError);
  CHECK_THROWS_AS(a * c, PreconditionError);
  CHECK(a != c);
  CHECK(a.inverse() * a == FieldElement(gf4, 1));
  CHECK_THROWS_AS(FieldElement(gf4, 9), PreconditionError);
}

TEST_CASE("same field built twice matches") {
  auto f1 = FieldSpec::make(2, 2, 4);
  auto f2 = FieldSpec::make(2, 2, 4);
  CHECK(f1->matches(*f2));
  CHECK_FALSE(f1->matches(*FieldSpec::make(2, 4, 2)));
  auto checked = FieldSpec::make_checked(2, 2, 4, f1->base_modulus(), f1->ext_modulus());
  CHECK(checked->matches(*f1));
  auto wrong = f1->ext_modulus();
  wrong[0] = f1->base_add(wrong[0], 1);
  CHECK_THROWS_AS(FieldSpec::make_checked(2, 2, 4, f1->base_modulus(), wrong), PreconditionError);
}

TEST_SUITE_END();
