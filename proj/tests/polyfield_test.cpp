// Copyright 2026 The fuchs Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>

#include "core/error.hpp"
#include "core/finring.hpp"
#include "core/numtheory.hpp"
#include "core/polyfield.hpp"
#include "core/unitgroup.hpp"

namespace pf = fuchs::polyfield;
using fuchs::ErrorCode;
using pf::PrimeFieldPoly;

namespace {

PrimeFieldPoly P(std::uint64_t q, std::vector<std::uint64_t> c) { return {q, std::move(c)}; }

// Irreducibility by trying every monic divisor of degree <= deg/2.
bool irreducible_by_search(const PrimeFieldPoly& f) {
  const int n = f.degree();
  if (n < 1) return false;
  const std::uint64_t q = f.modulus();
  for (int d = 1; d <= n / 2; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= q;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::vector<std::uint64_t> c(d + 1);
      std::uint64_t t = idx;
      for (int i = 0; i < d; ++i) {
        c[i] = t % q;
        t /= q;
      }
      c[d] = 1;
      if (pf::divmod(f, P(q, c)).second.is_zero()) return false;
    }
  }
  return true;
}

PrimeFieldPoly random_poly(std::mt19937_64& rng, std::uint64_t q, int degree) {
  std::vector<std::uint64_t> c(degree + 1);
  for (auto& x : c) x = rng() % q;
  c[degree] = 1 + rng() % (q - 1);
  return P(q, c);
}

}  // namespace

TEST(PolyField, Formatting) {
  EXPECT_EQ(P(2, {1, 0, 0, 0, 0, 0, 0, 0, 1}).to_string(), "1 + x^8 (mod 2)");
  EXPECT_EQ(PrimeFieldPoly::zero(3).to_string(), "0 (mod 3)");
  EXPECT_EQ(PrimeFieldPoly::from_signed(3, {-1, 0, 1}), P(3, {2, 0, 1}));
}

TEST(PolyField, GcdExamples) {
  const auto f = PrimeFieldPoly::x_pow_minus_one(2, 7);
  EXPECT_EQ(pf::poly_gcd(f, f.derivative()), P(2, {1}));
  const auto g = P(3, {1, 2, 2});
  EXPECT_EQ(pf::poly_gcd(g, PrimeFieldPoly::zero(3)), g.monic());
  const auto h = PrimeFieldPoly::x_pow_minus_one(2, 8);
  EXPECT_TRUE(h.derivative().is_zero());
  EXPECT_EQ(pf::poly_gcd(h, h.derivative()), h);
  EXPECT_EQ(pf::squarefree_status(h), pf::SquarefreeStatus::kZeroDerivative);
  EXPECT_EQ(pf::squarefree_status(f), pf::SquarefreeStatus::kCoprimeToDerivative);
  EXPECT_EQ(pf::squarefree_status(P(3, {1, 2, 1})), pf::SquarefreeStatus::kSharesFactorWithDerivative);
  try {
    pf::poly_gcd(P(2, {1, 1}), P(3, {1, 1}));
    FAIL();
  } catch (const fuchs::Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kModulusMismatch);
  }
}

TEST(PolyField, FactorExamples) {
  const auto f7 = pf::factor(PrimeFieldPoly::x_pow_minus_one(2, 7));
  ASSERT_EQ(f7.size(), 3u);
  EXPECT_EQ(f7[0], (pf::Factor{P(2, {1, 1}), 1}));
  std::vector<PrimeFieldPoly> cubics{f7[1].poly, f7[2].poly};
  EXPECT_NE(std::find(cubics.begin(), cubics.end(), P(2, {1, 1, 0, 1})), cubics.end());
  EXPECT_NE(std::find(cubics.begin(), cubics.end(), P(2, {1, 0, 1, 1})), cubics.end());
  const auto f8 = pf::factor(PrimeFieldPoly::x_pow_minus_one(2, 8));
  ASSERT_EQ(f8.size(), 1u);
  EXPECT_EQ(f8[0], (pf::Factor{P(2, {1, 1}), 8}));
  const auto f2 = pf::factor(PrimeFieldPoly::x_pow_minus_one(3, 2));
  ASSERT_EQ(f2.size(), 2u);
  EXPECT_EQ(f2[0].poly, P(3, {1, 1}));
  EXPECT_EQ(f2[1].poly, P(3, {2, 1}));
}

TEST(PolyField, FactorMultipliesBack) {
  std::mt19937_64 rng(20260101);
  for (std::uint64_t q : {2, 3, 5, 7}) {
    for (int degree = 1; degree <= 8; ++degree) {
      for (int t = 0; t < 500; ++t) {
        const auto f = random_poly(rng, q, degree);
        auto prod = PrimeFieldPoly::constant(q, f.leading());
        for (const auto& fac : pf::factor(f)) {
          ASSERT_TRUE(fac.poly.is_monic());
          ASSERT_TRUE(irreducible_by_search(fac.poly)) << fac.poly.to_string();
          for (unsigned m = 0; m < fac.multiplicity; ++m) prod = prod * fac.poly;
        }
        ASSERT_EQ(prod, f) << f.to_string();
      }
    }
  }
}

TEST(PolyField, IrreducibleAgreesWithSearch) {
  for (std::uint64_t q : {2, 3, 5}) {
    for (int degree = 1; degree <= 5; ++degree) {
      std::uint64_t count = 1;
      for (int i = 0; i < degree; ++i) count *= q;
      for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::vector<std::uint64_t> c(degree + 1);
        std::uint64_t t = idx;
        for (int i = 0; i < degree; ++i) {
          c[i] = t % q;
          t /= q;
        }
        c[degree] = 1;
        const auto f = P(q, c);
        ASSERT_EQ(pf::is_irreducible(f), irreducible_by_search(f)) << f.to_string();
      }
    }
  }
}

TEST(PolyField, LeastMonicIrreducible) {
  EXPECT_EQ(pf::least_monic_irreducible(3, 2), P(3, {1, 0, 1}));
  EXPECT_EQ(pf::least_monic_irreducible(2, 2), P(2, {1, 1, 1}));
  EXPECT_EQ(pf::least_monic_irreducible(2, 3), P(2, {1, 0, 1, 1}));
  // Oracle: first irreducible in low-degree-first lexicographic order.
  for (std::uint64_t q : {2, 3, 5}) {
    for (unsigned k = 1; k <= (q == 2 ? 8u : 4u); ++k) {
      std::vector<std::uint64_t> c(k + 1, 0);
      c[k] = 1;
      while (!irreducible_by_search(P(q, c))) {
        // Increment with the constant term most significant.
        int i = static_cast<int>(k) - 1;
        while (i >= 0 && ++c[i] == q) c[i--] = 0;
      }
      EXPECT_EQ(pf::least_monic_irreducible(q, k), P(q, c)) << q << " " << k;
    }
  }
}

TEST(PolyField, CyclotomicExamples) {
  EXPECT_EQ(pf::cyclotomic_decomposition(2, 7, 1).degrees, (std::vector<unsigned>{1, 3, 3}));
  const auto d = pf::cyclotomic_decomposition(3, 2, 3);
  unsigned sum = 0;
  for (auto m : d.degrees) sum += m;
  EXPECT_EQ(sum, 8u);
  EXPECT_EQ(pf::cyclotomic_decomposition(5, 2, 1).degrees, (std::vector<unsigned>{1, 1}));
  try {
    pf::cyclotomic_decomposition(2, 2, 3);
    FAIL();
  } catch (const fuchs::Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kHypothesisViolation);
  }
}

TEST(PolyField, CyclotomicSquarefreeAndOrders) {
  for (std::uint64_t q : {2, 3, 5, 7, 11, 13}) {
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
      if (p == q) continue;
      for (unsigned k = 1; fuchs::numtheory::checked_pow(p, k).value_or(99) <= 16; ++k) {
        const std::uint64_t n = *fuchs::numtheory::checked_pow(p, k);
        EXPECT_EQ(pf::squarefree_status(PrimeFieldPoly::x_pow_minus_one(q, n)),
                  pf::SquarefreeStatus::kCoprimeToDerivative);
        // Every degree divides ord_{p^k}(q).
        std::uint64_t ord = 1, x = q % n;
        while (x != 1 % n) {
          x = x * q % n;
          ++ord;
        }
        const auto d = pf::cyclotomic_decomposition(q, p, k);
        unsigned sum = 0;
        for (auto m : d.degrees) {
          EXPECT_EQ(ord % m, 0u) << q << " " << p << " " << k;
          sum += m;
        }
        EXPECT_EQ(sum, n);
      }
    }
  }
}

TEST(PolyField, CyclotomicUnitCountMatchesRing) {
  for (std::uint64_t q : {2, 3, 5, 7}) {
    for (std::uint64_t p : {2, 3, 5, 7}) {
      if (p == q) continue;
      for (unsigned k = 1; k <= 4; ++k) {
        const auto n = fuchs::numtheory::checked_pow(p, k);
        if (!n || *n > 16) break;
        const auto size = fuchs::numtheory::checked_pow(q, static_cast<std::uint32_t>(*n));
        if (!size || *size > (1u << 16)) break;
        fuchs::Coeffs top(*n, 0);
        top[0] = 1;
        auto r = fuchs::mk_poly_quotient(q, std::vector<std::uint64_t>(*n, q), top);
        std::uint64_t predicted = 1;
        for (auto o : pf::cyclotomic_decomposition(q, p, k).unit_cyclic_orders()) predicted *= o;
        EXPECT_EQ(fuchs::unitgroup::unit_indices(*r).size(), predicted) << q << " " << p << " " << k;
      }
    }
  }
}

TEST(PolyField, Char0Identities) {
  EXPECT_TRUE(pf::char0_inverse_identity());
  // 1 + x^2 (x^4 + 1) is not the product.
  EXPECT_FALSE(pf::product_identity_holds({1, 0, -1, 1}, {1, 1, 1}, {1, 0, 1, 0, 0, 0, 1}));
  EXPECT_TRUE(pf::product_identity_holds({1, 1, 1}, {1, 0, -1, 1}, {1, 1, 0, 0, 0, 1}));
  EXPECT_EQ(pf::zeta8_unit_circle_check(), (pf::QuadInt{3, 2}));
  EXPECT_EQ(pf::zeta8_squared_modulus({1, 0, 0, 0}), (pf::QuadInt{1, 0}));
  EXPECT_EQ(pf::zeta8_squared_modulus({0, 1, 0, 0}), (pf::QuadInt{1, 0}));
  EXPECT_FALSE(pf::has_low_degree_integer_factor({1, 0, 0, 0, 1}));
  EXPECT_TRUE(pf::has_low_degree_integer_factor({-1, 0, 0, 0, 1}));
  EXPECT_TRUE(pf::has_low_degree_integer_factor({4, 0, 0, 0, 1}));  // (x^2+2x+2)(x^2-2x+2)
}

TEST(PolyField, IntPolyRemainder) {
  // x^5 mod (x^4 + 1) = -x
  EXPECT_EQ(pf::int_poly_rem_monic({0, 0, 0, 0, 0, 1}, {1, 0, 0, 0, 1}), (pf::IntPoly{0, -1}));
  EXPECT_EQ(pf::int_poly_mul({1, 1}, {1, -1}), (pf::IntPoly{1, 0, -1}));
}
