// Copyright 2026 The fuchs Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <random>

#include "core/census.hpp"
#include "core/error.hpp"
#include "core/finring.hpp"
#include "core/numtheory.hpp"
#include "core/unitgroup.hpp"
#include "test_util.hpp"

using namespace fuchs;

namespace {

void expect_error(ErrorCode code, const std::function<void()>& body) {
  try {
    body();
    ADD_FAILURE() << "expected " << error_code_name(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

RingPtr z4x() { return mk_poly_quotient(4, {4, 2}, {2, 0}); }

std::vector<RingPtr> small_rings() {
  return {mk_zn(2),
          mk_zn(6),
          mk_zn(12),
          z4x(),
          mk_poly_quotient(2, {2, 2, 2}, {0, 0, 0}),
          mk_poly_quotient(3, {3, 3}, {1, 0}),
          mk_finite_field(2, 2),
          mk_finite_field(3, 2),
          mk_product(mk_zn(4), mk_zn(2)),
          mk_product(mk_finite_field(2, 2), mk_zn(3)),
          mk_product(mk_zn(6), mk_zn(4))};
}

}  // namespace

TEST(FinRing, ZnExamples) {
  EXPECT_EQ(unitgroup::unit_indices(*mk_zn(4)).size(), 2u);
  EXPECT_EQ(unitgroup::unit_indices(*mk_zn(2)).size(), 1u);
  EXPECT_EQ(unitgroup::unit_indices(*mk_zn(6)).size(), 2u);
  EXPECT_EQ(mk_zn(4)->label(), "Z4");
  expect_error(ErrorCode::kInvalidCharacteristic, [] { mk_zn(1); });
  expect_error(ErrorCode::kInvalidCharacteristic, [] { mk_zn(0); });
}

TEST(FinRing, PolyQuotientExamples) {
  const auto r = z4x();
  EXPECT_EQ(r->order(), 8u);
  EXPECT_EQ(r->characteristic(), 4u);
  EXPECT_EQ(r->label(), "Z4[x]/(x^2-2,2x)");
  const auto f = mk_poly_quotient(2, {2, 2, 2}, {0, 0, 0});
  EXPECT_EQ(unitgroup::unit_indices(*f).size(), 4u);
  Coeffs top(8, 0);
  top[0] = 1;
  EXPECT_EQ(mk_poly_quotient(2, std::vector<std::uint64_t>(8, 2), top)->order(), 256u);
}

TEST(FinRing, FiniteFields) {
  const auto f9 = mk_finite_field(3, 2);
  EXPECT_EQ(f9->order(), 9u);
  EXPECT_EQ(unitgroup::group_structure(*f9).invariant_factors, (std::vector<std::uint64_t>{8}));
  EXPECT_EQ(serialize(*f9), "char=3; orders=3,3; top=2,0");
  EXPECT_EQ(unitgroup::group_structure(*mk_finite_field(2, 3)).invariant_factors, (std::vector<std::uint64_t>{7}));
  EXPECT_TRUE(unitgroup::group_structure(*mk_finite_field(2, 1)).invariant_factors.empty());
  EXPECT_EQ(mk_finite_field(2, 1)->label(), "F2");
  EXPECT_EQ(mk_finite_field(5, 2)->label(), "F25");
  // Every F_q up to 1024 is a field: q - 1 units, cyclic.
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 31}) {
    for (unsigned k = 1; k <= 10; ++k) {
      const auto q = numtheory::checked_pow(p, k);
      if (!q || *q > 1024) break;
      const auto g = unitgroup::group_structure(*mk_finite_field(p, k));
      EXPECT_EQ(g.order(), *q - 1);
      EXPECT_TRUE(unitgroup::is_cyclic(g)) << p << "^" << k;
    }
  }
}

TEST(FinRing, Products) {
  const auto a = mk_product(mk_zn(3), mk_zn(2));
  EXPECT_EQ(a->characteristic(), 6u);
  EXPECT_EQ(unitgroup::unit_indices(*a).size(), 2u);
  const auto b = mk_product(mk_finite_field(3, 2), mk_zn(2));
  EXPECT_EQ(b->characteristic(), 6u);
  EXPECT_EQ(unitgroup::group_structure(*b).invariant_factors, (std::vector<std::uint64_t>{8}));
  EXPECT_EQ(unitgroup::unit_indices(*mk_product(mk_zn(2), mk_zn(2))).size(), 1u);
  EXPECT_EQ(serialize(*mk_product(mk_zn(4), mk_zn(2))), "char=4; orders=4,2; table=[0,1]");
}

TEST(FinRing, ProductUnitCountsMultiply) {
  const auto rings = small_rings();
  for (std::size_t i = 0; i < rings.size(); ++i) {
    for (std::size_t j = 0; j < rings.size(); ++j) {
      if (rings[i]->order() * rings[j]->order() > 2000) continue;
      const auto p = mk_product(rings[i], rings[j]);
      EXPECT_EQ(p->order(), rings[i]->order() * rings[j]->order());
      EXPECT_EQ(p->characteristic(), std::lcm(rings[i]->characteristic(), rings[j]->characteristic()));
      EXPECT_EQ(unitgroup::unit_indices(*p).size(),
                unitgroup::unit_indices(*rings[i]).size() * unitgroup::unit_indices(*rings[j]).size())
          << p->label();
    }
  }
}

TEST(FinRing, AxiomValidation) {
  EXPECT_TRUE(validate_axioms(mk_zn(4)->presentation()));
  EXPECT_TRUE(validate_axioms(mk_finite_field(2, 3)->presentation()));
  RingPresentation forged;
  forged.characteristic = 4;
  forged.orders = {4, 2};
  forged.products = {{1, 0}, {0, 1}, {0, 1}, {1, 1}};
  const auto report = validate_axioms(forged);
  ASSERT_FALSE(report);
  ASSERT_TRUE(report.witness);
  EXPECT_EQ(report.witness->axiom, "order-consistency");
  expect_error(ErrorCode::kInvalidPresentation, [] { mk_poly_quotient(4, {4, 2}, {1, 1}); });

  RingPresentation noncomm = mk_poly_quotient(2, {2, 2, 2}, {0, 0, 0})->presentation();
  noncomm.products[1 * 3 + 2] = {1, 0, 0};
  const auto rep2 = validate_axioms(noncomm);
  ASSERT_FALSE(rep2);
  EXPECT_EQ(rep2.witness->axiom, "commutativity");

  // a^2 = b, ab = 0, b^2 = a: (aa)b = a but a(ab) = 0.
  RingPresentation nonassoc;
  nonassoc.characteristic = 2;
  nonassoc.orders = {2, 2, 2};
  nonassoc.products = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 1, 0}, {0, 0, 1},
                       {0, 0, 0}, {0, 0, 1}, {0, 0, 0}, {0, 1, 0}};
  const auto rep3 = validate_axioms(nonassoc);
  ASSERT_FALSE(rep3);
  EXPECT_EQ(rep3.witness->axiom, "associativity");
}

TEST(FinRing, ElementArithmetic) {
  const auto r = z4x();
  const auto x = basis_element(r, 1);
  EXPECT_EQ((x * x).to_string(), "2");
  const auto s = mk_poly_quotient(2, {2, 2, 2, 2}, {0, 0, 0, 0});
  const auto y = one(s) + pow(basis_element(s, 1), 3);
  EXPECT_TRUE(y * y == one(s));
  const auto a = one(r) + x;
  EXPECT_TRUE(a + zero(r) == a);
  expect_error(ErrorCode::kRingMismatch, [&] { (void)(one(r) + one(s)); });
}

TEST(FinRing, RingLawsExhaustive) {
  for (const auto& r : small_rings()) {
    const auto n = r->order();
    if (n > 64) continue;
    for (std::uint64_t i = 0; i < n; ++i) {
      const auto a = r->element_at(i);
      ASSERT_EQ(r->index_of(a), i);
      ASSERT_EQ(r->mul(a, r->one()), a);
      for (std::uint64_t j = 0; j < n; ++j) {
        const auto b = r->element_at(j);
        ASSERT_EQ(r->mul(a, b), r->mul(b, a));
        for (std::uint64_t k = 0; k < n; k += 3) {
          const auto c = r->element_at(k);
          ASSERT_EQ(r->mul(r->mul(a, b), c), r->mul(a, r->mul(b, c))) << r->label();
          ASSERT_EQ(r->mul(a, r->add(b, c)), r->add(r->mul(a, b), r->mul(a, c))) << r->label();
        }
      }
    }
  }
}

RingElement scalar(const RingPtr& r, std::uint64_t n) {
  return RingElement(r, r->scale(r->one(), n));
}

TEST(FinRing, QuotientExamples) {
  const auto z6 = mk_zn(6);
  const std::vector<RingElement> g2{scalar(z6, 2)};
  const auto q2 = quotient_by_ideal(z6, g2);
  EXPECT_EQ(q2.ring->order(), 2u);
  EXPECT_EQ(q2.ring->characteristic(), 2u);
  EXPECT_EQ(q2.ideal_size(), 3u);

  const auto r = z4x();
  const std::vector<RingElement> two{scalar(r, 2)};
  const auto q = quotient_by_ideal(r, two);
  EXPECT_EQ(q.ring->order(), 4u);
  EXPECT_EQ(q.ring->characteristic(), 2u);
  EXPECT_EQ(q.ideal_size(), 2u);

  const std::vector<RingElement> none{zero(r)};
  const auto same = quotient_by_ideal(r, none);
  EXPECT_EQ(same.ring->order(), r->order());
  EXPECT_EQ(unitgroup::group_structure(*same.ring), unitgroup::group_structure(*r));

  const std::vector<RingElement> unit{one(r)};
  expect_error(ErrorCode::kInvalidPresentation, [&] { quotient_by_ideal(r, unit); });
}

TEST(FinRing, QuotientIsHomomorphism) {
  for (const auto& r : small_rings()) {
    if (r->order() > 64) continue;
    for (std::uint64_t gi = 0; gi < r->order(); gi += 5) {
      const std::vector<RingElement> gens{RingElement(r, r->element_at(gi))};
      std::optional<Quotient> q;
      try {
        q = quotient_by_ideal(r, gens);
      } catch (const Error& e) {
        ASSERT_EQ(e.code(), ErrorCode::kInvalidPresentation);
        continue;
      }
      ASSERT_TRUE(validate_axioms(q->ring->presentation()));
      ASSERT_EQ(q->ring->order() * q->ideal_size(), r->order());
      for (std::uint64_t i = 0; i < r->order(); ++i) {
        const RingElement a(r, r->element_at(i));
        for (std::uint64_t j = 0; j < r->order(); ++j) {
          const RingElement b(r, r->element_at(j));
          ASSERT_TRUE(q->project(a * b) == q->project(a) * q->project(b));
          ASSERT_TRUE(q->project(a + b) == q->project(a) + q->project(b));
        }
      }
      ASSERT_TRUE(q->project(one(r)) == one(q->ring));
    }
  }
}

// R -> R/(2) x R/(q) is a bijection for every ring of characteristic 2q.
TEST(FinRing, ChineseRemainderSplitting) {
  std::size_t checked = 0;
  for (std::uint64_t oddq : {3, 5, 7}) {
    for (const auto& type : census::additive_types(64, 2 * oddq)) {
      for (const auto& e : census::enumerate_rings(type, {false, 1})) {
        const auto& r = e.ring;
        const auto a = quotient_by_ideal(r, std::vector<RingElement>{scalar(r, 2)});
        const auto b = quotient_by_ideal(r, std::vector<RingElement>{scalar(r, oddq)});
        ASSERT_EQ(a.ring->characteristic(), 2u);
        ASSERT_EQ(b.ring->characteristic(), oddq);
        std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
        for (std::uint64_t i = 0; i < r->order(); ++i) seen.emplace(a.image[i], b.image[i]);
        ASSERT_EQ(seen.size(), r->order()) << serialize(*r);
        ASSERT_EQ(a.ring->order() * b.ring->order(), r->order());
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 10u);
}

TEST(FinRing, SerializeRoundTrip) {
  for (const auto& r : small_rings()) {
    const auto back = parse_presentation(serialize(*r));
    EXPECT_TRUE(back->same_structure(*r)) << serialize(*r);
    EXPECT_EQ(serialize(*back), serialize(*r));
  }
  expect_error(ErrorCode::kParse, [] { parse_presentation("char=4; orders=4,2"); });
  expect_error(ErrorCode::kInvalidPresentation, [] { parse_presentation("char=4; orders=4,2; top=1,1"); });
}

TEST(FinRing, SizeGuardrail) {
  const auto saved = max_ring_order();
  set_max_ring_order(100);
  expect_error(ErrorCode::kSizeLimit, [] { mk_finite_field(2, 8); });
  set_max_ring_order(saved);
  EXPECT_EQ(mk_finite_field(2, 8)->order(), 256u);
}
