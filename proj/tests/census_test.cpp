// Copyright 2026 The fuchs Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <set>

#include "core/census.hpp"
#include "core/finring.hpp"
#include "core/unitgroup.hpp"
#include "test_util.hpp"

using namespace fuchs;
using namespace fuchs::census;

namespace {

std::set<std::string> structures(const std::vector<CensusEntry>& entries) {
  std::set<std::string> out;
  for (const auto& e : entries) out.insert(e.unit_structure.to_string());
  return out;
}

// Every commutative table on [2, 2]: e_1^2 = a + b e_1 for a, b in F_2.
std::size_t valid_rank2_f2_tables() {
  std::size_t count = 0;
  for (std::uint64_t a = 0; a < 2; ++a) {
    for (std::uint64_t b = 0; b < 2; ++b) {
      RingPresentation p;
      p.characteristic = 2;
      p.orders = {2, 2};
      p.products = {{1, 0}, {0, 1}, {0, 1}, {a, b}};
      count += validate_axioms(p).ok;
    }
  }
  return count;
}

}  // namespace

TEST(Census, Examples) {
  const auto z4 = enumerate_rings({4});
  ASSERT_EQ(z4.size(), 1u);
  EXPECT_EQ(z4[0].unit_structure.to_string(), "C_2");
  EXPECT_TRUE(structures(enumerate_rings({4, 2})).count("C_4"));
  const auto f2 = structures(enumerate_rings({2, 2}, {false, 1}));
  EXPECT_TRUE(f2.count("C_3"));
  EXPECT_TRUE(f2.count("C_2"));
  EXPECT_TRUE(f2.count("C_1"));
  EXPECT_EQ(enumerate_rings({2, 2}, {false, 1}).size(), valid_rank2_f2_tables());
}

TEST(Census, EntriesAreValidAndConsistent) {
  for (const auto& type : additive_types(16)) {
    for (const auto& e : enumerate_rings(type)) {
      ASSERT_TRUE(validate_axioms(e.ring->presentation()));
      ASSERT_EQ(e.unit_structure, unitgroup::group_structure(*e.ring));
      ASSERT_EQ(e.order, e.ring->order());
      ASSERT_EQ(e.characteristic, e.ring->characteristic());
      ASSERT_EQ(e.signature, ring_signature(*e.ring, e.unit_structure));
    }
  }
}

TEST(Census, AdditiveTypes) {
  const auto t8 = additive_types(8);
  // [2], [3], [4], [2,2], [5], [6], [7], [8], [4,2], [2,2,2]
  EXPECT_EQ(t8.size(), 10u);
  for (std::size_t i = 1; i < t8.size(); ++i) {
    std::uint64_t a = 1, b = 1;
    for (auto d : t8[i - 1]) a *= d;
    for (auto d : t8[i]) b *= d;
    EXPECT_LE(a, b);
  }
  for (const auto& t : additive_types(64, 4)) {
    EXPECT_EQ(t[0], 4u);
    for (std::size_t i = 1; i < t.size(); ++i) {
      EXPECT_EQ(t[i - 1] % t[i], 0u);
      EXPECT_GE(t[i], 2u);
    }
  }
}

TEST(Census, DedupeKeepsEveryStructure) {
  for (const auto& type : std::vector<std::vector<std::uint64_t>>{{2, 2, 2}, {4, 2}, {4, 4}, {2, 2, 2, 2}}) {
    const auto raw = enumerate_rings(type, {false, 1});
    const auto dedup = enumerate_rings(type, {true, 1});
    EXPECT_LE(dedup.size(), raw.size());
    EXPECT_EQ(structures(raw), structures(dedup));
  }
}

TEST(Census, RawCountMatchesBruteForceAtRank3) {
  // All commutative tables for [2,2,2] filtered by the axiom checker alone.
  std::size_t expected = 0;
  for (std::uint64_t mask = 0; mask < (1u << 9); ++mask) {
    auto v = [&](int k) { return Coeffs{(mask >> (3 * k)) & 1, (mask >> (3 * k + 1)) & 1, (mask >> (3 * k + 2)) & 1}; };
    RingPresentation p;
    p.characteristic = 2;
    p.orders = {2, 2, 2};
    p.products = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 1, 0}, v(0), v(1), {0, 0, 1}, v(1), v(2)};
    expected += validate_axioms(p).ok;
  }
  EXPECT_EQ(enumerate_rings({2, 2, 2}, {false, 1}).size(), expected);
}

TEST(Census, WorkersDoNotChangeOutput) {
  for (const auto& type : std::vector<std::vector<std::uint64_t>>{{2, 2, 2, 2}, {4, 2, 2}, {4, 4}}) {
    const auto a = enumerate_rings(type, {true, 1});
    const auto b = enumerate_rings(type, {true, 4});
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      EXPECT_EQ(to_json(a[i]).dump(), to_json(b[i]).dump());
    }
  }
}

TEST(Census, Char4HasNoLargeCyclicUnits) {
  for (const auto& type : additive_types(16, 4)) {
    for (const auto& e : enumerate_rings(type)) {
      const auto& g = e.unit_structure;
      EXPECT_FALSE(unitgroup::is_cyclic(g) && g.order() >= 8) << serialize(*e.ring);
    }
  }
}
