// Copyright 2026 The fuchs Authors
// SPDX-License-Identifier: Apache-2.0

// Exercises the shared library through its C header only.

#include <gtest/gtest.h>
#include <json.hpp>

#include <string>

#include "fuchs/fuchs.h"

using nlohmann::json;

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  fuchs_string_free(s);
  return out;
}

}  // namespace

TEST(CApi, Basics) {
  EXPECT_STREQ(fuchs_version(), "1.0.0");
  EXPECT_STREQ(fuchs_status_name(FUCHS_ERR_SIZE_LIMIT), "size-limit");
  EXPECT_EQ(fuchs_is_prime(257), 1);
  EXPECT_EQ(fuchs_is_prime(129), 0);
  EXPECT_EQ(fuchs_is_mersenne_prime(7), 1);
  EXPECT_EQ(fuchs_is_fermat_prime(257), 1);
  EXPECT_EQ(fuchs_has_cyclic_units_mod(8), 0);
  std::uint64_t phi = 0;
  EXPECT_EQ(fuchs_euler_phi(9, &phi), FUCHS_OK);
  EXPECT_EQ(phi, 6u);
}

TEST(CApi, NullArguments) {
  EXPECT_EQ(fuchs_ring_parse(nullptr, nullptr), FUCHS_ERR_INVALID_ARGUMENT);
  EXPECT_NE(std::string(fuchs_last_error()), "");
  EXPECT_EQ(fuchs_group_print(nullptr, nullptr), FUCHS_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(fuchs_euler_phi(4, nullptr), FUCHS_ERR_INVALID_ARGUMENT);
  fuchs_ring_free(nullptr);
  fuchs_group_free(nullptr);
  fuchs_string_free(nullptr);
}

TEST(CApi, RingUnits) {
  fuchs_ring* r = nullptr;
  ASSERT_EQ(fuchs_ring_parse("Z4[x]/(x^2-2,2x)", &r), FUCHS_OK);
  std::uint64_t order = 0, c = 0;
  EXPECT_EQ(fuchs_ring_order(r, &order), FUCHS_OK);
  EXPECT_EQ(fuchs_ring_characteristic(r, &c), FUCHS_OK);
  EXPECT_EQ(order, 8u);
  EXPECT_EQ(c, 4u);
  char* out = nullptr;
  ASSERT_EQ(fuchs_ring_units_json(r, 2, &out), FUCHS_OK);
  const auto j = json::parse(take(out));
  EXPECT_EQ(j["unit_count"], 4);
  EXPECT_EQ(j["structure"], "C_4");
  EXPECT_EQ(j["cyclic"], true);
  ASSERT_EQ(fuchs_ring_presentation(r, &out), FUCHS_OK);
  const auto pres = take(out);
  EXPECT_EQ(pres, "char=4; orders=4,2; top=2,0");
  fuchs_ring_free(r);

  ASSERT_EQ(fuchs_ring_from_presentation(pres.c_str(), &r), FUCHS_OK);
  ASSERT_EQ(fuchs_ring_label(r, &out), FUCHS_OK);
  EXPECT_EQ(take(out), "Z4[x]/(x^2-2,2x)");
  ASSERT_EQ(fuchs_ring_presentation(r, &out), FUCHS_OK);
  EXPECT_EQ(take(out), pres);
  fuchs_ring_free(r);
}

TEST(CApi, ErrorStatuses) {
  fuchs_ring* r = nullptr;
  EXPECT_EQ(fuchs_ring_parse("GF(6)", &r), FUCHS_ERR_SEMANTIC);
  EXPECT_NE(std::string(fuchs_last_error()).find("prime power"), std::string::npos);
  EXPECT_EQ(fuchs_ring_parse("Z4[x]/(", &r), FUCHS_ERR_PARSE);
  EXPECT_EQ(fuchs_ring_from_presentation("char=4; orders=4,2; top=1,1", &r), FUCHS_ERR_INVALID_PRESENTATION);
  const auto saved = fuchs_max_ring_order();
  fuchs_set_max_ring_order(64);
  EXPECT_EQ(fuchs_ring_parse("F2[x]/(x^8)", &r), FUCHS_OK);
  char* out = nullptr;
  EXPECT_EQ(fuchs_ring_units_json(r, 1, &out), FUCHS_ERR_SIZE_LIMIT);
  fuchs_ring_free(r);
  fuchs_set_max_ring_order(saved);
  EXPECT_EQ(fuchs_verify_json("nope", nullptr, &out, nullptr), FUCHS_ERR_UNKNOWN_SUITE);
}

TEST(CApi, Realizability) {
  fuchs_group* g = nullptr;
  ASSERT_EQ(fuchs_group_parse("C256", &g), FUCHS_OK);
  char* out = nullptr;
  int realizable = -1;
  ASSERT_EQ(fuchs_realizable_json(g, 0, 0, &out, &realizable), FUCHS_OK);
  EXPECT_EQ(realizable, 1);
  EXPECT_EQ(json::parse(take(out))["witness"], "F257");
  ASSERT_EQ(fuchs_witness_json(g, 257, &out), FUCHS_OK);
  const auto w = json::parse(take(out));
  EXPECT_EQ(w["verified"], true);
  EXPECT_EQ(w["units"], json::array({256}));
  EXPECT_EQ(fuchs_witness_json(g, 2, &out), FUCHS_ERR_NO_WITNESS);
  fuchs_group_free(g);

  ASSERT_EQ(fuchs_group_parse("C2^inf", &g), FUCHS_OK);
  ASSERT_EQ(fuchs_realizable_json(g, 0, 0, &out, &realizable), FUCHS_OK);
  EXPECT_EQ(realizable, 0);
  EXPECT_EQ(json::parse(take(out))["reason"], "quasi-cyclic");
  fuchs_group_free(g);

  ASSERT_EQ(fuchs_group_parse("C6", &g), FUCHS_OK);
  EXPECT_EQ(fuchs_realizable_json(g, 0, 0, &out, &realizable), FUCHS_ERR_DOMAIN);
  fuchs_group_free(g);
}

TEST(CApi, FactorAndPowerEquation) {
  char* out = nullptr;
  ASSERT_EQ(fuchs_factor_json("1 + x^8 (mod 2)", 0, &out), FUCHS_OK);
  const auto j = json::parse(take(out));
  EXPECT_EQ(j["squarefree"], "zero-derivative");
  ASSERT_EQ(j["factors"].size(), 1u);
  EXPECT_EQ(j["factors"][0]["multiplicity"], 8);
  EXPECT_EQ(fuchs_factor_json("x^2+1", 0, &out), FUCHS_ERR_PARSE);
  ASSERT_EQ(fuchs_factor_json("x^2+1", 3, &out), FUCHS_OK);
  EXPECT_EQ(json::parse(take(out))["factors"].size(), 1u);
  ASSERT_EQ(fuchs_solve_power_equation_json(3, 10, &out), FUCHS_OK);
  EXPECT_EQ(json::parse(take(out)).size(), 2u);
}

TEST(CApi, VerifyAndCensus) {
  fuchs_verify_options o;
  fuchs_verify_options_init(&o);
  EXPECT_EQ(o.order_bound, 16u);
  EXPECT_EQ(o.seed, 20260101u);
  char* out = nullptr;
  int passed = 0;
  ASSERT_EQ(fuchs_verify_json("char0", &o, &out, &passed), FUCHS_OK);
  EXPECT_EQ(passed, 1);
  EXPECT_EQ(json::parse(take(out))["reports"].size(), 1u);
  ASSERT_EQ(fuchs_verify_suites(&out), FUCHS_OK);
  EXPECT_NE(take(out).find("ordgroup-properties"), std::string::npos);

  const std::uint64_t type[] = {4, 2};
  std::size_t n = 0;
  ASSERT_EQ(fuchs_enumerate_jsonl(type, 2, 1, 2, &out, &n), FUCHS_OK);
  const auto lines = take(out);
  EXPECT_GT(n, 0u);
  EXPECT_EQ(static_cast<std::size_t>(std::count(lines.begin(), lines.end(), '\n')), n);
  ASSERT_EQ(fuchs_additive_types_json(16, 1, 4, &out), FUCHS_OK);
  EXPECT_FALSE(json::parse(take(out)).empty());
  EXPECT_EQ(fuchs_additive_types_json(5000, 0, 0, &out), FUCHS_ERR_SIZE_LIMIT);
}
