// Copyright 2026 The fuchs Authors
// SPDX-License-Identifier: Apache-2.0

// Verification suites that recompute each step of the classification by
// exact arithmetic and bounded exhaustive search.

#ifndef FUCHS_CORE_VERIFIER_HPP
#define FUCHS_CORE_VERIFIER_HPP

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace fuchs::verifier {

struct CaseResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  std::string check;
  std::string citation;
  std::string label;  // e.g. "verified up to order 16"; empty when unbounded
  std::vector<CaseResult> cases;

  // Conjunction of the case outcomes; false for an empty report.
  bool passed() const;
  void add(std::string name, bool ok, std::string detail = {});

  nlohmann::json to_json() const;
  std::string to_text() const;
};

struct VerifyOptions {
  std::uint64_t order_bound = 16;
  std::uint64_t seed = 20260101;
  std::uint64_t trials = 10000;
  unsigned workers = 1;
  std::uint64_t specialization_bound = 256;
};

VerificationReport verify_theorem_table(const VerifyOptions& options = {});
VerificationReport verify_char2_quotients();
VerificationReport verify_char0_obstruction();
VerificationReport verify_char4_no_C8(const VerifyOptions& options = {});
VerificationReport verify_census_oracle(const VerifyOptions& options = {});
VerificationReport verify_cyclotomic_cases(const VerifyOptions& options = {});
VerificationReport verify_lemma_power_equations();
VerificationReport verify_ordgroup_properties(const VerifyOptions& options = {});
VerificationReport verify_specialization(const VerifyOptions& options = {});

// table, char2, char0, char4, census, cyclotomic, lemmas,
// ordgroup-properties, specialization.
const std::vector<std::string>& suite_names();
// One report per suite; "all" runs every suite in suite_names() order.
// Throws kUnknownSuite for other names.
std::vector<VerificationReport> run_suite(const std::string& name, const VerifyOptions& options = {});

nlohmann::json reports_to_json(const std::vector<VerificationReport>& reports);

}  // namespace fuchs::verifier

#endif  // FUCHS_CORE_VERIFIER_HPP
