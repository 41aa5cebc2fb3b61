// Copyright 2026 The fuchs Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance run: one PASS/FAIL line per criterion. Each criterion yields a
// JSON report; criterion 9 reruns 1-8 with another worker count and compares
// the reports byte for byte. Exit status is 0 iff every line is PASS.
//
//   fuchs_acceptance [--workers N] [--alt-workers M] [--report FILE]

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "core/classify.hpp"
#include "core/finring.hpp"
#include "core/numtheory.hpp"
#include "core/ordgroup.hpp"
#include "core/polyfield.hpp"
#include "core/unitgroup.hpp"
#include "core/verifier.hpp"

namespace {

using namespace fuchs;
using nlohmann::json;
using verifier::VerificationReport;
using verifier::VerifyOptions;
namespace nt = fuchs::numtheory;

constexpr std::uint64_t kSeed = 20260101;

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  std::function<std::vector<VerificationReport>(unsigned workers)> run;
};

VerifyOptions options(unsigned workers) {
  VerifyOptions o;
  o.order_bound = 16;
  o.seed = kSeed;
  o.trials = 10000;
  o.workers = workers;
  o.specialization_bound = 256;
  return o;
}

// ---- 1: classification table ----

std::vector<VerificationReport> table_rows(unsigned workers) {
  VerificationReport extra;
  extra.check = "table-instances";
  extra.citation = "classification-table";
  struct Row {
    std::uint64_t c, m;
    const char* witness;
  };
  std::vector<Row> rows{{2, 1, "F2"}, {2, 2, "F2[x]/(x^2)"}, {2, 4, "F2[x]/(x^3)"}, {2, 3, "F4"},
                        {2, 7, "F8"}, {2, 31, "F32"}, {2, 127, "F128"}, {4, 2, "Z4"},
                        {4, 4, "Z4[x]/(x^2-2,2x)"}, {3, 2, "F3"}, {3, 8, "F9"}, {6, 2, "F3 x F2"},
                        {6, 8, "F9 x F2"}, {5, 4, "F5"}, {17, 16, "F17"}, {257, 256, "F257"},
                        {10, 4, "F5 x F2"}, {34, 16, "F17 x F2"}, {514, 256, "F257 x F2"}};
  for (const auto& row : rows) {
    const auto d = classify::GroupDescriptor::finite_abelian({row.m});
    const auto w = classify::witness(d, row.c);
    const std::string name = "char " + std::to_string(row.c) + " " + d.to_string();
    if (!w.ring) {
      extra.add(name, false, "no finite carrier");
      continue;
    }
    const auto units = unitgroup::group_structure(*w.ring, workers);
    const bool ok = w.label == row.witness && w.ring->characteristic() == row.c &&
                    units == unitgroup::AbelianGroupStructure::from_cyclic_orders({row.m}) &&
                    unitgroup::unit_indices(*w.ring, workers).size() == row.m;
    extra.add(name, ok, w.label + ": units " + units.to_string());
  }
  return {verifier::verify_theorem_table(options(workers)), extra};
}

// ---- 2: truncated polynomial rings over F2 ----

std::vector<VerificationReport> char2_facts(unsigned workers) {
  VerificationReport extra;
  extra.check = "truncated-f2";
  extra.citation = "char-2";
  for (unsigned t = 1; t <= 8; ++t) {
    const auto r = mk_poly_quotient(2, std::vector<std::uint64_t>(t, 2), Coeffs(t, 0));
    const auto units = unitgroup::group_structure(*r, workers);
    bool ok = units.order() == (std::uint64_t{1} << (t - 1));
    std::string detail = std::to_string(units.order()) + " units, " + units.to_string();
    if (t >= 4) {
      ok = ok && !unitgroup::is_cyclic(units);
      for (unsigned e : {t - 1, t - 2}) {
        const auto v = one(r) + pow(basis_element(r, 1), e);
        ok = ok && v * v == one(r) && !(v == one(r));
      }
      detail += ", 1 + x^" + std::to_string(t - 1) + " and 1 + x^" + std::to_string(t - 2) + " square to 1";
    }
    extra.add("t = " + std::to_string(t), ok, detail);
  }
  return {verifier::verify_char2_quotients(), extra};
}

// ---- 3: characteristic zero obstruction ----

std::vector<VerificationReport> char0(unsigned) {
  VerificationReport extra;
  extra.check = "char0-identities";
  extra.citation = "char-0";
  const polyfield::IntPoly prod = polyfield::int_poly_mul({1, 0, -1, 1}, {1, 1, 1});
  const auto rem = polyfield::int_poly_rem_monic(prod, {1, 0, 0, 0, 1});
  extra.add("product mod x^4 + 1", rem == polyfield::IntPoly{1}, "remainder has " + std::to_string(rem.size()) + " terms");
  const auto m = polyfield::zeta8_unit_circle_check();
  extra.add("|1 + z + z^2|^2", m == polyfield::QuadInt{3, 2} && !(m == polyfield::QuadInt{1, 0}),
            std::to_string(m.a) + " + " + std::to_string(m.b) + "*sqrt(2)");
  return {verifier::verify_char0_obstruction(), extra};
}

// ---- 4: x^(p^k) - 1 cases ----

std::vector<VerificationReport> cyclotomic(unsigned workers) {
  const auto r = verifier::verify_cyclotomic_cases(options(workers));
  VerificationReport extra;
  extra.check = "cyclotomic-count";
  extra.citation = "char-odd-prime-power-order";
  extra.add("eight cases", r.cases.size() == 8, std::to_string(r.cases.size()) + " cases");
  return {r, extra};
}

// ---- 5: q^m - 1 = p^r ----

std::vector<VerificationReport> lemmas(unsigned) {
  VerificationReport extra;
  extra.check = "power-equation-scan";
  extra.citation = "power-equations";
  std::uint64_t solutions = 0, exceptions = 0;
  for (std::uint64_t q = 2; q <= 50; ++q) {
    if (!nt::is_prime(q)) continue;
    for (const auto& s : nt::solve_power_equation(q, 30)) {
      ++solutions;
      nt::BigInt lhs = boost::multiprecision::pow(nt::BigInt(q), s.m) - 1;
      nt::BigInt rhs = boost::multiprecision::pow(nt::BigInt(s.p), s.r);
      const bool exact = lhs == rhs && nt::is_prime(s.p);
      const bool dichotomy = s.p == 2 ? ((nt::is_fermat_prime(q) && s.m == 1) || (q == 3 && s.m == 2))
                                      : (s.r == 1 && q == 2 && nt::is_mersenne_prime(s.p));
      if (!exact || !dichotomy) ++exceptions;
    }
  }
  extra.add("q <= 50, m <= 30", exceptions == 0 && solutions > 0,
            std::to_string(solutions) + " solutions, " + std::to_string(exceptions) + " exceptions");
  return {verifier::verify_lemma_power_equations(), extra};
}

// ---- 6: bounded census ----

std::vector<VerificationReport> census(unsigned workers) {
  return {verifier::verify_char4_no_C8(options(workers)), verifier::verify_census_oracle(options(workers))};
}

// ---- 7: F2[G] sampling ----

std::vector<VerificationReport> torsion_free(unsigned workers) {
  VerificationReport extra;
  extra.check = "group-algebra-sampling";
  extra.citation = "torsion-free";
  const auto results = ordgroup::run_property_suite({kSeed, 10000, workers});
  for (const auto& r : results) {
    extra.add(r.group + " " + r.property, r.passed(),
              std::to_string(r.trials) + " trials, " + std::to_string(r.failures) + " failures" +
                  (r.first_failure.empty() ? "" : ", first: " + r.first_failure));
  }
  for (const char* group : {"Z", "Z^2", "Z[1/2]"}) {
    for (const char* prop : {"no-nontrivial-units", "extremal-terms", "singleton-units"}) {
      const bool present = std::any_of(results.begin(), results.end(), [&](const ordgroup::PropertyResult& r) {
        return r.group == group && r.property == prop && r.trials >= (std::string(prop) == "singleton-units" ? 1 : 10000);
      });
      extra.add(std::string(group) + " " + prop + " sampled", present);
    }
  }
  return {extra};
}

// ---- 8: specialization remark ----

std::vector<VerificationReport> specialization(unsigned workers) {
  return {verifier::verify_specialization(options(workers))};
}

bool all_passed(const std::vector<VerificationReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const VerificationReport& r) { return r.passed(); });
}

json to_json(const std::vector<VerificationReport>& reports) { return verifier::reports_to_json(reports); }

void print_failures(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports) {
    for (const auto& c : r.cases) {
      if (!c.passed) std::cout << "    failed: " << r.check << " / " << c.name << ": " << c.detail << "\n";
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  unsigned workers = 1, alt_workers = 4;
  std::string report_path;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    auto next = [&]() -> std::string {
      if (i + 1 >= argc) {
        std::cerr << a << " needs a value\n";
        std::exit(2);
      }
      return argv[++i];
    };
    if (a == "--workers") {
      workers = static_cast<unsigned>(std::stoul(next()));
    } else if (a == "--alt-workers") {
      alt_workers = static_cast<unsigned>(std::stoul(next()));
    } else if (a == "--report") {
      report_path = next();
    } else {
      std::cerr << "usage: fuchs_acceptance [--workers N] [--alt-workers M] [--report FILE]\n";
      return 2;
    }
  }
  if (workers == alt_workers) alt_workers = workers + 3;

  const std::vector<Criterion> criteria{
      {1, "classification table witnesses", 30, table_rows},
      {2, "F2[x]/(x^t) unit counts and involutions", 5, char2_facts},
      {3, "characteristic 0 obstruction identities", 1, char0},
      {4, "x^(p^k) - 1 unit structure cross-check", 60, cyclotomic},
      {5, "q^m - 1 = p^r scan", 10, lemmas},
      {6, "bounded census: no C8 in char 4, census matches prediction", 600, census},
      {7, "F2[G] has only trivial units (sampled)", 30, torsion_free},
      {8, "specialization pairs", 5, specialization},
  };

  bool ok = true;
  json full = json::object();
  std::vector<std::string> first_run;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<VerificationReport> reports;
    std::string error;
    try {
      reports = c.run(workers);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool within = secs <= c.budget_seconds;
    const bool pass = error.empty() && all_passed(reports) && within;
    ok = ok && pass;
    char timing[96];
    std::snprintf(timing, sizeof timing, "%.2fs, budget %.0fs", secs, c.budget_seconds);
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << timing << ")";
    if (!error.empty()) std::cout << " error: " << error;
    if (!within) std::cout << " over budget";
    std::cout << "\n";
    print_failures(reports);
    const auto j = to_json(reports);
    first_run.push_back(j.dump());
    full[std::to_string(c.id)] = j;
  }

  // Criterion 9: same reports with another worker count.
  bool same = true;
  std::string diff;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string again;
    try {
      again = to_json(criteria[i].run(alt_workers)).dump();
    } catch (const std::exception& e) {
      again = std::string("error: ") + e.what();
    }
    if (again != first_run[i]) {
      same = false;
      diff += " " + std::to_string(criteria[i].id);
    }
  }
  ok = ok && same;
  std::cout << (same ? "PASS" : "FAIL") << " criterion 9: byte-identical reports with " << workers << " and "
            << alt_workers << " workers";
  if (!same) std::cout << " (differs:" << diff << ")";
  std::cout << "\n";

  if (!report_path.empty()) {
    std::ofstream out(report_path);
    out << full.dump(2) << "\n";
  }
  return ok ? 0 : 1;
}
