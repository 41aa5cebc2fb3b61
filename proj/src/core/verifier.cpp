// Copyright 2026 The fuchs Authors
// SPDX-License-Identifier: Apache-2.0

#include "core/verifier.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "core/census.hpp"
#include "core/classify.hpp"
#include "core/error.hpp"
#include "core/finring.hpp"
#include "core/numtheory.hpp"
#include "core/ordgroup.hpp"
#include "core/polyfield.hpp"
#include "core/unitgroup.hpp"

namespace fuchs::verifier {

namespace nt = numtheory;
using unitgroup::AbelianGroupStructure;

bool VerificationReport::passed() const {
  return !cases.empty() && std::all_of(cases.begin(), cases.end(), [](const auto& c) { return c.passed; });
}

void VerificationReport::add(std::string name, bool ok, std::string detail) {
  cases.push_back({std::move(name), ok, std::move(detail)});
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json j;
  j["check"] = check;
  j["passed"] = passed();
  j["citation"] = citation;
  j["label"] = label.empty() ? nlohmann::json(nullptr) : nlohmann::json(label);
  j["cases"] = nlohmann::json::array();
  for (const auto& c : cases) j["cases"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return j;
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  out << check << ": " << (passed() ? "PASS" : "FAIL") << " (" << cases.size() << " cases";
  if (!label.empty()) out << ", " << label;
  out << ")\n";
  for (const auto& c : cases) {
    out << "  [" << (c.passed ? "ok" : "FAIL") << "] " << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << "\n";
  }
  return out.str();
}

nlohmann::json reports_to_json(const std::vector<VerificationReport>& reports) {
  nlohmann::json j;
  j["passed"] = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
  j["reports"] = nlohmann::json::array();
  for (const auto& r : reports) j["reports"].push_back(r.to_json());
  return j;
}

namespace {

std::string join(const std::vector<std::uint64_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

// Runs `body`, turning an exception into a failed case.
template <typename F>
void guarded(VerificationReport& report, const std::string& name, F&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    report.add(name, false, std::string("exception: ") + e.what());
  }
}

struct Gaussian {
  std::int64_t re = 0;
  std::int64_t im = 0;
  friend Gaussian operator*(Gaussian a, Gaussian b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const Gaussian&, const Gaussian&) = default;
};

RingPtr poly_x_pow(std::uint64_t c, std::size_t t, Coeffs top) {
  return mk_poly_quotient(c, std::vector<std::uint64_t>(t, c), std::move(top));
}

}  // namespace

// ---- classification table ------------------------------------------------------

VerificationReport verify_theorem_table(const VerifyOptions& options) {
  VerificationReport report;
  report.check = "table";
  report.citation = "classification-table";

  struct Row {
    std::uint64_t c;
    std::uint64_t group_order;  // 1 for the trivial group
    std::string label;
  };
  std::vector<Row> rows{{2, 1, "F2"}, {2, 2, "F2[x]/(x^2)"}, {2, 4, "F2[x]/(x^3)"}};
  for (std::uint64_t p : {3, 7, 31, 127}) rows.push_back({2, p, "F" + std::to_string(p + 1)});
  rows.push_back({4, 2, "Z4"});
  rows.push_back({4, 4, "Z4[x]/(x^2-2,2x)"});
  rows.push_back({3, 2, "F3"});
  rows.push_back({3, 8, "F9"});
  rows.push_back({6, 2, "F3 x F2"});
  rows.push_back({6, 8, "F9 x F2"});
  for (std::uint64_t q : {5, 17, 257}) {
    rows.push_back({q, q - 1, "F" + std::to_string(q)});
    rows.push_back({2 * q, q - 1, "F" + std::to_string(q) + " x F2"});
  }

  for (const auto& row : rows) {
    const auto group = classify::GroupDescriptor::finite_abelian({row.group_order});
    const std::string name = "char " + std::to_string(row.c) + ", " + group.to_string() + ", " + row.label;
    guarded(report, name, [&] {
      const auto w = classify::witness(group, row.c);
      if (!w.ring) {
        report.add(name, false, "witness has no finite carrier");
        return;
      }
      const auto units = unitgroup::group_structure(*w.ring, options.workers);
      const auto expected = AbelianGroupStructure::from_cyclic_orders({row.group_order});
      const bool ok = w.label == row.label && w.ring->characteristic() == row.c && units == expected;
      report.add(name, ok,
                 "witness " + w.label + ", order " + std::to_string(w.ring->order()) + ", characteristic " +
                     std::to_string(w.ring->characteristic()) + ", units " + units.to_string());
    });
  }

  // Characteristic zero: Z with units {1, -1} and Z[i] with units <i>.
  guarded(report, "char 0, C2, Z", [&] {
    const auto w = classify::witness(classify::GroupDescriptor::cyclic(2, 1), 0);
    const std::int64_t minus_one = -1;
    const bool ok = w.label == "Z" && minus_one * minus_one == 1 && minus_one != 1;
    report.add("char 0, C2, Z", ok, "(-1)^2 = 1 and -1 != 1 in Z");
  });
  guarded(report, "char 0, C4, Z[i]", [&] {
    const auto w = classify::witness(classify::GroupDescriptor::cyclic(2, 2), 0);
    const Gaussian i{0, 1};
    const auto i2 = i * i;
    const auto i4 = i2 * i2;
    const bool ok = w.label == "Z[i]" && i2 == Gaussian{-1, 0} && i4 == Gaussian{1, 0};
    report.add("char 0, C4, Z[i]", ok, "i^2 = -1 and i^4 = 1 in Z[i]");
  });

  // Torsion-free row: F2[G] has only trivial units, checked by sampling.
  guarded(report, "char 2, torsion-free G, F2[G]", [&] {
    const auto w = classify::witness(classify::GroupDescriptor::torsion_free(ordgroup::OrderedGroupSpec::lattice(1)), 2);
    const auto props = ordgroup::run_property_suite({options.seed, options.trials, options.workers});
    std::uint64_t failures = 0;
    for (const auto& p : props) failures += p.failures;
    report.add("char 2, torsion-free G, F2[G]", w.label == "F2[G]" && failures == 0,
               std::to_string(props.size()) + " sampled properties over Z, Z^2, Z[1/2], " +
                   std::to_string(failures) + " failures");
  });
  return report;
}

// ---- characteristic 2 -------------------------------------------------------------

VerificationReport verify_char2_quotients() {
  VerificationReport report;
  report.check = "char2";
  report.citation = "char-2";
  for (std::size_t t = 1; t <= 8; ++t) {
    const std::string name = "F2[x]/(x^" + std::to_string(t) + ")";
    guarded(report, name, [&] {
      const auto r = poly_x_pow(2, t, Coeffs(t, 0));
      const auto idx = unitgroup::unit_indices(*r);
      const auto units = unitgroup::structure_from_units(*r, idx);
      const std::uint64_t expected_count = std::uint64_t{1} << (t - 1);
      bool ok = idx.size() == expected_count;
      std::string detail = std::to_string(idx.size()) + " units, " + units.to_string();
      if (t == 3) ok = ok && units == AbelianGroupStructure{{4}};
      if (t >= 4) {
        ok = ok && !unitgroup::is_cyclic(units);
        for (std::size_t e : {t - 1, t - 2}) {
          Coeffs v(t, 0);
          v[0] = 1;
          v[e] = 1;
          const bool involution = r->is_one(r->mul(v, v)) && !r->is_one(v);
          ok = ok && involution;
          detail += ", (1 + x^" + std::to_string(e) + ")^2 = 1";
        }
        detail += ", not cyclic";
      }
      report.add(name, ok, detail);
    });
  }
  return report;
}

// ---- characteristic 0 -----------------------------------------------------------------

VerificationReport verify_char0_obstruction() {
  VerificationReport report;
  report.check = "char0";
  report.citation = "char-0";
  guarded(report, "(1 - x^2 + x^3)(1 + x + x^2) = 1 mod x^4 + 1", [&] {
    const polyfield::IntPoly a{1, 0, -1, 1};
    const polyfield::IntPoly b{1, 1, 1};
    const auto rem = polyfield::int_poly_rem_monic(polyfield::int_poly_mul(a, b), {1, 0, 0, 0, 1});
    const bool ok = polyfield::char0_inverse_identity() && polyfield::int_poly_trim(rem) == polyfield::IntPoly{1};
    report.add("(1 - x^2 + x^3)(1 + x + x^2) = 1 mod x^4 + 1", ok, "remainder is 1");
  });
  guarded(report, "|1 + z + z^2|^2 for a primitive 8th root z", [&] {
    const auto v = polyfield::zeta8_unit_circle_check();
    const bool ok = v == polyfield::QuadInt{3, 2} && !(v == polyfield::QuadInt{1, 0});
    report.add("|1 + z + z^2|^2 for a primitive 8th root z", ok,
               std::to_string(v.a) + " + " + std::to_string(v.b) + "*sqrt(2), not 1");
  });
  guarded(report, "x^4 + 1 irreducible over Q", [&] {
    const bool factor = polyfield::has_low_degree_integer_factor({1, 0, 0, 0, 1});
    report.add("x^4 + 1 irreducible over Q", !factor, "no monic integer factor of degree 1 or 2");
  });
  return report;
}

// ---- characteristic 4 census ------------------------------------------------------------

VerificationReport verify_char4_no_C8(const VerifyOptions& options) {
  VerificationReport report;
  report.check = "char4";
  report.citation = "char-4";
  report.label = "verified up to order " + std::to_string(options.order_bound);
  if (options.order_bound > census::kMaxCensusOrder) {
    report.add("order bound", false, "order bound exceeds " + std::to_string(census::kMaxCensusOrder));
    return report;
  }
  const AbelianGroupStructure c8{{8}};
  for (const auto& type : census::additive_types(options.order_bound, 4)) {
    const std::string name = "additive type " + join(type);
    guarded(report, name, [&] {
      const auto entries = census::enumerate_rings(type, {true, options.workers});
      std::size_t cyclic_large = 0;
      std::size_t surjective = 0;
      std::size_t kernel_ok = 0;
      std::size_t cyclic_entries = 0;
      std::set<std::string> structures;
      for (const auto& e : entries) {
        structures.insert(e.unit_structure.to_string());
        if (unitgroup::is_cyclic(e.unit_structure) && e.unit_structure.order() >= 8) ++cyclic_large;
        // Reduction mod 2 on units.
        const std::vector<RingElement> two{RingElement(e.ring, e.ring->scale(e.ring->one(), 2))};
        const auto q = quotient_by_ideal(e.ring, two);
        const auto r_units = unitgroup::unit_indices(*e.ring);
        const auto q_units = unitgroup::unit_indices(*q.ring);
        std::set<std::uint64_t> image;
        std::size_t kernel = 0;
        bool kernel_in_pm1 = true;
        const auto q_one = q.ring->index_of(q.ring->one());
        const auto minus_one = e.ring->index_of(e.ring->neg(e.ring->one()));
        for (auto u : r_units) {
          const auto img = q.image[u];
          image.insert(img);
          if (img == q_one) {
            ++kernel;
            if (u != e.ring->index_of(e.ring->one()) && u != minus_one) kernel_in_pm1 = false;
          }
        }
        const bool onto = image == std::set<std::uint64_t>(q_units.begin(), q_units.end());
        if (onto) ++surjective;
        if (unitgroup::is_cyclic(e.unit_structure)) {
          ++cyclic_entries;
          if (kernel_in_pm1 && (q_units.size() == r_units.size() || 2 * q_units.size() == r_units.size())) {
            ++kernel_ok;
          }
        }
      }
      const bool ok = cyclic_large == 0 && surjective == entries.size() && kernel_ok == cyclic_entries &&
                      std::none_of(entries.begin(), entries.end(), [&](const auto& e) { return e.unit_structure == c8; });
      std::string detail = std::to_string(entries.size()) + " rings, units {";
      bool first = true;
      for (const auto& s : structures) {
        detail += (first ? "" : "; ") + s;
        first = false;
      }
      detail += "}, no C_8, no cyclic unit group of order >= 8, units onto (R/2R)^x in " +
                std::to_string(surjective) + "/" + std::to_string(entries.size()) + ", kernel in {1,-1} for " +
                std::to_string(kernel_ok) + "/" + std::to_string(cyclic_entries) + " cyclic cases";
      report.add(name, ok, detail);
    });
  }
  return report;
}

// ---- full census against the classification ------------------------------------------------

VerificationReport verify_census_oracle(const VerifyOptions& options) {
  VerificationReport report;
  report.check = "census";
  report.citation = "cyclic-classification";
  report.label = "verified up to order " + std::to_string(options.order_bound);
  if (options.order_bound > census::kMaxCensusOrder) {
    report.add("order bound", false, "order bound exceeds " + std::to_string(census::kMaxCensusOrder));
    return report;
  }
  std::map<std::uint64_t, std::string> found;  // indecomposable unit group order -> first ring
  std::size_t total = 0;
  guarded(report, "census", [&] {
    for (const auto& type : census::additive_types(options.order_bound)) {
      for (const auto& e : census::enumerate_rings(type, {true, options.workers})) {
        ++total;
        if (unitgroup::is_indecomposable(e.unit_structure)) found.emplace(e.unit_structure.order(), serialize(*e.ring));
      }
    }
  });
  if (!report.cases.empty()) return report;

  std::vector<std::uint64_t> unexpected;
  for (const auto& [m, ring] : found) {
    const auto g = classify::GroupDescriptor::finite_abelian({m});
    if (!classify::realizable(g).realizable) unexpected.push_back(m);
  }
  std::vector<std::uint64_t> found_orders;
  for (const auto& [m, ring] : found) found_orders.push_back(m);
  report.add("census indecomposable unit groups are predicted realizable", unexpected.empty(),
             std::to_string(total) + " rings, indecomposable unit group orders " + join(found_orders) +
                 (unexpected.empty() ? "" : ", unexpected " + join(unexpected)));

  // Every realizable C_m whose smallest table witness fits in the bound.
  std::vector<std::uint64_t> predicted;
  for (std::uint64_t m = 1; m < options.order_bound; ++m) {
    if (m > 1 && !nt::as_prime_power(m)) continue;
    const auto g = classify::GroupDescriptor::finite_abelian({m});
    const auto v = classify::realizable(g);
    if (!v.realizable) continue;
    std::uint64_t smallest = UINT64_MAX;
    std::vector<std::uint64_t> chars = v.characteristics.values;
    if (chars.empty()) chars = {2};
    for (auto c : chars) {
      const auto w = classify::realizable_with_char(g, c).witness;
      if (w && w->ring) smallest = std::min(smallest, w->ring->order());
    }
    if (smallest <= options.order_bound) predicted.push_back(m);
  }
  for (auto m : predicted) {
    const std::string name = "C" + std::to_string(m) + " occurs";
    const auto it = found.find(m);
    report.add(name, it != found.end(), it != found.end() ? "e.g. " + it->second : "missing from census");
  }
  return report;
}

// ---- cyclotomic quotients ------------------------------------------------------------------

VerificationReport verify_cyclotomic_cases(const VerifyOptions& options) {
  VerificationReport report;
  report.check = "cyclotomic";
  report.citation = "char-odd-prime-power-order";
  const std::vector<std::array<std::uint64_t, 3>> cases{{2, 7, 1}, {2, 3, 1}, {2, 3, 2}, {3, 2, 1},
                                                         {3, 2, 2}, {3, 2, 3}, {5, 2, 1}, {5, 3, 1}};
  for (const auto& [q, p, k] : cases) {
    const std::string name = "(q, p, k) = (" + std::to_string(q) + ", " + std::to_string(p) + ", " +
                             std::to_string(k) + ")";
    guarded(report, name, [&] {
      const auto n = *nt::checked_pow(p, static_cast<std::uint32_t>(k));
      Coeffs top(n, 0);
      top[0] = 1;
      const auto r = poly_x_pow(q, n, top);
      const auto direct = unitgroup::group_structure(*r, options.workers);
      const auto decomposition = polyfield::cyclotomic_decomposition(q, p, static_cast<unsigned>(k));
      const auto predicted = AbelianGroupStructure::from_cyclic_orders(decomposition.unit_cyclic_orders());
      std::vector<std::uint64_t> degrees(decomposition.degrees.begin(), decomposition.degrees.end());
      report.add(name, direct == predicted,
                 "x^" + std::to_string(n) + " - 1 factor degrees " + join(degrees) + ", enumerated " +
                     direct.to_string() + ", predicted " + predicted.to_string());
    });
  }
  return report;
}

// ---- q^m - 1 = p^r -----------------------------------------------------------------------

VerificationReport verify_lemma_power_equations() {
  VerificationReport report;
  report.check = "lemmas";
  report.citation = "power-equations";
  for (std::uint64_t q = 2; q <= 50; ++q) {
    if (!nt::is_prime(q)) continue;
    const std::string name = "q = " + std::to_string(q);
    guarded(report, name, [&] {
      const auto solutions = nt::solve_power_equation(q, 30);
      std::size_t exceptions = 0;
      std::string listed;
      for (const auto& s : solutions) {
        bool conforms = false;
        if (s.p == 2) {
          // q^m - 1 is a power of 2 only for m = 1, or q = 3 and m = 2.
          conforms = (s.m == 1 && nt::is_power_of_two(q - 1)) || (q == 3 && s.m == 2);
        } else {
          // Odd p forces q = 2, r = 1, m prime and p = 2^m - 1 Mersenne.
          conforms = q == 2 && s.r == 1 && nt::is_prime(s.m) && nt::is_mersenne_prime(s.p) &&
                     s.p == (std::uint64_t{1} << s.m) - 1;
        }
        nt::BigInt lhs = boost::multiprecision::pow(nt::BigInt(q), s.m) - 1;
        nt::BigInt rhs = boost::multiprecision::pow(nt::BigInt(s.p), s.r);
        if (lhs != rhs) conforms = false;
        if (!conforms) ++exceptions;
        listed += (listed.empty() ? "" : ", ") + std::string("m=") + std::to_string(s.m) + ": " +
                  std::to_string(s.p) + "^" + std::to_string(s.r);
      }
      // Predicted solutions must all be found.
      std::size_t predicted = 0;
      for (std::uint32_t m = 1; m <= 30; ++m) {
        const bool two_power = (m == 1 && q > 2 && nt::is_power_of_two(q - 1)) || (q == 3 && m == 2);
        const bool mersenne = q == 2 && m < 64 && nt::is_mersenne_prime((std::uint64_t{1} << m) - 1);
        if (two_power || mersenne) ++predicted;
      }
      const bool ok = exceptions == 0 && predicted == solutions.size();
      report.add(name, ok,
                 std::to_string(solutions.size()) + " solutions" + (listed.empty() ? "" : " (" + listed + ")") +
                     ", " + std::to_string(exceptions) + " exceptions");
    });
  }
  return report;
}

// ---- torsion-free -------------------------------------------------------------------------------

VerificationReport verify_ordgroup_properties(const VerifyOptions& options) {
  VerificationReport report;
  report.check = "ordgroup-properties";
  report.citation = "torsion-free";
  report.label = "seed " + std::to_string(options.seed) + ", " + std::to_string(options.trials) + " trials";
  guarded(report, "property suite", [&] {
    for (const auto& r : ordgroup::run_property_suite({options.seed, options.trials, options.workers})) {
      report.add(r.group + ": " + r.property, r.passed(),
                 std::to_string(r.trials) + " trials, " + std::to_string(r.failures) + " failures" +
                     (r.first_failure.empty() ? "" : ", first " + r.first_failure));
    }
  });
  return report;
}

// ---- specialization -----------------------------------------------------------------------------

VerificationReport verify_specialization(const VerifyOptions& options) {
  VerificationReport report;
  report.check = "specialization";
  report.citation = "specialization";
  report.label = "cyclic groups of order <= " + std::to_string(options.specialization_bound);
  guarded(report, "scan", [&] {
    const auto pairs = classify::specialization_counterexamples(options.specialization_bound);
    auto has = [&](std::uint64_t m, std::uint64_t d) {
      return std::find(pairs.begin(), pairs.end(), std::make_pair(m, d)) != pairs.end();
    };
    std::uint64_t smallest = 0;
    for (const auto& [m, d] : pairs) {
      if (!smallest || m < smallest) smallest = m;
    }
    report.add("pairs found", true, std::to_string(pairs.size()) + " pairs, smallest realizable group C" +
                                        std::to_string(smallest));
    if (options.specialization_bound >= 256) {
      report.add("(C256, C128)", has(256, 128), "C256 is realized by F257, C128 is not realizable");
    }
    if (options.specialization_bound >= 10) {
      report.add("(C10, C5)", has(10, 5), "C10 is realized by F11, C5 is not realizable");
      report.add("C10 is the smallest", smallest == 10, "smallest realizable group with a bad subgroup: C" +
                                                            std::to_string(smallest));
    }
    const auto small = classify::specialization_counterexamples(4);
    report.add("no pair below order 5", small.empty(), std::to_string(small.size()) + " pairs with m <= 4");
  });
  return report;
}

// ---- suites ------------------------------------------------------------------------------------------

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"table",      "char2",  "char0",
                                              "char4",      "census", "cyclotomic",
                                              "lemmas",     "ordgroup-properties", "specialization"};
  return names;
}

std::vector<VerificationReport> run_suite(const std::string& name, const VerifyOptions& options) {
  if (name == "all") {
    std::vector<VerificationReport> out;
    for (const auto& n : suite_names()) out.push_back(run_suite(n, options).front());
    return out;
  }
  if (name == "table") return {verify_theorem_table(options)};
  if (name == "char2") return {verify_char2_quotients()};
  if (name == "char0") return {verify_char0_obstruction()};
  if (name == "char4") return {verify_char4_no_C8(options)};
  if (name == "census") return {verify_census_oracle(options)};
  if (name == "cyclotomic") return {verify_cyclotomic_cases(options)};
  if (name == "lemmas") return {verify_lemma_power_equations()};
  if (name == "ordgroup-properties") return {verify_ordgroup_properties(options)};
  if (name == "specialization") return {verify_specialization(options)};
  throw Error(ErrorCode::kUnknownSuite, "unknown suite '" + name + "'");
}

}  // namespace fuchs::verifier
