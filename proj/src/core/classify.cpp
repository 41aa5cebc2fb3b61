// Copyright 2026 The fuchs Authors
// SPDX-License-Identifier: Apache-2.0

#include "core/classify.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "core/error.hpp"
#include "core/numtheory.hpp"
#include "core/unitgroup.hpp"

namespace fuchs::classify {

namespace nt = numtheory;

// ---- descriptors ----------------------------------------------------------------

GroupDescriptor GroupDescriptor::cyclic(std::uint64_t p, std::uint32_t n) {
  if (!nt::is_prime(p)) throw Error(ErrorCode::kDomain, std::to_string(p) + " is not prime");
  if (n == 0) throw Error(ErrorCode::kDomain, "exponent n must be >= 1");
  GroupDescriptor d;
  d.kind = Kind::kCyclicPrimePower;
  d.p = p;
  d.n = n;
  return d;
}

GroupDescriptor GroupDescriptor::quasi_cyclic(std::uint64_t p) {
  if (!nt::is_prime(p)) throw Error(ErrorCode::kDomain, std::to_string(p) + " is not prime");
  GroupDescriptor d;
  d.kind = Kind::kQuasiCyclic;
  d.p = p;
  return d;
}

GroupDescriptor GroupDescriptor::finite_abelian(const std::vector<std::uint64_t>& cyclic_orders) {
  const auto s = unitgroup::AbelianGroupStructure::from_cyclic_orders(cyclic_orders);
  if (s.invariant_factors.size() == 1) {
    if (auto pp = nt::as_prime_power(s.invariant_factors[0])) return cyclic(pp->prime, pp->exponent);
  }
  GroupDescriptor d;
  d.kind = Kind::kFiniteAbelian;
  d.factors = s.invariant_factors;
  return d;
}

GroupDescriptor GroupDescriptor::torsion_free(ordgroup::SpecPtr spec) {
  GroupDescriptor d;
  d.kind = Kind::kTorsionFreeOrdered;
  d.ordered_group = std::move(spec);
  return d;
}

std::optional<std::uint64_t> GroupDescriptor::cyclic_order() const {
  if (kind != Kind::kCyclicPrimePower) return std::nullopt;
  return nt::checked_pow(p, n);
}

std::string GroupDescriptor::to_string() const {
  switch (kind) {
    case Kind::kCyclicPrimePower: {
      if (auto m = cyclic_order()) return "C" + std::to_string(*m);
      return "C" + std::to_string(p) + "^" + std::to_string(n);
    }
    case Kind::kQuasiCyclic:
      return "C" + std::to_string(p) + "^inf";
    case Kind::kFiniteAbelian: {
      if (factors.empty()) return "C1";
      std::string out;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) out += "x";
        out += "C" + std::to_string(factors[i]);
      }
      return out;
    }
    case Kind::kTorsionFreeOrdered:
      return ordered_group->to_string();
  }
  return "?";
}

bool operator==(const GroupDescriptor& a, const GroupDescriptor& b) {
  if (a.kind != b.kind || a.p != b.p || a.n != b.n || a.factors != b.factors) return false;
  if (a.kind != GroupDescriptor::Kind::kTorsionFreeOrdered) return true;
  return *a.ordered_group == *b.ordered_group;
}

// ---- decisions --------------------------------------------------------------------

namespace {

constexpr std::uint64_t kFermatBound = 65537;

bool is_mersenne(std::uint64_t p) { return nt::is_mersenne_prime(p); }

bool two_power_plus_one_is_prime(std::uint32_t n) {
  if (n < 63) return nt::is_prime((std::uint64_t{1} << n) + 1);
  if ((n & (n - 1)) != 0) return false;
  unsigned k = 0;
  while ((1u << k) != n) ++k;
  return nt::fermat_number_is_prime(k);
}

// Recipe for a witness ring named in the classification table.
struct Recipe {
  enum class Kind { kNone, kSymbolic, kZn, kPoly, kField, kFieldTimesF2 };
  Kind kind = Kind::kNone;
  std::string symbol;
  std::uint64_t c = 0;
  std::vector<std::uint64_t> orders;
  Coeffs top;
  std::uint64_t field_prime = 0;
  unsigned field_degree = 0;
};

Recipe symbolic(std::string s) {
  Recipe r;
  r.kind = Recipe::Kind::kSymbolic;
  r.symbol = std::move(s);
  return r;
}

Recipe field(std::uint64_t q, bool times_f2) {
  const auto pp = nt::as_prime_power(q);
  Recipe r;
  r.kind = times_f2 ? Recipe::Kind::kFieldTimesF2 : Recipe::Kind::kField;
  r.field_prime = pp->prime;
  r.field_degree = pp->exponent;
  return r;
}

Recipe poly(std::uint64_t c, std::vector<std::uint64_t> orders, Coeffs top) {
  Recipe r;
  r.kind = Recipe::Kind::kPoly;
  r.c = c;
  r.orders = std::move(orders);
  r.top = std::move(top);
  return r;
}

Recipe zn(std::uint64_t c) {
  Recipe r;
  r.kind = Recipe::Kind::kZn;
  r.c = c;
  return r;
}

struct Row {
  Recipe recipe;
  std::string reason;
};

bool in_prop_list(std::uint64_t c) {
  if (c == 0 || c == 2 || c == 4) return true;
  if (nt::is_fermat_prime(c)) return true;
  return c % 2 == 0 && nt::is_fermat_prime(c / 2);
}

// Table lookup for (d, c); recipe kind kNone when not realizable.
Row table_row(const GroupDescriptor& d, std::uint64_t c) {
  using K = GroupDescriptor::Kind;
  switch (d.kind) {
    case K::kQuasiCyclic:
      return {{}, "quasi-cyclic"};
    case K::kTorsionFreeOrdered:
      return {c == 2 ? symbolic("F2[G]") : Recipe{}, "torsion-free"};
    case K::kFiniteAbelian:
      if (!d.is_trivial()) {
        throw Error(ErrorCode::kDomain,
                    d.to_string() + " is decomposable; only indecomposable groups are classified");
      }
      if (c == 2) return {field(2, false), "char-2"};
      return {{}, "char-restriction"};
    case K::kCyclicPrimePower:
      break;
  }
  if (!in_prop_list(c) || (d.p != 2 && c != 2)) return {{}, "char-restriction"};
  const auto m = d.cyclic_order();
  auto is = [&](std::uint64_t v) { return m && *m == v; };
  if (c == 0) {
    if (is(2)) return {symbolic("Z"), "char-0"};
    if (is(4)) return {symbolic("Z[i]"), "char-0"};
    return {{}, "char-0"};
  }
  if (c == 2) {
    if (is(2)) return {poly(2, {2, 2}, {0, 0}), "char-2"};
    if (is(4)) return {poly(2, {2, 2, 2}, {0, 0, 0}), "char-2"};
    if (d.n == 1 && is_mersenne(d.p)) return {field(d.p + 1, false), "char-2"};
    return {{}, "char-2"};
  }
  if (c == 4) {
    if (is(2)) return {zn(4), "char-4"};
    if (is(4)) return {poly(4, {4, 2}, {2, 0}), "char-4"};
    return {{}, "char-4"};
  }
  if (c == 3) {
    if (is(2)) return {field(3, false), "char-odd-prime"};
    if (is(8)) return {field(9, false), "char-odd-prime"};
    return {{}, "char-odd-prime"};
  }
  if (c == 6) {
    if (is(2)) return {field(3, true), "char-2q"};
    if (is(8)) return {field(9, true), "char-2q"};
    return {{}, "char-2q"};
  }
  if (c % 2 == 1) {
    if (is(c - 1)) return {field(c, false), "char-odd-prime"};
    return {{}, "char-odd-prime"};
  }
  const auto q = c / 2;
  if (is(q - 1)) return {field(q, true), "char-2q"};
  return {{}, "char-2q"};
}

std::string recipe_label(const Recipe& r) {
  switch (r.kind) {
    case Recipe::Kind::kSymbolic:
      return r.symbol;
    case Recipe::Kind::kZn:
      return "Z" + std::to_string(r.c);
    case Recipe::Kind::kPoly:
      return poly_quotient_label(r.c, r.orders, r.top);
    case Recipe::Kind::kField:
    case Recipe::Kind::kFieldTimesF2: {
      nt::BigInt q = nt::BigInt(r.field_prime);
      q = boost::multiprecision::pow(q, r.field_degree);
      std::string label = "F" + q.str();
      if (r.kind == Recipe::Kind::kFieldTimesF2) label += " x F2";
      return label;
    }
    case Recipe::Kind::kNone:
      break;
  }
  return {};
}

std::mutex cache_mutex;
std::map<std::string, WitnessDescriptor> witness_cache;

// Units of Z or Z[i] found by brute force over a box of Gaussian integers.
// Units have norm 1, so every unit already lies in the box; the check is
// that exactly `order` of them exist and that they form a cyclic group.
bool symbolic_units_check(bool gaussian, std::uint64_t order) {
  constexpr std::int64_t kBox = 6;
  const std::int64_t b_max = gaussian ? kBox : 0;
  std::vector<std::pair<std::int64_t, std::int64_t>> found;
  for (std::int64_t a = -kBox; a <= kBox; ++a) {
    for (std::int64_t b = -b_max; b <= b_max; ++b) {
      bool unit = false;
      for (std::int64_t c = -kBox; c <= kBox && !unit; ++c) {
        for (std::int64_t d = -b_max; d <= b_max && !unit; ++d) {
          unit = a * c - b * d == 1 && a * d + b * c == 0;
        }
      }
      if (unit) found.emplace_back(a, b);
    }
  }
  if (found.size() != order) return false;
  for (const auto& [a, b] : found) {
    std::int64_t x = a, y = b;
    std::uint64_t k = 1;
    while (!(x == 1 && y == 0)) {
      const std::int64_t nx = x * a - y * b;
      y = x * b + y * a;
      x = nx;
      ++k;
    }
    if (k == order) return true;
  }
  return false;
}

// Builds the recipe and checks its characteristic and unit group against
// the expected structure. Results are memoized by label.
WitnessDescriptor build_witness(const Recipe& r, std::uint64_t c, const unitgroup::AbelianGroupStructure& expected) {
  WitnessDescriptor w;
  w.label = recipe_label(r);
  if (r.kind == Recipe::Kind::kSymbolic) {
    if (r.symbol == "Z") w.verified = c == 0 && symbolic_units_check(false, 2);
    if (r.symbol == "Z[i]") w.verified = c == 0 && symbolic_units_check(true, 4);
    return w;
  }
  w.kind = WitnessDescriptor::Kind::kTableRing;
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = witness_cache.find(w.label);
    if (it != witness_cache.end()) return it->second;
  }
  // Enumerating units needs the whole ring within the guardrail.
  nt::BigInt size = boost::multiprecision::pow(nt::BigInt(std::max<std::uint64_t>(r.field_prime, 1)), r.field_degree);
  if (r.kind == Recipe::Kind::kFieldTimesF2) size *= 2;
  if ((r.kind == Recipe::Kind::kField || r.kind == Recipe::Kind::kFieldTimesF2) && size > max_ring_order()) {
    return w;
  }
  switch (r.kind) {
    case Recipe::Kind::kZn:
      w.ring = mk_zn(r.c);
      break;
    case Recipe::Kind::kPoly:
      w.ring = mk_poly_quotient(r.c, r.orders, r.top);
      break;
    case Recipe::Kind::kField:
      w.ring = mk_finite_field(r.field_prime, r.field_degree);
      break;
    case Recipe::Kind::kFieldTimesF2:
      w.ring = mk_product(mk_finite_field(r.field_prime, r.field_degree), mk_finite_field(2, 1));
      break;
    default:
      break;
  }
  const auto got = unitgroup::group_structure(*w.ring);
  if (w.ring->characteristic() != c || !(got == expected)) {
    throw std::logic_error("witness " + w.label + " has characteristic " + std::to_string(w.ring->characteristic()) +
                           " and units " + got.to_string() + ", expected " + expected.to_string());
  }
  w.verified = true;
  std::lock_guard<std::mutex> lock(cache_mutex);
  return witness_cache.emplace(w.label, w).first->second;
}

unitgroup::AbelianGroupStructure expected_structure(const GroupDescriptor& d) {
  if (d.kind == GroupDescriptor::Kind::kCyclicPrimePower) {
    if (auto m = d.cyclic_order()) return unitgroup::AbelianGroupStructure::from_cyclic_orders({*m});
  }
  return {};
}

}  // namespace

Characteristics admissible_characteristics(const GroupDescriptor& d, std::uint64_t char_bound) {
  using K = GroupDescriptor::Kind;
  if (d.kind != K::kCyclicPrimePower && d.kind != K::kQuasiCyclic) {
    throw Error(ErrorCode::kDomain, "characteristic restriction applies to cyclic and quasi-cyclic p-groups");
  }
  Characteristics out;
  if (d.p != 2) {
    out.values = {2};
    return out;
  }
  out.values = {0, 2, 4};
  for (std::uint64_t k = 0; k < 6; ++k) {
    const std::uint64_t q = (std::uint64_t{1} << (std::uint64_t{1} << k)) + 1;
    if (q > char_bound) break;
    if (nt::is_fermat_prime(q)) {
      out.values.push_back(q);
      out.values.push_back(2 * q);
    }
  }
  std::sort(out.values.begin(), out.values.end());
  out.families = {"q Fermat", "2q, q Fermat"};
  return out;
}

bool cyclic_realizable(std::uint64_t p, std::optional<std::uint32_t> n) {
  if (!nt::is_prime(p)) throw Error(ErrorCode::kDomain, std::to_string(p) + " is not prime");
  if (!n) return false;
  if (*n == 0) throw Error(ErrorCode::kDomain, "exponent n must be >= 1");
  if (p == 2) return *n == 3 || two_power_plus_one_is_prime(*n);
  return *n == 1 && is_mersenne(p);
}

RealizabilityVerdict realizable_cyclic(std::uint64_t p, std::optional<std::uint32_t> n) {
  RealizabilityVerdict v;
  v.group = n ? GroupDescriptor::cyclic(p, *n) : GroupDescriptor::quasi_cyclic(p);
  v.realizable = cyclic_realizable(p, n);
  v.reason = n ? "cyclic-classification" : "quasi-cyclic";
  if (!v.realizable) return v;

  const auto m = *v.group.cyclic_order();
  for (auto c : admissible_characteristics(v.group, kFermatBound).values) {
    if (table_row(v.group, c).recipe.kind != Recipe::Kind::kNone) v.characteristics.values.push_back(c);
  }
  // The field F_{p^n + 1} realizes every case.
  const auto q = m + 1;
  const auto pp = nt::as_prime_power(q);
  v.witness = build_witness(field(q, false), pp->prime, expected_structure(v.group));
  return v;
}

RealizabilityVerdict realizable_with_char(const GroupDescriptor& d, std::uint64_t c) {
  RealizabilityVerdict v;
  v.group = d;
  v.characteristic = c;
  const auto row = table_row(d, c);
  v.reason = row.reason;
  v.realizable = row.recipe.kind != Recipe::Kind::kNone;
  if (v.realizable) {
    v.characteristics.values = {c};
    v.witness = build_witness(row.recipe, c, expected_structure(d));
  }
  return v;
}

RealizabilityVerdict realizable(const GroupDescriptor& d) {
  using K = GroupDescriptor::Kind;
  switch (d.kind) {
    case K::kCyclicPrimePower:
      return realizable_cyclic(d.p, d.n);
    case K::kQuasiCyclic:
      return realizable_cyclic(d.p, std::nullopt);
    case K::kFiniteAbelian:
    case K::kTorsionFreeOrdered: {
      // Both are realizable only in characteristic 2.
      auto v = realizable_with_char(d, 2);
      v.characteristic.reset();
      return v;
    }
  }
  return {};
}

WitnessDescriptor witness(const GroupDescriptor& d, std::uint64_t c) {
  auto v = realizable_with_char(d, c);
  if (!v.realizable) {
    throw Error(ErrorCode::kNoWitness, d.to_string() + " is not a unit group in characteristic " +
                                           std::to_string(c) + " (" + v.reason + ")");
  }
  return *v.witness;
}

bool cyclic_group_realizable_sufficient(std::uint64_t m) {
  if (m == 0) throw Error(ErrorCode::kDomain, "group order must be positive");
  if (m == 1) return true;
  if (auto pp = nt::as_prime_power(m)) return cyclic_realizable(pp->prime, pp->exponent);
  if (nt::as_prime_power(m + 1)) return true;
  for (const auto& pp : nt::factorize(m)) {
    if (!cyclic_realizable(pp.prime, pp.exponent)) return false;
  }
  return true;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> specialization_counterexamples(std::uint64_t bound) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::uint64_t m = 2; m <= bound; ++m) {
    if (!cyclic_group_realizable_sufficient(m)) continue;
    for (auto d : nt::divisors(m)) {
      if (d == 1 || d == m) continue;
      const auto pp = nt::as_prime_power(d);
      if (pp && !cyclic_realizable(pp->prime, pp->exponent)) out.emplace_back(m, d);
    }
  }
  return out;
}

// ---- JSON ---------------------------------------------------------------------------

nlohmann::json to_json(const RealizabilityVerdict& v) {
  nlohmann::json j;
  j["group"] = v.group.to_string();
  j["char"] = v.characteristic ? nlohmann::json(*v.characteristic) : nlohmann::json(nullptr);
  j["realizable"] = v.realizable;
  j["witness"] = v.witness ? nlohmann::json(v.witness->label) : nlohmann::json(nullptr);
  j["witness_verified"] = v.witness ? v.witness->verified : false;
  j["reason"] = v.reason;
  j["characteristics"] = v.characteristics.values;
  j["families"] = v.characteristics.families;
  return j;
}

nlohmann::json to_json(const WitnessDescriptor& w, const GroupDescriptor& d, std::uint64_t c) {
  nlohmann::json j;
  j["group"] = d.to_string();
  j["char"] = c;
  j["witness"] = w.label;
  j["kind"] = w.kind == WitnessDescriptor::Kind::kSymbolic ? "symbolic" : "table-ring";
  j["verified"] = w.verified;
  if (w.ring) {
    j["order"] = w.ring->order();
    j["presentation"] = serialize(*w.ring);
    j["units"] = unitgroup::group_structure(*w.ring).invariant_factors;
  } else {
    j["order"] = nullptr;
    j["presentation"] = nullptr;
    j["units"] = nullptr;
  }
  return j;
}

}  // namespace fuchs::classify
