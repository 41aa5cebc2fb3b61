// Copyright 2026 The fuchs Authors
// SPDX-License-Identifier: Apache-2.0

#include "core/unitgroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <thread>

#include "core/error.hpp"
#include "core/numtheory.hpp"

namespace fuchs::unitgroup {

std::uint64_t AbelianGroupStructure::order() const {
  std::uint64_t n = 1;
  for (auto m : invariant_factors) n *= m;
  return n;
}

std::string AbelianGroupStructure::to_string() const {
  if (invariant_factors.empty()) return "C_1";
  std::string out;
  for (std::size_t i = 0; i < invariant_factors.size(); ++i) {
    if (i) out += " x ";
    out += "C_" + std::to_string(invariant_factors[i]);
  }
  return out;
}

AbelianGroupStructure AbelianGroupStructure::from_cyclic_orders(const std::vector<std::uint64_t>& orders) {
  // prime -> exponents of the prime-power parts
  std::map<std::uint64_t, std::vector<std::uint32_t>> parts;
  for (auto n : orders) {
    if (n == 0) throw Error(ErrorCode::kDomain, "cyclic order must be positive");
    for (const auto& pp : numtheory::factorize(n)) parts[pp.prime].push_back(pp.exponent);
  }
  std::size_t len = 0;
  for (auto& [p, exps] : parts) {
    std::sort(exps.rbegin(), exps.rend());
    len = std::max(len, exps.size());
  }
  // Largest invariant factor first, then reversed.
  std::vector<std::uint64_t> factors(len, 1);
  for (const auto& [p, exps] : parts) {
    for (std::size_t i = 0; i < exps.size(); ++i) {
      for (std::uint32_t e = 0; e < exps[i]; ++e) factors[i] *= p;
    }
  }
  std::reverse(factors.begin(), factors.end());
  return {factors};
}

bool is_cyclic(const AbelianGroupStructure& g) { return g.invariant_factors.size() <= 1; }

bool is_indecomposable(const AbelianGroupStructure& g) {
  if (g.invariant_factors.empty()) return true;
  return g.invariant_factors.size() == 1 && numtheory::as_prime_power(g.invariant_factors[0]).has_value();
}

std::uint64_t count_solutions(const AbelianGroupStructure& g, std::uint64_t d) {
  std::uint64_t n = 1;
  for (auto m : g.invariant_factors) n *= std::gcd(d, m);
  return n;
}

namespace {

// Rank over F_l of the given vectors (entries already reduced mod l).
std::size_t rank_mod(std::vector<std::vector<std::uint64_t>> rows, std::uint64_t l) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const auto inv = numtheory::powmod(rows[rank][c], l - 2, l);
    for (auto& v : rows[rank]) v = numtheory::mulmod(v, inv, l);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const auto f = rows[r][c];
      for (std::size_t k = c; k < cols; ++k) {
        rows[r][k] = (rows[r][k] + l - numtheory::mulmod(f, rows[rank][k], l)) % l;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

bool is_unit(const TableRing& r, const Coeffs& u) {
  const auto c = r.characteristic();
  if (r.rank() == 1) return std::gcd(u[0], c) == 1;
  const std::size_t k = r.rank();
  std::vector<Coeffs> images;
  images.reserve(k);
  for (std::size_t j = 0; j < k; ++j) {
    Coeffs e(k, 0);
    e[j] = 1;
    images.push_back(r.mul(u, e));
  }
  for (auto l : numtheory::prime_divisors(c)) {
    std::vector<std::size_t> coords;
    for (std::size_t i = 0; i < k; ++i) {
      if (r.orders()[i] % l == 0) coords.push_back(i);
    }
    std::vector<std::vector<std::uint64_t>> rows;
    for (std::size_t j = 0; j < k; ++j) {
      if (r.orders()[j] % l != 0) continue;
      std::vector<std::uint64_t> row;
      for (auto i : coords) row.push_back(images[j][i] % l);
      rows.push_back(std::move(row));
    }
    if (rank_mod(std::move(rows), l) != coords.size()) return false;
  }
  return true;
}

std::vector<std::uint64_t> unit_indices(const TableRing& r, unsigned workers) {
  const auto n = r.order();
  check_ring_order(n, "unit enumeration");
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::min<std::uint64_t>(n, 64))));
  std::vector<std::vector<std::uint64_t>> chunks(workers);
  auto scan = [&](unsigned w) {
    const auto lo = n * w / workers;
    const auto hi = n * (w + 1) / workers;
    for (auto i = lo; i < hi; ++i) {
      if (is_unit(r, r.element_at(i))) chunks[w].push_back(i);
    }
  };
  if (workers == 1) {
    scan(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(scan, w);
    for (auto& t : threads) t.join();
  }
  std::vector<std::uint64_t> out;
  for (auto& c : chunks) out.insert(out.end(), c.begin(), c.end());
  return out;
}

std::vector<RingElement> units(const RingPtr& r, unsigned workers) {
  std::vector<RingElement> out;
  for (auto i : unit_indices(*r, workers)) out.emplace_back(r, r->element_at(i));
  return out;
}

std::uint64_t multiplicative_order(const TableRing& r, const Coeffs& u, std::uint64_t group_order) {
  std::uint64_t o = group_order;
  for (auto l : numtheory::prime_divisors(group_order)) {
    while (o % l == 0 && r.is_one(r.pow(u, o / l))) o /= l;
  }
  return o;
}

AbelianGroupStructure structure_from_units(const TableRing& r, const std::vector<std::uint64_t>& unit_idx) {
  const std::uint64_t n = unit_idx.size();
  if (n <= 1) return {};
  const auto factors = numtheory::factorize(n);
  // by_valuation[l][j] = #{u : ord(u) = l^j}
  std::map<std::uint64_t, std::vector<std::uint64_t>> by_valuation;
  for (const auto& pp : factors) by_valuation[pp.prime].assign(pp.exponent + 1, 0);
  for (auto idx : unit_idx) {
    // Only elements of l-power order count towards the l-part.
    auto o = multiplicative_order(r, r.element_at(idx), n);
    for (const auto& pp : factors) {
      std::uint32_t v = 0;
      auto rest = o;
      while (rest % pp.prime == 0) {
        rest /= pp.prime;
        ++v;
      }
      if (rest == 1) by_valuation[pp.prime][v]++;
    }
  }
  std::vector<std::uint64_t> cyclic_parts;
  for (const auto& pp : factors) {
    const auto& counts = by_valuation[pp.prime];
    // s_j = log_l #{u : ord(u) | l^j}; s_j - s_{j-1} = #{parts >= j}.
    std::vector<std::uint32_t> s(pp.exponent + 1, 0);
    std::uint64_t cumulative = 0;
    for (std::uint32_t j = 0; j <= pp.exponent; ++j) {
      cumulative += counts[j];
      std::uint64_t t = cumulative;
      std::uint32_t e = 0;
      while (t % pp.prime == 0) {
        t /= pp.prime;
        ++e;
      }
      if (t != 1) throw Error(ErrorCode::kDomain, "unit set is not a group");
      s[j] = e;
    }
    std::vector<std::uint32_t> at_least(pp.exponent + 2, 0);
    for (std::uint32_t j = 1; j <= pp.exponent; ++j) at_least[j] = s[j] - s[j - 1];
    for (std::uint32_t j = 1; j <= pp.exponent; ++j) {
      const auto exactly = at_least[j] - at_least[j + 1];
      for (std::uint32_t i = 0; i < exactly; ++i) {
        std::uint64_t q = 1;
        for (std::uint32_t e = 0; e < j; ++e) q *= pp.prime;
        cyclic_parts.push_back(q);
      }
    }
  }
  return AbelianGroupStructure::from_cyclic_orders(cyclic_parts);
}

AbelianGroupStructure group_structure(const TableRing& r, unsigned workers) {
  return structure_from_units(r, unit_indices(r, workers));
}

}  // namespace fuchs::unitgroup
