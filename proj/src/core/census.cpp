// Copyright 2026 The fuchs Authors
// SPDX-License-Identifier: Apache-2.0

#include "core/census.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <thread>

#include "core/error.hpp"
#include "core/numtheory.hpp"

namespace fuchs::census {

namespace {

class Search {
 public:
  explicit Search(const std::vector<std::uint64_t>& orders) : d_(orders), k_(orders.size()), c_(orders[0]) {
    table_.assign(k_ * k_, Coeffs(k_, 0));
    assigned_.assign(k_ * k_, 0);
    for (std::size_t j = 0; j < k_; ++j) {
      table_[j] = unit(j);
      table_[j * k_] = unit(j);
      assigned_[j] = assigned_[j * k_] = 1;
    }
    for (std::size_t j = 1; j < k_; ++j) {
      for (std::size_t i = 1; i <= j; ++i) slots_.emplace_back(i, j);
    }
  }

  const std::vector<std::pair<std::size_t, std::size_t>>& slots() const { return slots_; }

  // Values allowed in slot s: vectors v with gcd(d_i, d_j) v = 0.
  std::vector<Coeffs> candidates(std::size_t s) const {
    const auto [i, j] = slots_[s];
    const auto g = std::gcd(d_[i], d_[j]);
    std::vector<Coeffs> out{Coeffs{}};
    for (std::size_t l = 0; l < k_; ++l) {
      const auto step = d_[l] / std::gcd(d_[l], g);
      std::vector<Coeffs> next;
      for (const auto& prefix : out) {
        for (std::uint64_t v = 0; v < d_[l]; v += step) {
          auto extended = prefix;
          extended.push_back(v);
          next.push_back(std::move(extended));
        }
      }
      out = std::move(next);
    }
    // Coefficient 0 was appended first; order by index with coefficient 0
    // least significant.
    std::sort(out.begin(), out.end(), [](const Coeffs& a, const Coeffs& b) {
      return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
    });
    return out;
  }

  void run_from(std::size_t s, const std::function<void(const RingPresentation&)>& leaf) {
    if (s == slots_.size()) {
      RingPresentation p;
      p.characteristic = c_;
      p.orders = d_;
      p.products = table_;
      leaf(p);
      return;
    }
    for (const auto& v : candidate_cache(s)) {
      assign(s, v);
      if (consistent()) run_from(s + 1, leaf);
      unassign(s);
    }
  }

  void assign(std::size_t s, const Coeffs& v) {
    const auto [i, j] = slots_[s];
    table_[i * k_ + j] = table_[j * k_ + i] = v;
    assigned_[i * k_ + j] = assigned_[j * k_ + i] = 1;
  }

  void unassign(std::size_t s) {
    const auto [i, j] = slots_[s];
    assigned_[i * k_ + j] = assigned_[j * k_ + i] = 0;
  }

  // Associativity on every basis triple whose two sides only use assigned
  // products.
  bool consistent() const {
    for (std::size_t a = 1; a < k_; ++a) {
      for (std::size_t b = 1; b < k_; ++b) {
        if (!assigned_[a * k_ + b]) continue;
        for (std::size_t c = 1; c < k_; ++c) {
          if (!assigned_[b * k_ + c]) continue;
          const auto& ab = table_[a * k_ + b];
          const auto& bc = table_[b * k_ + c];
          if (!known(ab, c) || !known(bc, a)) continue;
          if (times_basis(ab, c) != times_basis(bc, a)) return false;
        }
      }
    }
    return true;
  }

 private:
  Coeffs unit(std::size_t i) const {
    Coeffs v(k_, 0);
    v[i] = 1;
    return v;
  }

  bool known(const Coeffs& x, std::size_t c) const {
    for (std::size_t l = 1; l < k_; ++l) {
      if (x[l] != 0 && !assigned_[l * k_ + c]) return false;
    }
    return true;
  }

  // x * e_c from the partial table.
  Coeffs times_basis(const Coeffs& x, std::size_t c) const {
    Coeffs acc(k_, 0);
    for (std::size_t l = 0; l < k_; ++l) {
      if (x[l] == 0) continue;
      const auto& t = table_[l * k_ + c];
      for (std::size_t m = 0; m < k_; ++m) acc[m] = (acc[m] + x[l] * t[m]) % c_;
    }
    for (std::size_t m = 0; m < k_; ++m) acc[m] %= d_[m];
    return acc;
  }

  const std::vector<Coeffs>& candidate_cache(std::size_t s) {
    if (cache_.size() != slots_.size()) {
      cache_.clear();
      for (std::size_t t = 0; t < slots_.size(); ++t) cache_.push_back(candidates(t));
    }
    return cache_[s];
  }

  std::vector<std::uint64_t> d_;
  std::size_t k_;
  std::uint64_t c_;
  std::vector<Coeffs> table_;
  std::vector<char> assigned_;
  std::vector<std::pair<std::size_t, std::size_t>> slots_;
  std::vector<std::vector<Coeffs>> cache_;
};

std::uint64_t additive_order(const TableRing& r, const Coeffs& a) {
  std::uint64_t o = 1;
  for (std::size_t i = 0; i < a.size(); ++i) o = std::lcm(o, r.orders()[i] / std::gcd(r.orders()[i], a[i]));
  return o;
}

}  // namespace

std::string ring_signature(const TableRing& r, const unitgroup::AbelianGroupStructure& units) {
  const auto n = r.order();
  const auto group_order = units.order();
  std::map<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>, std::uint64_t> counts;
  for (std::uint64_t idx = 0; idx < n; ++idx) {
    const auto a = r.element_at(idx);
    std::uint64_t mult = 0;
    std::uint64_t nil = 0;
    if (unitgroup::is_unit(r, a)) {
      mult = unitgroup::multiplicative_order(r, a, group_order);
    } else {
      auto power = a;
      for (std::uint64_t t = 1; t <= n; ++t) {
        if (r.is_zero(power)) {
          nil = t;
          break;
        }
        power = r.mul(power, a);
      }
    }
    counts[{additive_order(r, a), mult, nil}]++;
  }
  std::string sig = std::to_string(n) + "|" + std::to_string(r.characteristic()) + "|" + units.to_string() + "|";
  for (const auto& [key, count] : counts) {
    const auto& [add, mult, nil] = key;
    sig += "(" + std::to_string(add) + "," + std::to_string(mult) + "," + std::to_string(nil) + ")x" +
           std::to_string(count) + ";";
  }
  return sig;
}

std::vector<CensusEntry> enumerate_rings(const std::vector<std::uint64_t>& orders, const CensusOptions& options) {
  if (orders.empty()) throw Error(ErrorCode::kDomain, "additive type must not be empty");
  std::uint64_t order = 1;
  std::uint64_t l = 1;
  for (auto d : orders) {
    if (d < 2) throw Error(ErrorCode::kDomain, "additive orders must be >= 2");
    const auto next = numtheory::checked_mul(order, d);
    if (!next || *next > kMaxCensusOrder) {
      throw Error(ErrorCode::kSizeLimit, "census is limited to rings of order <= " + std::to_string(kMaxCensusOrder));
    }
    order = *next;
    l = std::lcm(l, d);
  }
  if (orders[0] != l) throw Error(ErrorCode::kDomain, "orders[0] must be the lcm of the additive orders");
  check_ring_order(order, "enumerate_rings");

  Search root(orders);
  // Shards are the values of the first slot; rank 1 has a single shard.
  const std::size_t shards = root.slots().empty() ? 1 : root.candidates(0).size();
  std::vector<std::vector<RingPresentation>> found(shards);
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    Search search(orders);
    std::vector<Coeffs> first;
    if (!search.slots().empty()) first = search.candidates(0);
    for (std::size_t s; (s = next.fetch_add(1)) < shards;) {
      auto collect = [&](const RingPresentation& p) { found[s].push_back(p); };
      if (first.empty()) {
        search.run_from(0, collect);
        continue;
      }
      search.assign(0, first[s]);
      if (search.consistent()) search.run_from(1, collect);
      search.unassign(0);
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(options.workers, static_cast<unsigned>(shards)));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }

  std::vector<CensusEntry> out;
  std::set<std::string> seen;
  for (auto& shard : found) {
    for (auto& p : shard) {
      CensusEntry e;
      e.ring = TableRing::create(std::move(p));
      e.unit_structure = unitgroup::group_structure(*e.ring);
      e.order = e.ring->order();
      e.characteristic = e.ring->characteristic();
      e.signature = ring_signature(*e.ring, e.unit_structure);
      if (options.dedupe && !seen.insert(e.signature).second) continue;
      out.push_back(std::move(e));
    }
  }
  return out;
}

std::vector<std::vector<std::uint64_t>> additive_types(std::uint64_t order_bound,
                                                       std::optional<std::uint64_t> characteristic) {
  std::vector<std::vector<std::uint64_t>> out;
  std::vector<std::uint64_t> current;
  std::function<void(std::uint64_t, std::uint64_t)> extend = [&](std::uint64_t prev, std::uint64_t product) {
    if (!current.empty()) out.push_back(current);
    for (auto d : numtheory::divisors(prev)) {
      if (d < 2 || product * d > order_bound) continue;
      current.push_back(d);
      extend(d, product * d);
      current.pop_back();
    }
  };
  for (std::uint64_t d0 = 2; d0 <= order_bound; ++d0) {
    if (characteristic && d0 != *characteristic) continue;
    current = {d0};
    extend(d0, d0);
  }
  auto product = [](const std::vector<std::uint64_t>& v) {
    return std::accumulate(v.begin(), v.end(), std::uint64_t{1}, std::multiplies<>());
  };
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    const auto pa = product(a);
    const auto pb = product(b);
    if (pa != pb) return pa < pb;
    if (a.size() != b.size()) return a.size() < b.size();
    return a > b;
  });
  return out;
}

nlohmann::json to_json(const CensusEntry& e) {
  nlohmann::json j;
  j["order"] = e.order;
  j["characteristic"] = e.characteristic;
  j["additive_orders"] = e.ring->orders();
  j["presentation"] = serialize(*e.ring);
  j["units"] = e.unit_structure.invariant_factors;
  j["unit_structure"] = e.unit_structure.to_string();
  j["unit_count"] = e.unit_structure.order();
  return j;
}

}  // namespace fuchs::census
