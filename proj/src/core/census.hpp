// Copyright 2026 The fuchs Authors
// SPDX-License-Identifier: Apache-2.0

// Exhaustive enumeration of commutative unital table rings with a given
// additive type.

#ifndef FUCHS_CORE_CENSUS_HPP
#define FUCHS_CORE_CENSUS_HPP

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/finring.hpp"
#include "core/unitgroup.hpp"

namespace fuchs::census {

inline constexpr std::uint64_t kMaxCensusOrder = 4096;

struct CensusEntry {
  RingPtr ring;
  unitgroup::AbelianGroupStructure unit_structure;
  std::uint64_t order = 0;
  std::uint64_t characteristic = 0;
  // Order, characteristic, unit structure and the multiset of per-element
  // (additive order, multiplicative order, nilpotency index). Isomorphic
  // rings share it; distinct signatures mean non-isomorphic rings.
  std::string signature;
};

struct CensusOptions {
  bool dedupe = true;
  unsigned workers = 1;
};

// All structure constants e_i e_j (1 <= i <= j) over the additive type
// `orders` (orders[0] the characteristic, divisible by every other entry)
// that give a commutative associative unital ring. Output order does not
// depend on the worker count. Throws kSizeLimit beyond kMaxCensusOrder.
std::vector<CensusEntry> enumerate_rings(const std::vector<std::uint64_t>& orders,
                                         const CensusOptions& options = {});

// Invariant-factor types d_0, d_1, ... (d_{i+1} | d_i, d_i >= 2) with
// product <= order_bound, sorted by order, then rank, then entries.
// When `characteristic` is set only types with d_0 equal to it are listed.
std::vector<std::vector<std::uint64_t>> additive_types(std::uint64_t order_bound,
                                                       std::optional<std::uint64_t> characteristic = {});

std::string ring_signature(const TableRing& r, const unitgroup::AbelianGroupStructure& units);

nlohmann::json to_json(const CensusEntry& e);

}  // namespace fuchs::census

#endif  // FUCHS_CORE_CENSUS_HPP
