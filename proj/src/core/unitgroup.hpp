// Copyright 2026 The fuchs Authors
// SPDX-License-Identifier: Apache-2.0

// Unit groups of finite TableRings and their invariant factors.

#ifndef FUCHS_CORE_UNITGROUP_HPP
#define FUCHS_CORE_UNITGROUP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "core/finring.hpp"

namespace fuchs::unitgroup {

// m_1 | m_2 | ... | m_s, each >= 2. Empty for the trivial group.
struct AbelianGroupStructure {
  std::vector<std::uint64_t> invariant_factors;

  std::uint64_t order() const;
  // "C_2 x C_4"; "C_1" for the trivial group.
  std::string to_string() const;

  // Structure of C_{n_1} x ... x C_{n_t} for arbitrary n_i >= 1.
  static AbelianGroupStructure from_cyclic_orders(const std::vector<std::uint64_t>& orders);

  friend bool operator==(const AbelianGroupStructure&, const AbelianGroupStructure&) = default;
};

bool is_cyclic(const AbelianGroupStructure& g);
// Trivial, or cyclic of prime-power order.
bool is_indecomposable(const AbelianGroupStructure& g);
// #{x : x^d = 1} predicted by the invariant factors.
std::uint64_t count_solutions(const AbelianGroupStructure& g, std::uint64_t d);

// Multiplication by u is a bijection of R, tested on R/lR for each prime l.
bool is_unit(const TableRing& r, const Coeffs& u);

// Element indices of all units, ascending. Enumeration is split over
// `workers` threads; the result does not depend on the split.
std::vector<std::uint64_t> unit_indices(const TableRing& r, unsigned workers = 1);
std::vector<RingElement> units(const RingPtr& r, unsigned workers = 1);

// Order of u in a group of order `group_order`.
std::uint64_t multiplicative_order(const TableRing& r, const Coeffs& u, std::uint64_t group_order);

AbelianGroupStructure structure_from_units(const TableRing& r, const std::vector<std::uint64_t>& unit_idx);
AbelianGroupStructure group_structure(const TableRing& r, unsigned workers = 1);

}  // namespace fuchs::unitgroup

#endif  // FUCHS_CORE_UNITGROUP_HPP
