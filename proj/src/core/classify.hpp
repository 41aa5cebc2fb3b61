// Copyright 2026 The fuchs Authors
// SPDX-License-Identifier: Apache-2.0

// Which indecomposable abelian groups are unit groups of rings, by
// characteristic, with witness rings. Characteristic 0 is passed as c = 0.

#ifndef FUCHS_CORE_CLASSIFY_HPP
#define FUCHS_CORE_CLASSIFY_HPP

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core/finring.hpp"
#include "core/ordgroup.hpp"

namespace fuchs::classify {

struct GroupDescriptor {
  enum class Kind { kCyclicPrimePower, kQuasiCyclic, kFiniteAbelian, kTorsionFreeOrdered };

  Kind kind = Kind::kFiniteAbelian;
  std::uint64_t p = 0;                  // cyclic and quasi-cyclic
  std::uint32_t n = 0;                  // cyclic only
  std::vector<std::uint64_t> factors;   // finite abelian only (invariant factors)
  ordgroup::SpecPtr ordered_group;      // torsion-free only

  // C_{p^n}, p prime, n >= 1.
  static GroupDescriptor cyclic(std::uint64_t p, std::uint32_t n);
  static GroupDescriptor quasi_cyclic(std::uint64_t p);
  // Normalized: trivial stays finite abelian with no factors, a single
  // prime-power factor becomes cyclic.
  static GroupDescriptor finite_abelian(const std::vector<std::uint64_t>& cyclic_orders);
  static GroupDescriptor torsion_free(ordgroup::SpecPtr spec);

  bool is_trivial() const { return kind == Kind::kFiniteAbelian && factors.empty(); }
  // p^n for cyclic groups that fit in 64 bits.
  std::optional<std::uint64_t> cyclic_order() const;
  // "C8", "C2^inf", "C1", "C2xC4", "Z^2", "Z[1/2]".
  std::string to_string() const;

  friend bool operator==(const GroupDescriptor& a, const GroupDescriptor& b);
};

struct WitnessDescriptor {
  enum class Kind { kTableRing, kSymbolic };

  Kind kind = Kind::kSymbolic;
  std::string label;  // "F9 x F2", "Z[i]", "F2[G]"
  RingPtr ring;       // null for symbolic witnesses and for fields beyond the guardrail
  bool verified = false;  // unit group and characteristic checked by enumeration
};

struct Characteristics {
  std::vector<std::uint64_t> values;   // ascending, 0 for characteristic zero
  std::vector<std::string> families;   // e.g. "q Fermat", "2q, q Fermat"
};

struct RealizabilityVerdict {
  GroupDescriptor group;
  std::optional<std::uint64_t> characteristic;  // set when asked for a given c
  bool realizable = false;
  Characteristics characteristics;
  std::optional<WitnessDescriptor> witness;
  std::string reason;
};

// Candidate characteristics {0, 2, 4} and {q, 2q : q Fermat prime <= bound};
// only 2 when p is odd. Throws kDomain for other kinds.
Characteristics admissible_characteristics(const GroupDescriptor& d, std::uint64_t char_bound);

// Fast decision without witness construction. n = nullopt means C_{p^inf}.
bool cyclic_realizable(std::uint64_t p, std::optional<std::uint32_t> n);

RealizabilityVerdict realizable_cyclic(std::uint64_t p, std::optional<std::uint32_t> n);
RealizabilityVerdict realizable_with_char(const GroupDescriptor& d, std::uint64_t c);
// Characteristic-free question for any descriptor.
RealizabilityVerdict realizable(const GroupDescriptor& d);

// Throws kNoWitness (message carries the reason tag) when not realizable.
WitnessDescriptor witness(const GroupDescriptor& d, std::uint64_t c);

// Pairs (m, d): C_m realizable, C_d a subgroup of prime-power order that is
// not, for m <= bound. C_m counts as realizable when it is a prime power
// realizable above, when m + 1 is a prime power (the field F_{m+1}), or when
// all of its primary parts are realizable (a product of witness rings).
std::vector<std::pair<std::uint64_t, std::uint64_t>> specialization_counterexamples(std::uint64_t bound);
bool cyclic_group_realizable_sufficient(std::uint64_t m);

nlohmann::json to_json(const RealizabilityVerdict& v);
nlohmann::json to_json(const WitnessDescriptor& w, const GroupDescriptor& d, std::uint64_t c);

}  // namespace fuchs::classify

#endif  // FUCHS_CORE_CLASSIFY_HPP
