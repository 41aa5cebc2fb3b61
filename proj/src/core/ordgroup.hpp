// Copyright 2026 The fuchs Authors
// SPDX-License-Identifier: Apache-2.0

// Linearly ordered torsion-free abelian groups (Z^r with lex order, subgroups
// Z[1/p_1, ..., 1/p_s] of Q with the numeric order) and the group algebra
// F_2[G] over them. Groups are written additively.

#ifndef FUCHS_CORE_ORDGROUP_HPP
#define FUCHS_CORE_ORDGROUP_HPP

#include <boost/rational.hpp>

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace fuchs::ordgroup {

using Rational = boost::rational<std::int64_t>;

class OrderedGroupSpec {
 public:
  enum class Kind { kIntLattice, kRationalSubgroup };

  // Z^rank, rank >= 1.
  static std::shared_ptr<const OrderedGroupSpec> lattice(unsigned rank);
  // Z[1/p : p in primes]; empty primes gives Z as a subgroup of Q.
  static std::shared_ptr<const OrderedGroupSpec> rational(std::vector<std::uint64_t> primes);

  Kind kind() const { return kind_; }
  unsigned rank() const { return rank_; }
  const std::vector<std::uint64_t>& primes() const { return primes_; }
  // "Z", "Z^2", "Z[1/2]", "Z[1/2,1/3]".
  std::string to_string() const;
  // True when `den` is a product of allowed primes.
  bool allows_denominator(std::int64_t den) const;

  friend bool operator==(const OrderedGroupSpec&, const OrderedGroupSpec&) = default;

 private:
  OrderedGroupSpec(Kind kind, unsigned rank, std::vector<std::uint64_t> primes)
      : kind_(kind), rank_(rank), primes_(std::move(primes)) {}

  Kind kind_;
  unsigned rank_;
  std::vector<std::uint64_t> primes_;
};

using SpecPtr = std::shared_ptr<const OrderedGroupSpec>;

enum class Cmp { kLess, kEqual, kGreater };
const char* cmp_name(Cmp c);  // "LT", "EQ", "GT"

class OrderedGroupElement {
 public:
  static OrderedGroupElement identity(const SpecPtr& spec);
  static OrderedGroupElement lattice(const SpecPtr& spec, std::vector<std::int64_t> coords);
  static OrderedGroupElement rational(const SpecPtr& spec, std::int64_t num, std::int64_t den = 1);
  // "(1,-2)" or "3" for lattices, "3/4" or "-2" for rationals.
  static OrderedGroupElement parse(const SpecPtr& spec, const std::string& text);

  const SpecPtr& spec() const { return spec_; }
  const std::vector<std::int64_t>& coords() const { return coords_; }
  const Rational& value() const { return value_; }
  std::string to_string() const;

  friend bool operator==(const OrderedGroupElement& a, const OrderedGroupElement& b);

 private:
  SpecPtr spec_;
  std::vector<std::int64_t> coords_;
  Rational value_;
};

// Mixed specs throw kSpecMismatch.
Cmp compare(const OrderedGroupElement& a, const OrderedGroupElement& b);
OrderedGroupElement operator+(const OrderedGroupElement& a, const OrderedGroupElement& b);
OrderedGroupElement operator-(const OrderedGroupElement& a);
inline bool operator<(const OrderedGroupElement& a, const OrderedGroupElement& b) {
  return compare(a, b) == Cmp::kLess;
}

// a < b and c <= d imply a + c < b + d. Returns the truth of the conclusion;
// throws kPreconditionFailed if the hypotheses do not hold.
bool ordered_product_inequality_check(const OrderedGroupElement& a, const OrderedGroupElement& b,
                                      const OrderedGroupElement& c, const OrderedGroupElement& d);

// Element of F_2[G]: a finite set of group elements, kept sorted.
class GroupAlgebraElement {
 public:
  explicit GroupAlgebraElement(SpecPtr spec) : spec_(std::move(spec)) {}
  // Terms occurring an even number of times cancel.
  static GroupAlgebraElement from_terms(const SpecPtr& spec, std::vector<OrderedGroupElement> terms);
  static GroupAlgebraElement one(const SpecPtr& spec);

  const SpecPtr& spec() const { return spec_; }
  const std::vector<OrderedGroupElement>& support() const { return support_; }
  bool is_zero() const { return support_.empty(); }
  // "{0, 1}"; zero prints as "{}".
  std::string to_string() const;

  friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b);

 private:
  SpecPtr spec_;
  std::vector<OrderedGroupElement> support_;
};

GroupAlgebraElement ga_add(const GroupAlgebraElement& f, const GroupAlgebraElement& g);
GroupAlgebraElement ga_mul(const GroupAlgebraElement& f, const GroupAlgebraElement& g);
bool ga_is_unit(const GroupAlgebraElement& f);
// Throws kNoInverse unless f is a single group element.
GroupAlgebraElement ga_inverse(const GroupAlgebraElement& f);
// min f + min g and max f + max g both survive in f * g. Throws kDomain on zero.
bool extremal_terms_survive(const GroupAlgebraElement& f, const GroupAlgebraElement& g);

// ---- sampled property checks ---------------------------------------------------

struct PropertyResult {
  std::string group;     // spec rendering
  std::string property;  // e.g. "no-nontrivial-units"
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  std::string first_failure;  // empty when failures == 0
  bool passed() const { return failures == 0; }
};

struct PropertyOptions {
  std::uint64_t seed = 20260101;
  std::uint64_t trials = 10000;
  unsigned workers = 1;
};

// Runs every property over Z, Z^2 (lex) and Z[1/2]. Each trial draws from its
// own generator derived from (seed, group, property, trial), so results do not
// depend on the number of workers.
std::vector<PropertyResult> run_property_suite(const PropertyOptions& options);

}  // namespace fuchs::ordgroup

#endif  // FUCHS_CORE_ORDGROUP_HPP
