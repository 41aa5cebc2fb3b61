// Copyright 2026 The fuchs Authors
// SPDX-License-Identifier: Apache-2.0

// Finite commutative unital rings presented by additive generators e_0..e_{k-1}
// (e_0 the unity) with orders d_i, and structure constants e_i * e_j given as
// coefficient vectors in the same basis. Every element has a unique normal
// form: coefficient i reduced into [0, d_i).

#ifndef FUCHS_CORE_FINRING_HPP
#define FUCHS_CORE_FINRING_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fuchs {

using Coeffs = std::vector<std::uint64_t>;

// Raw, possibly inconsistent ring data. TableRing is the validated form.
struct RingPresentation {
  std::uint64_t characteristic = 0;
  std::vector<std::uint64_t> orders;
  // rank * rank products, row-major: products[i * rank + j] = e_i * e_j.
  std::vector<Coeffs> products;
  // Set when the basis is 1, x, ..., x^{k-1}; holds x^k in normal form.
  std::optional<Coeffs> top;
  std::string label;

  std::size_t rank() const { return orders.size(); }
  const Coeffs& product(std::size_t i, std::size_t j) const { return products[i * rank() + j]; }
};

// First failing axiom found by validate_axioms. Indices are basis positions;
// `l` is only meaningful for associativity ((e_i e_j) e_l vs e_i (e_j e_l))
// and for order consistency, where it names the offending coordinate.
struct AxiomWitness {
  std::string axiom;
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t l = 0;
  std::string detail;
};

struct AxiomReport {
  bool ok = true;
  std::optional<AxiomWitness> witness;

  explicit operator bool() const { return ok; }
};

AxiomReport validate_axioms(const RingPresentation& p);

class TableRing;
using RingPtr = std::shared_ptr<const TableRing>;

class TableRing {
 public:
  // Validates and throws kInvalidPresentation with the failing witness.
  static RingPtr create(RingPresentation p);

  std::uint64_t characteristic() const { return pres_.characteristic; }
  std::size_t rank() const { return pres_.rank(); }
  const std::vector<std::uint64_t>& orders() const { return pres_.orders; }
  // Product of the generator orders; saturates at UINT64_MAX.
  std::uint64_t order() const { return order_; }
  const std::string& label() const { return pres_.label; }
  const RingPresentation& presentation() const { return pres_; }
  const Coeffs& product(std::size_t i, std::size_t j) const { return pres_.product(i, j); }
  bool has_power_basis() const { return pres_.top.has_value(); }

  // Same ring with another label.
  RingPtr relabeled(std::string label) const;

  Coeffs zero() const { return Coeffs(rank(), 0); }
  Coeffs one() const;
  Coeffs add(const Coeffs& a, const Coeffs& b) const;
  Coeffs sub(const Coeffs& a, const Coeffs& b) const;
  Coeffs neg(const Coeffs& a) const;
  Coeffs scale(const Coeffs& a, std::uint64_t n) const;
  Coeffs mul(const Coeffs& a, const Coeffs& b) const;
  Coeffs pow(Coeffs a, std::uint64_t e) const;
  Coeffs reduce(const Coeffs& raw) const;
  bool is_zero(const Coeffs& a) const;
  bool is_one(const Coeffs& a) const;

  // Mixed-radix index with coefficient 0 least significant.
  std::uint64_t index_of(const Coeffs& a) const;
  Coeffs element_at(std::uint64_t index) const;

  // "2 + x" for power bases, "1 + 3*e2" otherwise.
  std::string format(const Coeffs& a) const;

  // Structural equality (characteristic, orders, products); labels ignored.
  bool same_structure(const TableRing& other) const;

 private:
  struct Term {
    std::uint32_t coord;
    std::uint64_t coef;
  };

  explicit TableRing(RingPresentation p);

  RingPresentation pres_;
  std::uint64_t order_ = 1;
  std::vector<std::vector<Term>> sparse_;  // rank * rank
};

class RingElement {
 public:
  RingElement(RingPtr owner, Coeffs coeffs);

  const RingPtr& owner() const { return owner_; }
  const TableRing& ring() const { return *owner_; }
  const Coeffs& coeffs() const { return coeffs_; }
  std::uint64_t index() const { return owner_->index_of(coeffs_); }
  std::string to_string() const { return owner_->format(coeffs_); }

  friend bool operator==(const RingElement& a, const RingElement& b);

 private:
  RingPtr owner_;
  Coeffs coeffs_;
};

RingElement one(const RingPtr& r);
RingElement zero(const RingPtr& r);
// e_i for a basis position i.
RingElement basis_element(const RingPtr& r, std::size_t i);

// Mixed operands throw kRingMismatch.
RingElement add(const RingElement& a, const RingElement& b);
RingElement sub(const RingElement& a, const RingElement& b);
RingElement mul(const RingElement& a, const RingElement& b);
RingElement neg(const RingElement& a);
RingElement pow(const RingElement& a, std::uint64_t e);

inline RingElement operator+(const RingElement& a, const RingElement& b) { return add(a, b); }
inline RingElement operator-(const RingElement& a, const RingElement& b) { return sub(a, b); }
inline RingElement operator*(const RingElement& a, const RingElement& b) { return mul(a, b); }
inline RingElement operator-(const RingElement& a) { return neg(a); }

// ---- constructors ----------------------------------------------------------

// Z/c, c >= 2; throws kInvalidCharacteristic otherwise.
RingPtr mk_zn(std::uint64_t c);

// Z_c[x] modulo x^k = top and d_i x^i = 0, basis 1, x, ..., x^{k-1}.
// orders[0] must equal c. An empty label is replaced by the canonical one,
// e.g. "Z4[x]/(x^2-2,2x)".
RingPtr mk_poly_quotient(std::uint64_t c, std::vector<std::uint64_t> orders, Coeffs top,
                         std::string label = {});

// F_{p^k} as Z_p[x]/(f) for the least monic irreducible f of degree k.
// F_p itself is Z_p. The order p^k is bounded by the enumeration guardrail.
RingPtr mk_finite_field(std::uint64_t p, unsigned k);

// Direct product. The unity (1, 1) becomes e_0; when the characteristics
// share a factor g > 1 a complement generator of order g follows it.
RingPtr mk_product(const RingPtr& r, const RingPtr& s);

struct Quotient {
  RingPtr ring;
  // image[i] = index in `ring` of the coset of element i of the source.
  std::vector<std::uint64_t> image;
  RingPtr source;

  RingElement project(const RingElement& a) const;
  std::uint64_t ideal_size() const;
};

// R / (gens). The ideal is the additive closure of {g * b : g in gens, b in R}.
// Throws kInvalidPresentation if the ideal is all of R (zero ring).
Quotient quotient_by_ideal(const RingPtr& r, std::span<const RingElement> gens);

// ---- text form ------------------------------------------------------------

// "char=4; orders=4,2; top=2,0" for power-basis rings, otherwise
// "char=6; orders=6,3; table=[...],[...]" listing e_i*e_j for 1 <= i <= j.
std::string serialize(const TableRing& r);
RingPtr parse_presentation(const std::string& text);

// Canonical "Z4[x]/(x^2-2,2x)" label for a power-basis presentation.
std::string poly_quotient_label(std::uint64_t c, const std::vector<std::uint64_t>& orders,
                                const Coeffs& top);

}  // namespace fuchs

#endif  // FUCHS_CORE_FINRING_HPP
