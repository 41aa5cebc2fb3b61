// Copyright 2026 The fuchs Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FUCHS_CORE_POLYFIELD_HPP
#define FUCHS_CORE_POLYFIELD_HPP

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "core/numtheory.hpp"

namespace fuchs::polyfield {

// Polynomial over Z/q for a prime q. Coefficients low degree first, reduced
// into [0, q), no trailing zeros (the zero polynomial has no coefficients).
class PrimeFieldPoly {
 public:
  PrimeFieldPoly(std::uint64_t modulus, std::vector<std::uint64_t> coeffs);
  // Coefficients may be negative; they are reduced mod q.
  static PrimeFieldPoly from_signed(std::uint64_t modulus, const std::vector<std::int64_t>& coeffs);
  static PrimeFieldPoly zero(std::uint64_t modulus) { return {modulus, {}}; }
  static PrimeFieldPoly constant(std::uint64_t modulus, std::uint64_t c) { return {modulus, {c}}; }
  static PrimeFieldPoly monomial(std::uint64_t modulus, std::size_t degree, std::uint64_t c = 1);
  // x^n - 1.
  static PrimeFieldPoly x_pow_minus_one(std::uint64_t modulus, std::size_t n);

  std::uint64_t modulus() const { return modulus_; }
  const std::vector<std::uint64_t>& coeffs() const { return coeffs_; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }
  std::uint64_t leading() const { return is_zero() ? 0 : coeffs_.back(); }
  std::uint64_t coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }

  PrimeFieldPoly monic() const;
  PrimeFieldPoly derivative() const;

  // "1 + x + x^3 (mod 2)"; the zero polynomial prints as "0 (mod q)".
  std::string to_string() const;
  // Same without the modulus suffix.
  std::string body_string() const;

  friend PrimeFieldPoly operator+(const PrimeFieldPoly& a, const PrimeFieldPoly& b);
  friend PrimeFieldPoly operator-(const PrimeFieldPoly& a, const PrimeFieldPoly& b);
  friend PrimeFieldPoly operator*(const PrimeFieldPoly& a, const PrimeFieldPoly& b);
  friend bool operator==(const PrimeFieldPoly&, const PrimeFieldPoly&) = default;

 private:
  void normalize();

  std::uint64_t modulus_;
  std::vector<std::uint64_t> coeffs_;
};

// Quotient and remainder; throws kDomain on division by zero.
std::pair<PrimeFieldPoly, PrimeFieldPoly> divmod(const PrimeFieldPoly& f, const PrimeFieldPoly& g);

// Monic gcd. gcd(f, 0) = monic(f); gcd(0, 0) = 0.
PrimeFieldPoly poly_gcd(const PrimeFieldPoly& f, const PrimeFieldPoly& g);

enum class SquarefreeStatus {
  kCoprimeToDerivative,
  kSharesFactorWithDerivative,
  kZeroDerivative,  // every exponent is divisible by q
};
SquarefreeStatus squarefree_status(const PrimeFieldPoly& f);

struct Factor {
  PrimeFieldPoly poly;
  unsigned multiplicity = 0;

  friend bool operator==(const Factor&, const Factor&) = default;
};

// Complete factorization into monic irreducibles by trial division against
// every monic polynomial of increasing degree. The leading coefficient is
// dropped (factors are monic). Throws kSizeLimit when a trial degree needs
// more than 2^24 candidate divisors.
std::vector<Factor> factor(const PrimeFieldPoly& f);

bool is_irreducible(const PrimeFieldPoly& f);

// Least monic irreducible of the given degree, coefficient vectors compared
// lexicographically from the constant term upward.
PrimeFieldPoly least_monic_irreducible(std::uint64_t q, unsigned degree);

struct CyclotomicDecomposition {
  std::uint64_t q = 0;
  std::uint64_t p = 0;
  unsigned k = 0;
  // Degrees of the distinct irreducible factors of x^(p^k) - 1 over F_q,
  // ascending.
  std::vector<unsigned> degrees;

  // Orders q^m_i - 1 of the cyclic factors of the unit group of
  // F_q[x]/(x^(p^k) - 1).
  std::vector<std::uint64_t> unit_cyclic_orders() const;
};

// Throws kHypothesisViolation when q == p.
CyclotomicDecomposition cyclotomic_decomposition(std::uint64_t q, std::uint64_t p, unsigned k);

// ---- Exact characteristic-zero identities ----------------------------------

using IntPoly = std::vector<std::int64_t>;  // low degree first

IntPoly int_poly_mul(const IntPoly& a, const IntPoly& b);
IntPoly int_poly_trim(IntPoly a);
// Remainder modulo a monic polynomial.
IntPoly int_poly_rem_monic(const IntPoly& a, const IntPoly& monic);
// Exact division test over Z by a monic divisor.
bool int_poly_divides_monic(const IntPoly& divisor, const IntPoly& f);

// a * b == expected coefficientwise.
bool product_identity_holds(const IntPoly& a, const IntPoly& b, const IntPoly& expected);

// (1 - x^2 + x^3)(1 + x + x^2) = 1 + x(x^4 + 1), hence = 1 mod x^4 + 1.
bool char0_inverse_identity();

// a + b*sqrt(2).
struct QuadInt {
  std::int64_t a = 0;
  std::int64_t b = 0;

  friend bool operator==(const QuadInt&, const QuadInt&) = default;
};

// |c0 + c1 z + c2 z^2 + c3 z^3|^2 for z = exp(i pi / 4), computed in
// Z[z] (z^4 = -1) and read back in Z[sqrt 2] with sqrt 2 = z - z^3.
QuadInt zeta8_squared_modulus(const std::array<std::int64_t, 4>& c);

// |1 + z + z^2|^2 = 3 + 2 sqrt 2.
QuadInt zeta8_unit_circle_check();

// True when f (monic, integer) has a monic integer factor of degree 1 or 2,
// searched exhaustively under the Cauchy root bound.
bool has_low_degree_integer_factor(const IntPoly& f);

}  // namespace fuchs::polyfield

#endif  // FUCHS_CORE_POLYFIELD_HPP
