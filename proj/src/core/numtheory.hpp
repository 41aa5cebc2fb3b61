// Copyright 2026 The fuchs Authors
// SPDX-License-Identifier: Apache-2.0

// Exact integer predicates behind the classification: primality, Mersenne and
// Fermat primes, Euler's totient, cyclicity of (Z/c)^x and the prime-power
// equation q^m - 1 = p^r.

#ifndef FUCHS_CORE_NUMTHEORY_HPP
#define FUCHS_CORE_NUMTHEORY_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace fuchs::numtheory {

using BigInt = boost::multiprecision::cpp_int;

struct PrimePower {
  std::uint64_t prime = 0;
  std::uint32_t exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// A solution of q^m - 1 = p^r for a fixed prime q.
struct PrimePowerEquationSolution {
  std::uint32_t m = 0;
  std::uint64_t p = 0;
  std::uint32_t r = 0;

  friend bool operator==(const PrimePowerEquationSolution&,
                         const PrimePowerEquationSolution&) = default;
};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

// Deterministic for every 64-bit input (Miller-Rabin with a fixed witness set
// known to be exact below 2^64).
bool is_prime(std::uint64_t n);
bool is_prime(const BigInt& n);

// n = 2^j for some j >= 0.
bool is_power_of_two(std::uint64_t n);

bool is_mersenne_prime(std::uint64_t p);
// q prime and q - 1 = 2^n with n >= 1.
bool is_fermat_prime(std::uint64_t q);
// Pepin's test on F_k = 2^(2^k) + 1. Exact; k <= 12 is desk scale.
bool fermat_number_is_prime(unsigned k);

// Trial-division factorization, primes ascending.
std::vector<PrimePower> factorize(std::uint64_t n);
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);

// n = p^k with p prime and k >= 1.
std::optional<PrimePower> as_prime_power(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

// True iff the unit group of Z/c is cyclic: c in {1, 2, 4}, or c = q^r or
// 2 q^r for an odd prime q. has_cyclic_units_mod(1) is true (trivial group).
bool has_cyclic_units_mod(std::uint64_t c);

// Largest x with x^r <= n.
BigInt integer_root(const BigInt& n, unsigned r);

// All (m, p, r) with 1 <= m <= m_bound, p prime, r >= 1 and q^m - 1 = p^r,
// in increasing m (and increasing r within one m).
std::vector<PrimePowerEquationSolution> solve_power_equation(std::uint64_t q,
                                                             std::uint32_t m_bound);

std::uint64_t lcm(std::uint64_t a, std::uint64_t b);

// a * b, or nullopt on 64-bit overflow.
std::optional<std::uint64_t> checked_mul(std::uint64_t a, std::uint64_t b);
std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint32_t exp);

}  // namespace fuchs::numtheory

#endif  // FUCHS_CORE_NUMTHEORY_HPP
