// Copyright 2026 The fuchs Authors
// SPDX-License-Identifier: Apache-2.0

#include "core/numtheory.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <algorithm>
#include <numeric>

#include "core/error.hpp"

namespace fuchs::numtheory {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::uint64_t kSmall[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto p : kSmall) {
    if (n % p == 0) return n == p;
  }
  if (n < 37 * 37) return true;
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases are a deterministic witness set for n < 3.3 * 10^24.
  for (auto a : kSmall) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  if (n <= std::numeric_limits<std::uint64_t>::max()) {
    return is_prime(static_cast<std::uint64_t>(n));
  }
  // Beyond 64 bits: 40 fixed-seed rounds; never reached by the prime-power
  // solver because q^m - 1 is even for odd q.
  return boost::multiprecision::miller_rabin_test(n, 40);
}

bool is_power_of_two(std::uint64_t n) { return n != 0 && (n & (n - 1)) == 0; }

bool is_mersenne_prime(std::uint64_t p) {
  if (p == std::numeric_limits<std::uint64_t>::max()) return false;
  return is_prime(p) && is_power_of_two(p + 1);
}

bool is_fermat_prime(std::uint64_t q) {
  return q >= 3 && is_power_of_two(q - 1) && is_prime(q);
}

bool fermat_number_is_prime(unsigned k) {
  if (k == 0) return true;  // F_0 = 3
  if (k > 12) {
    throw Error(ErrorCode::kSizeLimit,
                "Pepin test on 2^(2^" + std::to_string(k) + ")+1 is beyond desk scale");
  }
  const BigInt f = (BigInt(1) << (1u << k)) + 1;
  const BigInt e = (f - 1) / 2;
  return boost::multiprecision::powm(BigInt(3), e, f) == f - 1;
}

std::vector<PrimePower> factorize(std::uint64_t n) {
  std::vector<PrimePower> out;
  if (n < 2) return out;
  auto take = [&](std::uint64_t p) {
    std::uint32_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.push_back({p, e});
  };
  take(2);
  take(3);
  for (std::uint64_t p = 5; p <= n / p; p += 6) {
    take(p);
    take(p + 2);
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (const auto& pp : factorize(n)) out.push_back(pp.prime);
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out{1};
  for (const auto& [p, e] : factorize(n)) {
    const std::size_t base = out.size();
    std::uint64_t power = 1;
    for (std::uint32_t i = 1; i <= e; ++i) {
      power *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<PrimePower> as_prime_power(std::uint64_t n) {
  auto f = factorize(n);
  if (f.size() != 1) return std::nullopt;
  return f.front();
}

std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::kDomain, "euler_phi requires n >= 1");
  std::uint64_t result = n;
  for (auto p : prime_divisors(n)) result = result / p * (p - 1);
  return result;
}

bool has_cyclic_units_mod(std::uint64_t c) {
  if (c == 0) throw Error(ErrorCode::kDomain, "has_cyclic_units_mod requires c >= 1");
  if (c == 1 || c == 2 || c == 4) return true;
  std::uint64_t odd = c % 2 == 0 ? c / 2 : c;
  if (odd % 2 == 0) return false;  // 4 | c with c != 4
  auto pp = as_prime_power(odd);
  return pp.has_value();
}

BigInt integer_root(const BigInt& n, unsigned r) {
  if (r == 0) throw Error(ErrorCode::kDomain, "integer_root requires r >= 1");
  if (n < 2 || r == 1) return n;
  const auto bits = boost::multiprecision::msb(n) + 1;
  BigInt lo = 0;
  BigInt hi = BigInt(1) << (bits / r + 1);
  while (lo < hi) {
    BigInt mid = (lo + hi + 1) / 2;
    if (boost::multiprecision::pow(mid, r) <= n) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

std::vector<PrimePowerEquationSolution> solve_power_equation(std::uint64_t q,
                                                             std::uint32_t m_bound) {
  if (!is_prime(q)) throw Error(ErrorCode::kDomain, "solve_power_equation: q must be prime");
  if (m_bound == 0 || m_bound > 64) {
    throw Error(ErrorCode::kDomain, "solve_power_equation: m_bound must lie in [1, 64]");
  }
  std::vector<PrimePowerEquationSolution> out;
  BigInt power = 1;
  for (std::uint32_t m = 1; m <= m_bound; ++m) {
    power *= q;
    const BigInt n = power - 1;
    if (n < 2) continue;
    const unsigned max_r = static_cast<unsigned>(boost::multiprecision::msb(n));
    for (unsigned r = 1; r <= std::max(1u, max_r); ++r) {
      const BigInt root = integer_root(n, r);
      if (root < 2 || boost::multiprecision::pow(root, r) != n) continue;
      if (!is_prime(root)) continue;
      if (root > std::numeric_limits<std::uint64_t>::max()) {
        throw Error(ErrorCode::kSizeLimit, "solve_power_equation: prime exceeds 64 bits");
      }
      out.push_back({m, static_cast<std::uint64_t>(root), r});
    }
  }
  return out;
}

std::uint64_t lcm(std::uint64_t a, std::uint64_t b) { return std::lcm(a, b); }

std::optional<std::uint64_t> checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) return std::nullopt;
  return out;
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint32_t exp) {
  std::uint64_t out = 1;
  for (std::uint32_t i = 0; i < exp; ++i) {
    auto next = checked_mul(out, base);
    if (!next) return std::nullopt;
    out = *next;
  }
  return out;
}

}  // namespace fuchs::numtheory
