// Copyright 2026 The fuchs Authors
// SPDX-License-Identifier: Apache-2.0

#include "core/polyfield.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "core/error.hpp"

namespace fuchs::polyfield {

using numtheory::mulmod;
using numtheory::powmod;

namespace {

constexpr std::uint64_t kTrialBudget = std::uint64_t{1} << 24;

std::uint64_t inverse_mod_prime(std::uint64_t a, std::uint64_t q) {
  if (a % q == 0) throw Error(ErrorCode::kDomain, "zero has no inverse");
  return powmod(a, q - 2, q);
}

void require_same_modulus(const PrimeFieldPoly& a, const PrimeFieldPoly& b) {
  if (a.modulus() != b.modulus()) {
    throw Error(ErrorCode::kModulusMismatch,
                "polynomials over F_" + std::to_string(a.modulus()) + " and F_" +
                    std::to_string(b.modulus()));
  }
}

std::string term_string(std::uint64_t c, std::size_t degree) {
  std::string out;
  if (degree == 0) return std::to_string(c);
  if (c != 1) out = std::to_string(c) + "*";
  out += "x";
  if (degree > 1) out += "^" + std::to_string(degree);
  return out;
}

}  // namespace

PrimeFieldPoly::PrimeFieldPoly(std::uint64_t modulus, std::vector<std::uint64_t> coeffs)
    : modulus_(modulus), coeffs_(std::move(coeffs)) {
  if (!numtheory::is_prime(modulus_)) {
    throw Error(ErrorCode::kDomain, "polynomial modulus " + std::to_string(modulus_) + " is not prime");
  }
  if (modulus_ > (std::uint64_t{1} << 32)) {
    throw Error(ErrorCode::kSizeLimit, "polynomial modulus exceeds 2^32");
  }
  normalize();
}

PrimeFieldPoly PrimeFieldPoly::from_signed(std::uint64_t modulus,
                                           const std::vector<std::int64_t>& coeffs) {
  std::vector<std::uint64_t> reduced;
  reduced.reserve(coeffs.size());
  const auto m = static_cast<std::int64_t>(modulus);
  for (auto c : coeffs) reduced.push_back(static_cast<std::uint64_t>(((c % m) + m) % m));
  return {modulus, std::move(reduced)};
}

PrimeFieldPoly PrimeFieldPoly::monomial(std::uint64_t modulus, std::size_t degree, std::uint64_t c) {
  std::vector<std::uint64_t> v(degree + 1, 0);
  v[degree] = c;
  return {modulus, std::move(v)};
}

PrimeFieldPoly PrimeFieldPoly::x_pow_minus_one(std::uint64_t modulus, std::size_t n) {
  std::vector<std::uint64_t> v(n + 1, 0);
  v[0] = modulus - 1;
  v[n] = 1;
  return {modulus, std::move(v)};
}

void PrimeFieldPoly::normalize() {
  for (auto& c : coeffs_) c %= modulus_;
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

PrimeFieldPoly PrimeFieldPoly::monic() const {
  if (is_zero()) return *this;
  const auto inv = inverse_mod_prime(leading(), modulus_);
  std::vector<std::uint64_t> v(coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = mulmod(coeffs_[i], inv, modulus_);
  return {modulus_, std::move(v)};
}

PrimeFieldPoly PrimeFieldPoly::derivative() const {
  if (coeffs_.size() <= 1) return zero(modulus_);
  std::vector<std::uint64_t> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = mulmod(coeffs_[i], i % modulus_, modulus_);
  return {modulus_, std::move(v)};
}

std::string PrimeFieldPoly::body_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!out.empty()) out += " + ";
    out += term_string(coeffs_[i], i);
  }
  return out;
}

std::string PrimeFieldPoly::to_string() const {
  return body_string() + " (mod " + std::to_string(modulus_) + ")";
}

PrimeFieldPoly operator+(const PrimeFieldPoly& a, const PrimeFieldPoly& b) {
  require_same_modulus(a, b);
  std::vector<std::uint64_t> v(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = (a.coeff(i) + b.coeff(i)) % a.modulus();
  return {a.modulus(), std::move(v)};
}

PrimeFieldPoly operator-(const PrimeFieldPoly& a, const PrimeFieldPoly& b) {
  require_same_modulus(a, b);
  const auto q = a.modulus();
  std::vector<std::uint64_t> v(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = (a.coeff(i) + q - b.coeff(i)) % q;
  return {q, std::move(v)};
}

PrimeFieldPoly operator*(const PrimeFieldPoly& a, const PrimeFieldPoly& b) {
  require_same_modulus(a, b);
  if (a.is_zero() || b.is_zero()) return PrimeFieldPoly::zero(a.modulus());
  const auto q = a.modulus();
  std::vector<std::uint64_t> v(a.coeffs().size() + b.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
      v[i + j] = (v[i + j] + mulmod(a.coeffs()[i], b.coeffs()[j], q)) % q;
    }
  }
  return {q, std::move(v)};
}

std::pair<PrimeFieldPoly, PrimeFieldPoly> divmod(const PrimeFieldPoly& f, const PrimeFieldPoly& g) {
  require_same_modulus(f, g);
  if (g.is_zero()) throw Error(ErrorCode::kDomain, "polynomial division by zero");
  const auto q = f.modulus();
  if (f.degree() < g.degree()) return {PrimeFieldPoly::zero(q), f};
  std::vector<std::uint64_t> rem = f.coeffs();
  const auto& d = g.coeffs();
  const std::size_t dg = d.size() - 1;
  std::vector<std::uint64_t> quot(rem.size() - dg, 0);
  const auto inv = inverse_mod_prime(g.leading(), q);
  for (std::size_t i = rem.size(); i-- > dg;) {
    const auto c = mulmod(rem[i], inv, q);
    if (c == 0) continue;
    quot[i - dg] = c;
    for (std::size_t j = 0; j <= dg; ++j) {
      rem[i - dg + j] = (rem[i - dg + j] + q - mulmod(c, d[j], q)) % q;
    }
  }
  return {PrimeFieldPoly(q, std::move(quot)), PrimeFieldPoly(q, std::move(rem))};
}

PrimeFieldPoly poly_gcd(const PrimeFieldPoly& f, const PrimeFieldPoly& g) {
  require_same_modulus(f, g);
  PrimeFieldPoly a = f;
  PrimeFieldPoly b = g;
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

SquarefreeStatus squarefree_status(const PrimeFieldPoly& f) {
  const auto df = f.derivative();
  if (df.is_zero()) return SquarefreeStatus::kZeroDerivative;
  return poly_gcd(f, df).degree() == 0 ? SquarefreeStatus::kCoprimeToDerivative
                                       : SquarefreeStatus::kSharesFactorWithDerivative;
}

namespace {

// The i-th monic polynomial of the given degree, i read in base q with the
// constant term as the most significant digit.
PrimeFieldPoly nth_monic(std::uint64_t q, unsigned degree, std::uint64_t index) {
  std::vector<std::uint64_t> v(degree + 1, 0);
  v[degree] = 1;
  for (unsigned i = degree; i-- > 0;) {
    v[i] = index % q;
    index /= q;
  }
  return {q, std::move(v)};
}

std::uint64_t candidate_count(std::uint64_t q, unsigned degree) {
  auto n = numtheory::checked_pow(q, degree);
  if (!n || *n > kTrialBudget) {
    throw Error(ErrorCode::kSizeLimit, "trial division over F_" + std::to_string(q) +
                                           " at degree " + std::to_string(degree) +
                                           " exceeds the candidate budget");
  }
  return *n;
}

}  // namespace

std::vector<Factor> factor(const PrimeFieldPoly& f) {
  if (f.degree() < 1) throw Error(ErrorCode::kDomain, "factor requires degree >= 1");
  const auto q = f.modulus();
  std::vector<Factor> out;
  PrimeFieldPoly rest = f.monic();
  for (unsigned d = 1; 2 * d <= static_cast<unsigned>(rest.degree()); ++d) {
    const auto count = candidate_count(q, d);
    for (std::uint64_t i = 0; i < count && 2 * d <= static_cast<unsigned>(rest.degree()); ++i) {
      const auto g = nth_monic(q, d, i);
      unsigned mult = 0;
      for (;;) {
        auto [quot, rem] = divmod(rest, g);
        if (!rem.is_zero()) break;
        rest = std::move(quot);
        ++mult;
      }
      if (mult > 0) out.push_back({g, mult});
    }
  }
  if (rest.degree() >= 1) out.push_back({rest, 1});
  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) {
    if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
    return a.poly.coeffs() < b.poly.coeffs();
  });
  return out;
}

bool is_irreducible(const PrimeFieldPoly& f) {
  if (f.degree() < 1) return false;
  if (f.degree() == 1) return true;
  const auto factors = factor(f);
  return factors.size() == 1 && factors.front().multiplicity == 1;
}

PrimeFieldPoly least_monic_irreducible(std::uint64_t q, unsigned degree) {
  if (degree == 0) throw Error(ErrorCode::kDomain, "irreducible polynomials have degree >= 1");
  const auto count = candidate_count(q, degree);
  for (std::uint64_t i = 0; i < count; ++i) {
    auto g = nth_monic(q, degree, i);
    if (is_irreducible(g)) return g;
  }
  throw Error(ErrorCode::kDomain, "no irreducible polynomial found");  // unreachable
}

std::vector<std::uint64_t> CyclotomicDecomposition::unit_cyclic_orders() const {
  std::vector<std::uint64_t> out;
  for (auto m : degrees) {
    auto qm = numtheory::checked_pow(q, m);
    if (!qm) throw Error(ErrorCode::kSizeLimit, "q^m overflows");
    out.push_back(*qm - 1);
  }
  return out;
}

CyclotomicDecomposition cyclotomic_decomposition(std::uint64_t q, std::uint64_t p, unsigned k) {
  if (!numtheory::is_prime(q) || !numtheory::is_prime(p) || k == 0) {
    throw Error(ErrorCode::kDomain, "cyclotomic_decomposition needs primes q, p and k >= 1");
  }
  if (q == p) {
    throw Error(ErrorCode::kHypothesisViolation,
                "x^(p^k) - 1 is not squarefree over F_q when q = p");
  }
  auto n = numtheory::checked_pow(p, k);
  if (!n || *n > 64) throw Error(ErrorCode::kSizeLimit, "p^k exceeds the factorization bound");
  const auto f = PrimeFieldPoly::x_pow_minus_one(q, *n);
  CyclotomicDecomposition out{q, p, k, {}};
  for (const auto& fac : factor(f)) {
    if (fac.multiplicity != 1) {
      throw Error(ErrorCode::kHypothesisViolation, "repeated factor in x^(p^k) - 1");
    }
    out.degrees.push_back(static_cast<unsigned>(fac.poly.degree()));
  }
  std::sort(out.degrees.begin(), out.degrees.end());
  return out;
}

// ---- characteristic zero ----------------------------------------------------

IntPoly int_poly_trim(IntPoly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

IntPoly int_poly_mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return int_poly_trim(std::move(out));
}

IntPoly int_poly_rem_monic(const IntPoly& a, const IntPoly& monic) {
  const auto m = int_poly_trim(monic);
  if (m.empty() || m.back() != 1) throw Error(ErrorCode::kDomain, "divisor must be monic");
  IntPoly rem = int_poly_trim(a);
  const std::size_t dm = m.size() - 1;
  while (rem.size() > dm) {
    const auto c = rem.back();
    const std::size_t shift = rem.size() - 1 - dm;
    for (std::size_t j = 0; j <= dm; ++j) rem[shift + j] -= c * m[j];
    rem = int_poly_trim(std::move(rem));
  }
  return rem;
}

bool int_poly_divides_monic(const IntPoly& divisor, const IntPoly& f) {
  return int_poly_rem_monic(f, divisor).empty();
}

bool product_identity_holds(const IntPoly& a, const IntPoly& b, const IntPoly& expected) {
  return int_poly_mul(a, b) == int_poly_trim(expected);
}

bool char0_inverse_identity() {
  const IntPoly inverse{1, 0, -1, 1};  // 1 - x^2 + x^3
  const IntPoly unit{1, 1, 1};         // 1 + x + x^2
  const IntPoly beta{1, 0, 0, 0, 1};   // x^4 + 1
  // 1 + x * (x^4 + 1)
  IntPoly expected = int_poly_mul(IntPoly{0, 1}, beta);
  expected[0] += 1;
  return product_identity_holds(inverse, unit, expected) &&
         int_poly_rem_monic(int_poly_mul(inverse, unit), beta) == IntPoly{1};
}

QuadInt zeta8_squared_modulus(const std::array<std::int64_t, 4>& c) {
  // conj(z^j) = z^-j = -z^(4-j) for j = 1..3.
  const std::array<std::int64_t, 4> conj{c[0], -c[3], -c[2], -c[1]};
  std::array<std::int64_t, 4> r{0, 0, 0, 0};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const int e = i + j;
      const auto term = c[i] * conj[j];
      if (e < 4) {
        r[e] += term;
      } else {
        r[e - 4] -= term;
      }
    }
  }
  if (r[2] != 0 || r[3] != -r[1]) {
    throw Error(ErrorCode::kDomain, "squared modulus is not real");  // cannot happen
  }
  return {r[0], r[1]};
}

QuadInt zeta8_unit_circle_check() { return zeta8_squared_modulus({1, 1, 1, 0}); }

bool has_low_degree_integer_factor(const IntPoly& f) {
  const auto g = int_poly_trim(f);
  if (g.empty() || g.back() != 1) throw Error(ErrorCode::kDomain, "expected a monic polynomial");
  const auto n = g.size() - 1;
  std::int64_t bound = 0;
  for (std::size_t i = 0; i + 1 < g.size(); ++i) bound = std::max(bound, std::abs(g[i]));
  bound += 1;  // Cauchy: every complex root has modulus < 1 + max |a_i|
  if (n >= 2) {
    for (std::int64_t r = -bound; r <= bound; ++r) {
      if (int_poly_divides_monic({-r, 1}, g)) return true;
    }
  }
  if (n >= 3) {
    for (std::int64_t a = -2 * bound; a <= 2 * bound; ++a) {
      for (std::int64_t b = -bound * bound; b <= bound * bound; ++b) {
        if (int_poly_divides_monic({b, a, 1}, g)) return true;
      }
    }
  }
  return false;
}

}  // namespace fuchs::polyfield
