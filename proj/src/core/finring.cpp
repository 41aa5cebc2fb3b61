// Copyright 2026 The fuchs Authors
// SPDX-License-Identifier: Apache-2.0

#include "core/finring.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "core/error.hpp"
#include "core/numtheory.hpp"
#include "core/polyfield.hpp"

namespace fuchs {

namespace {

constexpr std::uint64_t kMaxCharacteristic = std::uint64_t{1} << 32;

std::string join(const std::vector<std::uint64_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

AxiomReport fail(std::string axiom, std::size_t i, std::size_t j, std::size_t l,
                 std::string detail) {
  return {false, AxiomWitness{std::move(axiom), i, j, l, std::move(detail)}};
}

// Bilinear extension on an unvalidated presentation.
Coeffs raw_mul(const RingPresentation& p, const Coeffs& a, const Coeffs& b) {
  const std::size_t k = p.rank();
  const auto c = p.characteristic;
  Coeffs acc(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < k; ++j) {
      if (b[j] == 0) continue;
      const auto ab = a[i] * b[j] % c;
      const auto& t = p.product(i, j);
      for (std::size_t l = 0; l < k; ++l) acc[l] = (acc[l] + ab * t[l] % c) % c;
    }
  }
  for (std::size_t l = 0; l < k; ++l) acc[l] %= p.orders[l];
  return acc;
}

Coeffs unit_vector(std::size_t k, std::size_t i) {
  Coeffs v(k, 0);
  v[i] = 1;
  return v;
}

}  // namespace

AxiomReport validate_axioms(const RingPresentation& p) {
  const std::size_t k = p.rank();
  const auto c = p.characteristic;
  if (c < 2) return fail("shape", 0, 0, 0, "characteristic must be at least 2");
  if (c >= kMaxCharacteristic) return fail("shape", 0, 0, 0, "characteristic exceeds 2^32");
  if (k == 0) return fail("shape", 0, 0, 0, "rank must be at least 1");
  if (p.orders[0] != c) return fail("shape", 0, 0, 0, "d_0 must equal the characteristic");
  for (std::size_t i = 0; i < k; ++i) {
    if (p.orders[i] < 2 || c % p.orders[i] != 0) {
      return fail("shape", i, 0, 0, "generator order must be >= 2 and divide the characteristic");
    }
  }
  if (p.products.size() != k * k) return fail("shape", 0, 0, 0, "product table must be rank x rank");
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const auto& t = p.product(i, j);
      if (t.size() != k) return fail("shape", i, j, 0, "product vector has wrong length");
      for (std::size_t l = 0; l < k; ++l) {
        if (t[l] >= p.orders[l]) return fail("normal-form", i, j, l, "coefficient not reduced");
      }
    }
  }
  for (std::size_t j = 0; j < k; ++j) {
    const auto e = unit_vector(k, j);
    if (p.product(0, j) != e) return fail("unity", 0, j, 0, "e_0 * e_j != e_j");
    if (p.product(j, 0) != e) return fail("unity", j, 0, 0, "e_j * e_0 != e_j");
  }
  // d_i e_i = 0 forces d_i (e_i e_j) = 0.
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const auto& t = p.product(i, j);
      for (std::size_t l = 0; l < k; ++l) {
        if (p.orders[i] * t[l] % p.orders[l] != 0) {
          return fail("order-consistency", i, j, l,
                      "d_" + std::to_string(i) + " * (e_" + std::to_string(i) + " e_" +
                          std::to_string(j) + ") is nonzero");
        }
      }
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (p.product(i, j) != p.product(j, i)) return fail("commutativity", i, j, 0, "e_i e_j != e_j e_i");
    }
  }
  for (std::size_t i = 1; i < k; ++i) {
    for (std::size_t j = 1; j < k; ++j) {
      for (std::size_t l = 1; l < k; ++l) {
        const auto left = raw_mul(p, p.product(i, j), unit_vector(k, l));
        const auto right = raw_mul(p, unit_vector(k, i), p.product(j, l));
        if (left != right) return fail("associativity", i, j, l, "(e_i e_j) e_l != e_i (e_j e_l)");
      }
    }
  }
  return {};
}

// ---- TableRing --------------------------------------------------------------

TableRing::TableRing(RingPresentation p) : pres_(std::move(p)) {
  const std::size_t k = rank();
  for (auto d : pres_.orders) {
    auto next = numtheory::checked_mul(order_, d);
    order_ = next ? *next : std::numeric_limits<std::uint64_t>::max();
  }
  sparse_.resize(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const auto& t = pres_.product(i, j);
      for (std::size_t l = 0; l < k; ++l) {
        if (t[l] != 0) sparse_[i * k + j].push_back({static_cast<std::uint32_t>(l), t[l]});
      }
    }
  }
}

RingPtr TableRing::create(RingPresentation p) {
  const auto report = validate_axioms(p);
  if (!report) {
    const auto& w = *report.witness;
    std::ostringstream msg;
    msg << "invalid presentation (" << w.axiom << " fails at (" << w.i << "," << w.j << ","
        << w.l << ")): " << w.detail;
    throw Error(ErrorCode::kInvalidPresentation, msg.str());
  }
  return RingPtr(new TableRing(std::move(p)));
}

RingPtr TableRing::relabeled(std::string label) const {
  auto copy = pres_;
  copy.label = std::move(label);
  return RingPtr(new TableRing(std::move(copy)));
}

Coeffs TableRing::one() const { return unit_vector(rank(), 0); }

Coeffs TableRing::add(const Coeffs& a, const Coeffs& b) const {
  Coeffs r(rank());
  for (std::size_t i = 0; i < r.size(); ++i) {
    const auto d = pres_.orders[i];
    const auto s = a[i] + b[i];
    r[i] = s >= d ? s - d : s;
  }
  return r;
}

Coeffs TableRing::neg(const Coeffs& a) const {
  Coeffs r(rank());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] == 0 ? 0 : pres_.orders[i] - a[i];
  return r;
}

Coeffs TableRing::sub(const Coeffs& a, const Coeffs& b) const { return add(a, neg(b)); }

Coeffs TableRing::scale(const Coeffs& a, std::uint64_t n) const {
  Coeffs r(rank());
  for (std::size_t i = 0; i < r.size(); ++i) {
    r[i] = numtheory::mulmod(a[i], n % pres_.orders[i], pres_.orders[i]);
  }
  return r;
}

Coeffs TableRing::reduce(const Coeffs& raw) const {
  if (raw.size() != rank()) throw Error(ErrorCode::kRingMismatch, "coefficient vector has wrong length");
  Coeffs r(rank());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = raw[i] % pres_.orders[i];
  return r;
}

Coeffs TableRing::mul(const Coeffs& a, const Coeffs& b) const {
  const std::size_t k = rank();
  const auto c = pres_.characteristic;
  if (k == 1) return {a[0] * b[0] % c};
  Coeffs acc(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < k; ++j) {
      if (b[j] == 0) continue;
      const auto ab = a[i] * b[j] % c;
      for (const auto& term : sparse_[i * k + j]) {
        auto& slot = acc[term.coord];
        slot += ab * term.coef % c;
        if (slot >= c) slot -= c;
      }
    }
  }
  for (std::size_t l = 0; l < k; ++l) acc[l] %= pres_.orders[l];
  return acc;
}

Coeffs TableRing::pow(Coeffs a, std::uint64_t e) const {
  Coeffs result = one();
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    e >>= 1;
    if (e) a = mul(a, a);
  }
  return result;
}

bool TableRing::is_zero(const Coeffs& a) const {
  return std::all_of(a.begin(), a.end(), [](auto v) { return v == 0; });
}

bool TableRing::is_one(const Coeffs& a) const {
  if (a[0] != 1) return false;
  return std::all_of(a.begin() + 1, a.end(), [](auto v) { return v == 0; });
}

std::uint64_t TableRing::index_of(const Coeffs& a) const {
  std::uint64_t index = 0;
  for (std::size_t i = rank(); i-- > 0;) index = index * pres_.orders[i] + a[i];
  return index;
}

Coeffs TableRing::element_at(std::uint64_t index) const {
  Coeffs a(rank());
  for (std::size_t i = 0; i < a.size(); ++i) {
    a[i] = index % pres_.orders[i];
    index /= pres_.orders[i];
  }
  return a;
}

std::string TableRing::format(const Coeffs& a) const {
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += std::to_string(a[i]);
      continue;
    }
    if (a[i] != 1) out += std::to_string(a[i]) + "*";
    if (has_power_basis()) {
      out += i == 1 ? "x" : "x^" + std::to_string(i);
    } else {
      out += "e" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

bool TableRing::same_structure(const TableRing& other) const {
  return pres_.characteristic == other.pres_.characteristic && pres_.orders == other.pres_.orders &&
         pres_.products == other.pres_.products;
}

// ---- RingElement ------------------------------------------------------------

RingElement::RingElement(RingPtr owner, Coeffs coeffs) : owner_(std::move(owner)) {
  coeffs_ = owner_->reduce(coeffs);
}

bool operator==(const RingElement& a, const RingElement& b) {
  return (a.owner_ == b.owner_ || a.owner_->same_structure(*b.owner_)) && a.coeffs_ == b.coeffs_;
}

namespace {

void require_same_ring(const RingElement& a, const RingElement& b) {
  if (a.owner() != b.owner() && !a.ring().same_structure(b.ring())) {
    throw Error(ErrorCode::kRingMismatch,
                "operands belong to different rings (" + a.ring().label() + ", " + b.ring().label() + ")");
  }
}

}  // namespace

RingElement one(const RingPtr& r) { return {r, r->one()}; }
RingElement zero(const RingPtr& r) { return {r, r->zero()}; }
RingElement basis_element(const RingPtr& r, std::size_t i) {
  if (i >= r->rank()) throw Error(ErrorCode::kDomain, "basis index out of range");
  return {r, unit_vector(r->rank(), i)};
}

RingElement add(const RingElement& a, const RingElement& b) {
  require_same_ring(a, b);
  return {a.owner(), a.ring().add(a.coeffs(), b.coeffs())};
}

RingElement sub(const RingElement& a, const RingElement& b) {
  require_same_ring(a, b);
  return {a.owner(), a.ring().sub(a.coeffs(), b.coeffs())};
}

RingElement mul(const RingElement& a, const RingElement& b) {
  require_same_ring(a, b);
  return {a.owner(), a.ring().mul(a.coeffs(), b.coeffs())};
}

RingElement neg(const RingElement& a) { return {a.owner(), a.ring().neg(a.coeffs())}; }

RingElement pow(const RingElement& a, std::uint64_t e) { return {a.owner(), a.ring().pow(a.coeffs(), e)}; }

// ---- constructors -----------------------------------------------------------

RingPtr mk_zn(std::uint64_t c) {
  if (c < 2) {
    throw Error(ErrorCode::kInvalidCharacteristic, "Z_c needs c >= 2, got " + std::to_string(c));
  }
  if (c >= kMaxCharacteristic) throw Error(ErrorCode::kSizeLimit, "characteristic exceeds 2^32");
  RingPresentation p;
  p.characteristic = c;
  p.orders = {c};
  p.products = {Coeffs{1}};
  p.label = "Z" + std::to_string(c);
  return TableRing::create(std::move(p));
}

std::string poly_quotient_label(std::uint64_t c, const std::vector<std::uint64_t>& orders,
                                const Coeffs& top) {
  const std::size_t k = orders.size();
  auto monomial = [](std::uint64_t coef, std::size_t deg) {
    std::string s = coef == 1 && deg > 0 ? "" : std::to_string(coef);
    if (deg >= 1) s += "x";
    if (deg >= 2) s += "^" + std::to_string(deg);
    return s;
  };
  std::string rel = monomial(1, k);
  for (std::size_t i = k; i-- > 0;) {
    if (i < top.size() && top[i] % orders[i] != 0) rel += "-" + monomial(top[i] % orders[i], i);
  }
  std::string out = (numtheory::is_prime(c) ? "F" : "Z") + std::to_string(c) + "[x]/(" + rel;
  for (std::size_t i = 1; i < k; ++i) {
    if (orders[i] < orders[i - 1]) out += "," + monomial(orders[i], i);
  }
  return out + ")";
}

RingPtr mk_poly_quotient(std::uint64_t c, std::vector<std::uint64_t> orders, Coeffs top,
                         std::string label) {
  const std::size_t k = orders.size();
  if (c < 2) throw Error(ErrorCode::kInvalidCharacteristic, "characteristic must be >= 2");
  if (k == 0 || orders[0] != c || top.size() != k) {
    throw Error(ErrorCode::kInvalidPresentation,
                "need orders[0] = c and a top vector with one entry per basis element");
  }
  for (auto d : orders) {
    if (d < 2 || c % d != 0) {
      throw Error(ErrorCode::kInvalidPresentation, "every order must be >= 2 and divide c");
    }
  }
  for (std::size_t i = 0; i < k; ++i) top[i] %= orders[i];

  // powers[m] = x^m in normal form for m <= 2k - 2.
  std::vector<Coeffs> powers;
  for (std::size_t m = 0; m < k; ++m) powers.push_back(unit_vector(k, m));
  for (std::size_t m = k; m + 1 < 2 * k; ++m) {
    const auto& prev = powers.back();
    Coeffs next(k, 0);
    for (std::size_t i = 0; i + 1 < k; ++i) next[i + 1] = prev[i];
    const auto carry = prev[k - 1];
    for (std::size_t i = 0; i < k; ++i) next[i] = (next[i] + carry * top[i]) % orders[i];
    powers.push_back(std::move(next));
  }
  RingPresentation p;
  p.characteristic = c;
  p.orders = orders;
  p.products.resize(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      p.products[i * k + j] = i + j < k ? unit_vector(k, i + j) : powers[i + j];
    }
  }
  if (k == 1) p.products[0] = {1};
  p.top = top;
  p.label = label.empty() ? poly_quotient_label(c, orders, top) : std::move(label);
  return TableRing::create(std::move(p));
}

RingPtr mk_finite_field(std::uint64_t p, unsigned k) {
  if (!numtheory::is_prime(p)) {
    throw Error(ErrorCode::kDomain, "finite field characteristic " + std::to_string(p) + " is not prime");
  }
  if (k == 0) throw Error(ErrorCode::kDomain, "finite field degree must be >= 1");
  const auto q = numtheory::checked_pow(p, k);
  if (!q) throw Error(ErrorCode::kSizeLimit, "finite field order overflows");
  check_ring_order(*q, "mk_finite_field");
  const std::string label = "F" + std::to_string(*q);
  if (k == 1) return mk_zn(p)->relabeled(label);
  const auto f = polyfield::least_monic_irreducible(p, k);
  Coeffs top(k);
  for (unsigned i = 0; i < k; ++i) top[i] = (p - f.coeff(i)) % p;
  return mk_poly_quotient(p, std::vector<std::uint64_t>(k, p), std::move(top), label);
}

RingPtr mk_product(const RingPtr& r, const RingPtr& s) {
  const auto order = numtheory::checked_mul(r->order(), s->order());
  if (!order) throw Error(ErrorCode::kSizeLimit, "product order overflows");
  check_ring_order(*order, "mk_product");
  const auto c1 = r->characteristic();
  const auto c2 = s->characteristic();
  const auto l = std::lcm(c1, c2);
  const auto g = std::gcd(c1, c2);
  if (l >= kMaxCharacteristic) throw Error(ErrorCode::kSizeLimit, "characteristic exceeds 2^32");

  // Coordinates (x, y) of (a, b) in Z/c1 x Z/c2 w.r.t. (1, 1) and (s, 1 + s).
  std::uint64_t shift = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> unity_coords;
  if (g > 1) {
    bool found = false;
    for (shift = 0; shift < l && !found; ++shift) {
      if (g * shift % c1 != 0 || g * (1 + shift) % c2 != 0) continue;
      std::vector<std::pair<std::uint64_t, std::uint64_t>> table(c1 * c2, {l, g});
      bool bijective = true;
      for (std::uint64_t x = 0; x < l && bijective; ++x) {
        for (std::uint64_t y = 0; y < g; ++y) {
          const auto a = (x + y * shift) % c1;
          const auto b = (x + y * (1 + shift)) % c2;
          auto& slot = table[a * c2 + b];
          if (slot.first != l) {
            bijective = false;
            break;
          }
          slot = {x, y};
        }
      }
      if (bijective) {
        unity_coords = std::move(table);
        found = true;
      }
    }
    if (!found) throw Error(ErrorCode::kInvalidPresentation, "no additive complement for the unity");
    --shift;
  }

  const std::size_t kr = r->rank();
  const std::size_t ks = s->rank();
  const std::size_t extra = g > 1 ? 1 : 0;
  const std::size_t k = 1 + extra + (kr - 1) + (ks - 1);

  RingPresentation p;
  p.characteristic = l;
  p.orders.push_back(l);
  if (extra) p.orders.push_back(g);
  for (std::size_t i = 1; i < kr; ++i) p.orders.push_back(r->orders()[i]);
  for (std::size_t j = 1; j < ks; ++j) p.orders.push_back(s->orders()[j]);

  auto to_coords = [&](const Coeffs& a, const Coeffs& b) {
    Coeffs out(k, 0);
    if (extra) {
      const auto [x, y] = unity_coords[a[0] * c2 + b[0]];
      out[0] = x;
      out[1] = y;
    } else {
      // CRT: x = a mod c1, x = b mod c2.
      for (std::uint64_t x = a[0]; x < l; x += c1) {
        if (x % c2 == b[0]) {
          out[0] = x;
          break;
        }
      }
    }
    std::size_t pos = 1 + extra;
    for (std::size_t i = 1; i < kr; ++i) out[pos++] = a[i];
    for (std::size_t j = 1; j < ks; ++j) out[pos++] = b[j];
    return out;
  };

  std::vector<std::pair<Coeffs, Coeffs>> basis;
  basis.emplace_back(r->one(), s->one());
  if (extra) basis.emplace_back(r->scale(r->one(), shift), s->scale(s->one(), shift + 1));
  for (std::size_t i = 1; i < kr; ++i) basis.emplace_back(unit_vector(kr, i), s->zero());
  for (std::size_t j = 1; j < ks; ++j) basis.emplace_back(r->zero(), unit_vector(ks, j));

  p.products.resize(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      p.products[i * k + j] = to_coords(r->mul(basis[i].first, basis[j].first),
                                        s->mul(basis[i].second, basis[j].second));
    }
  }
  p.label = r->label() + " x " + s->label();
  return TableRing::create(std::move(p));
}

// ---- quotients --------------------------------------------------------------

namespace {

// A finite ring given by element codes and operations on them, re-presented
// as a TableRing by choosing an additive basis that starts at the unity.
struct AbstractRing {
  std::vector<std::uint64_t> elements;
  std::uint64_t zero = 0;
  std::uint64_t one = 0;
  std::function<std::uint64_t(std::uint64_t, std::uint64_t)> add;
  std::function<std::uint64_t(std::uint64_t, std::uint64_t)> mul;
};

struct Presented {
  RingPtr ring;
  std::unordered_map<std::uint64_t, Coeffs> coords;
};

Presented present(const AbstractRing& a, const std::string& label) {
  const std::size_t n = a.elements.size();
  std::unordered_map<std::uint64_t, std::size_t> pos;
  for (std::size_t i = 0; i < n; ++i) pos[a.elements[i]] = i;

  auto multiple = [&](std::uint64_t x, std::uint64_t t) {
    std::uint64_t acc = a.zero;
    for (std::uint64_t i = 0; i < t; ++i) acc = a.add(acc, x);
    return acc;
  };
  auto additive_order = [&](std::uint64_t x) {
    std::uint64_t acc = x;
    std::uint64_t o = 1;
    while (acc != a.zero) {
      acc = a.add(acc, x);
      ++o;
    }
    return o;
  };

  std::vector<std::uint64_t> basis{a.one};
  std::vector<std::uint64_t> orders{additive_order(a.one)};
  // Members of the subgroup spanned by the chosen basis, in generation order.
  std::vector<std::uint64_t> members;
  std::vector<char> in_span(n, 0);
  auto rebuild_span = [&]() {
    members.assign(1, a.zero);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const std::size_t base = members.size();
      std::uint64_t step = basis[b];
      for (std::uint64_t t = 1; t < orders[b]; ++t) {
        for (std::size_t m = 0; m < base; ++m) members.push_back(a.add(members[m], step));
        step = a.add(step, basis[b]);
      }
    }
    std::fill(in_span.begin(), in_span.end(), 0);
    for (auto m : members) in_span[pos.at(m)] = 1;
  };
  rebuild_span();

  while (members.size() < n) {
    std::size_t best = n;
    std::uint64_t best_order = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (in_span[i]) continue;
      std::uint64_t acc = a.elements[i];
      std::uint64_t o = 1;
      while (!in_span[pos.at(acc)]) {
        acc = a.add(acc, a.elements[i]);
        ++o;
      }
      if (o > best_order) {
        best_order = o;
        best = i;
      }
    }
    std::uint64_t lifted = a.zero;
    bool found = false;
    for (auto h : members) {
      const auto y = a.add(a.elements[best], h);
      if (multiple(y, best_order) == a.zero) {
        lifted = y;
        found = true;
        break;
      }
    }
    if (!found) throw Error(ErrorCode::kInvalidPresentation, "additive basis search failed");
    basis.push_back(lifted);
    orders.push_back(best_order);
    rebuild_span();
  }

  Presented out;
  const std::size_t k = basis.size();
  // rebuild_span enumerates coefficient vectors in mixed radix order.
  for (std::uint64_t idx = 0; idx < members.size(); ++idx) {
    Coeffs v(k);
    auto rest = idx;
    for (std::size_t i = 0; i < k; ++i) {
      v[i] = rest % orders[i];
      rest /= orders[i];
    }
    out.coords.emplace(members[idx], std::move(v));
  }
  if (out.coords.size() != n) throw Error(ErrorCode::kInvalidPresentation, "additive basis is not free");

  RingPresentation p;
  p.characteristic = orders[0];
  p.orders = orders;
  p.products.resize(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) p.products[i * k + j] = out.coords.at(a.mul(basis[i], basis[j]));
  }
  p.label = label;
  out.ring = TableRing::create(std::move(p));
  return out;
}

}  // namespace

RingElement Quotient::project(const RingElement& a) const {
  if (a.owner() != source && !a.ring().same_structure(*source)) {
    throw Error(ErrorCode::kRingMismatch, "element does not belong to the quotient's source ring");
  }
  return {ring, ring->element_at(image.at(a.index()))};
}

std::uint64_t Quotient::ideal_size() const { return source->order() / ring->order(); }

Quotient quotient_by_ideal(const RingPtr& r, std::span<const RingElement> gens) {
  const auto n = r->order();
  check_ring_order(n, "quotient_by_ideal");
  for (const auto& g : gens) {
    if (g.owner() != r && !g.ring().same_structure(*r)) {
      throw Error(ErrorCode::kRingMismatch, "ideal generator from another ring");
    }
  }
  // Additive generators of the ideal: g * e_i.
  std::vector<Coeffs> spanning;
  for (const auto& g : gens) {
    for (std::size_t i = 0; i < r->rank(); ++i) {
      auto v = r->mul(g.coeffs(), unit_vector(r->rank(), i));
      if (!r->is_zero(v)) spanning.push_back(std::move(v));
    }
  }
  std::vector<char> in_ideal(n, 0);
  std::vector<std::uint64_t> ideal{0};
  in_ideal[0] = 1;
  for (std::size_t head = 0; head < ideal.size(); ++head) {
    const auto x = r->element_at(ideal[head]);
    for (const auto& s : spanning) {
      const auto y = r->index_of(r->add(x, s));
      if (!in_ideal[y]) {
        in_ideal[y] = 1;
        ideal.push_back(y);
      }
    }
  }
  if (ideal.size() == n) throw Error(ErrorCode::kInvalidPresentation, "quotient is the zero ring");

  constexpr auto kUnset = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> rep(n, kUnset);
  std::vector<std::uint64_t> reps;
  std::vector<Coeffs> ideal_elems;
  for (auto i : ideal) ideal_elems.push_back(r->element_at(i));
  for (std::uint64_t x = 0; x < n; ++x) {
    if (rep[x] != kUnset) continue;
    reps.push_back(x);
    const auto xc = r->element_at(x);
    for (const auto& i : ideal_elems) rep[r->index_of(r->add(xc, i))] = x;
  }

  AbstractRing abstract;
  abstract.elements = reps;
  abstract.zero = rep[0];
  abstract.one = rep[r->index_of(r->one())];
  abstract.add = [&](std::uint64_t a, std::uint64_t b) {
    return rep[r->index_of(r->add(r->element_at(a), r->element_at(b)))];
  };
  abstract.mul = [&](std::uint64_t a, std::uint64_t b) {
    return rep[r->index_of(r->mul(r->element_at(a), r->element_at(b)))];
  };

  std::string label = r->label() + "/(";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) label += ",";
    label += gens[i].to_string();
  }
  label += ")";
  auto presented = present(abstract, label);

  Quotient q;
  q.ring = presented.ring;
  q.source = r;
  q.image.resize(n);
  for (std::uint64_t x = 0; x < n; ++x) q.image[x] = q.ring->index_of(presented.coords.at(rep[x]));
  return q;
}

// ---- text form --------------------------------------------------------------

std::string serialize(const TableRing& r) {
  std::string out = "char=" + std::to_string(r.characteristic()) + "; orders=" + join(r.orders());
  if (r.has_power_basis()) return out + "; top=" + join(*r.presentation().top);
  out += "; table=";
  bool first = true;
  for (std::size_t i = 1; i < r.rank(); ++i) {
    for (std::size_t j = i; j < r.rank(); ++j) {
      if (!first) out += ",";
      first = false;
      out += "[" + join(r.product(i, j)) + "]";
    }
  }
  return out;
}

namespace {

std::vector<std::uint64_t> parse_uint_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) continue;
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw Error(ErrorCode::kParse, "bad integer '" + item + "' in presentation");
    out.push_back(v);
  }
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\n");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\n") - b + 1);
}

}  // namespace

RingPtr parse_presentation(const std::string& text) {
  std::optional<std::uint64_t> c;
  std::optional<std::vector<std::uint64_t>> orders;
  std::optional<std::vector<std::uint64_t>> top;
  std::optional<std::string> table;
  std::stringstream ss(text);
  std::string field;
  while (std::getline(ss, field, ';')) {
    field = trim(field);
    if (field.empty()) continue;
    const auto eq = field.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::kParse, "expected key=value in '" + field + "'");
    const auto key = trim(field.substr(0, eq));
    const auto value = field.substr(eq + 1);
    if (key == "char") {
      auto v = parse_uint_list(value);
      if (v.size() != 1) throw Error(ErrorCode::kParse, "char takes one integer");
      c = v[0];
    } else if (key == "orders") {
      orders = parse_uint_list(value);
    } else if (key == "top") {
      top = parse_uint_list(value);
    } else if (key == "table") {
      table = value;
    } else {
      throw Error(ErrorCode::kParse, "unknown presentation field '" + key + "'");
    }
  }
  if (!c || !orders) throw Error(ErrorCode::kParse, "presentation needs char= and orders=");
  if (top && table) throw Error(ErrorCode::kParse, "presentation has both top= and table=");
  if (top) return mk_poly_quotient(*c, *orders, *top);

  const std::size_t k = orders->size();
  if (k == 0) throw Error(ErrorCode::kParse, "orders must not be empty");
  std::vector<Coeffs> entries;
  if (table) {
    std::string body = trim(*table);
    std::size_t i = 0;
    while (i < body.size()) {
      if (body[i] == ',' || isspace(static_cast<unsigned char>(body[i]))) {
        ++i;
        continue;
      }
      if (body[i] != '[') throw Error(ErrorCode::kParse, "table entries must be bracketed");
      const auto close = body.find(']', i);
      if (close == std::string::npos) throw Error(ErrorCode::kParse, "unterminated table entry");
      entries.push_back(parse_uint_list(body.substr(i + 1, close - i - 1)));
      i = close + 1;
    }
  }
  if (entries.size() != (k - 1) * k / 2) {
    throw Error(ErrorCode::kParse, "table needs one entry per pair 1 <= i <= j < rank");
  }
  RingPresentation p;
  p.characteristic = *c;
  p.orders = *orders;
  p.products.assign(k * k, Coeffs(k, 0));
  for (std::size_t j = 0; j < k; ++j) {
    p.products[j] = unit_vector(k, j);
    p.products[j * k] = unit_vector(k, j);
  }
  std::size_t e = 0;
  for (std::size_t i = 1; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      p.products[i * k + j] = entries[e];
      p.products[j * k + i] = entries[e];
      ++e;
    }
  }
  auto ring = TableRing::create(std::move(p));
  return ring->relabeled(serialize(*ring));
}

}  // namespace fuchs
