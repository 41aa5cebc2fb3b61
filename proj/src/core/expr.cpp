// Copyright 2026 The fuchs Authors
// SPDX-License-Identifier: Apache-2.0

#include "core/expr.hpp"

#include <cctype>
#include <limits>
#include <utility>

#include "core/error.hpp"
#include "core/numtheory.hpp"

namespace fuchs::expr {

namespace nt = numtheory;

bool operator==(const RingExpr& a, const RingExpr& b) {
  if (a.kind != b.kind || a.n != b.n || a.field_base != b.field_base || a.relations != b.relations) return false;
  if (a.kind != RingExpr::Kind::kProduct) return true;
  return *a.left == *b.left && *a.right == *b.right;
}

namespace {

class Cursor {
 public:
  explicit Cursor(const std::string& text) : text_(text) {}

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip();
    return pos_ >= text_.size();
  }
  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  bool accept(const std::string& word) {
    skip();
    if (text_.compare(pos_, word.size(), word) != 0) return false;
    pos_ += word.size();
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  void expect(const std::string& word) {
    if (!accept(word)) fail("expected '" + word + "'");
  }
  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  std::uint64_t integer() {
    if (!at_digit()) fail("expected an integer");
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const auto digit = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) fail("integer too large");
      v = v * 10 + digit;
      ++pos_;
    }
    return v;
  }

  [[noreturn]] void fail(const std::string& what) {
    skip();
    throw ParseError(pos_, what);
  }

  std::size_t pos() const { return pos_; }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;
};

std::int64_t to_signed(Cursor& cur, std::uint64_t v) {
  if (v > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) cur.fail("coefficient too large");
  return static_cast<std::int64_t>(v);
}

// Signed integer polynomial in x; stops before ',' ')' '(' or end.
polyfield::IntPoly parse_int_poly(Cursor& cur) {
  polyfield::IntPoly coeffs;
  bool first = true;
  while (true) {
    const char c = cur.peek();
    if (c == '\0' || c == ',' || c == ')' || c == '(') break;
    std::int64_t sign = 1;
    if (cur.accept('+')) {
      if (first) cur.fail("unexpected '+'");
    } else if (cur.accept('-')) {
      sign = -1;
    } else if (!first) {
      cur.fail("expected '+' or '-'");
    }
    first = false;
    std::int64_t coef = 1;
    bool have_coef = false;
    if (cur.at_digit()) {
      coef = to_signed(cur, cur.integer());
      have_coef = true;
      cur.accept('*');
    }
    std::size_t degree = 0;
    if (cur.accept('x')) {
      degree = 1;
      if (cur.accept('^')) degree = static_cast<std::size_t>(cur.integer());
      if (degree > 4096) cur.fail("degree too large");
    } else if (!have_coef) {
      cur.fail("expected a term");
    }
    if (coeffs.size() <= degree) coeffs.resize(degree + 1, 0);
    coeffs[degree] += sign * coef;
  }
  if (first) cur.fail("expected a polynomial");
  return polyfield::int_poly_trim(coeffs);
}

[[noreturn]] void semantic(const std::string& what) { throw Error(ErrorCode::kSemantic, what); }

RingExpr parse_atom(Cursor& cur) {
  RingExpr e;
  if (cur.accept("GF(")) {
    e.kind = RingExpr::Kind::kGF;
    e.n = cur.integer();
    cur.expect(')');
    if (!nt::as_prime_power(e.n)) semantic("GF(" + std::to_string(e.n) + "): " + std::to_string(e.n) + " is not a prime power");
    return e;
  }
  bool field = false;
  if (cur.accept('F')) {
    field = true;
  } else if (!cur.accept('Z')) {
    cur.fail("expected Z<n>, F<q>, GF(<q>) or a polynomial quotient");
  }
  cur.accept('_');
  e.n = cur.integer();
  if (cur.accept('[')) {
    cur.expect('x');
    cur.expect(']');
    cur.expect('/');
    cur.expect('(');
    e.kind = RingExpr::Kind::kPolyQuot;
    e.field_base = field;
    do {
      e.relations.push_back(parse_int_poly(cur));
    } while (cur.accept(','));
    cur.expect(')');
    if (field && !nt::is_prime(e.n)) semantic("polynomial base F" + std::to_string(e.n) + " must be a prime field");
    if (!field && e.n < 2) semantic("Z" + std::to_string(e.n) + " needs modulus >= 2");
    return e;
  }
  if (field) {
    e.kind = RingExpr::Kind::kField;
    if (!nt::as_prime_power(e.n)) semantic("F" + std::to_string(e.n) + ": " + std::to_string(e.n) + " is not a prime power");
  } else {
    e.kind = RingExpr::Kind::kZn;
    if (e.n < 2) semantic("Z" + std::to_string(e.n) + " needs modulus >= 2");
  }
  return e;
}

std::string monomial(std::uint64_t mag, std::size_t degree) {
  std::string s = (mag == 1 && degree > 0) ? "" : std::to_string(mag);
  if (degree >= 1) s += "x";
  if (degree >= 2) s += "^" + std::to_string(degree);
  return s;
}

}  // namespace

std::string print_int_poly(const polyfield::IntPoly& p) {
  std::string out;
  for (std::size_t d = p.size(); d-- > 0;) {
    const auto c = p[d];
    if (c == 0) continue;
    const auto mag = static_cast<std::uint64_t>(c < 0 ? -c : c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? "-" : "+";
    }
    out += monomial(mag, d);
  }
  return out.empty() ? "0" : out;
}

RingExpr parse_ring(const std::string& text) {
  Cursor cur(text);
  auto left = parse_atom(cur);
  while (!cur.done()) {
    if (!cur.accept('x') && !cur.accept('*')) cur.fail("expected 'x' or '*' between factors");
    RingExpr product;
    product.kind = RingExpr::Kind::kProduct;
    product.left = std::make_shared<const RingExpr>(std::move(left));
    product.right = std::make_shared<const RingExpr>(parse_atom(cur));
    left = std::move(product);
  }
  return left;
}

std::string print(const RingExpr& e) {
  switch (e.kind) {
    case RingExpr::Kind::kZn:
      return "Z" + std::to_string(e.n);
    case RingExpr::Kind::kField:
      return "F" + std::to_string(e.n);
    case RingExpr::Kind::kGF:
      return "GF(" + std::to_string(e.n) + ")";
    case RingExpr::Kind::kPolyQuot: {
      std::string out = (e.field_base ? "F" : "Z") + std::to_string(e.n) + "[x]/(";
      for (std::size_t i = 0; i < e.relations.size(); ++i) {
        if (i) out += ",";
        out += print_int_poly(e.relations[i]);
      }
      return out + ")";
    }
    case RingExpr::Kind::kProduct:
      return print(*e.left) + " x " + print(*e.right);
  }
  return {};
}

namespace {

std::uint64_t reduce_mod(std::int64_t v, std::uint64_t c) {
  const auto m = static_cast<std::int64_t>(c);
  auto r = v % m;
  if (r < 0) r += m;
  return static_cast<std::uint64_t>(r);
}

// Inverse of a mod c when gcd(a, c) = 1.
std::optional<std::uint64_t> inverse_mod(std::uint64_t a, std::uint64_t c) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(c), new_r = static_cast<std::int64_t>(a % c);
  while (new_r != 0) {
    const auto q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) return std::nullopt;
  return reduce_mod(t, c);
}

// Rewrites a quotient of Z_c[x] on the basis 1, x, x^2, ... when the powers
// of x span it as a direct sum; otherwise returns null.
RingPtr power_basis_form(const TableRing& q, const Coeffs& x, const std::string& label) {
  const auto n = q.order();
  std::vector<char> in_span(n, 0);
  std::vector<Coeffs> coords(n);
  std::vector<std::uint64_t> members{q.index_of(q.zero())};
  in_span[members[0]] = 1;
  std::vector<std::uint64_t> orders;
  Coeffs p = q.one();
  while (true) {
    Coeffs m = p;
    std::uint64_t j = 1;
    while (!in_span[q.index_of(m)]) {
      m = q.add(m, p);
      ++j;
    }
    if (j == 1) break;
    if (!q.is_zero(m)) return nullptr;
    const std::size_t i = orders.size();
    orders.push_back(j);
    const auto existing = members.size();
    Coeffs step = p;
    for (std::uint64_t a = 1; a < j; ++a, step = q.add(step, p)) {
      for (std::size_t s = 0; s < existing; ++s) {
        const auto idx = q.index_of(q.add(q.element_at(members[s]), step));
        in_span[idx] = 1;
        coords[idx] = coords[members[s]];
        coords[idx].resize(i + 1, 0);
        coords[idx][i] = a;
        members.push_back(idx);
      }
    }
    p = q.mul(p, x);
  }
  if (members.size() != n) return nullptr;
  Coeffs top = coords[q.index_of(p)];
  top.resize(orders.size(), 0);
  try {
    return mk_poly_quotient(q.characteristic(), orders, top, label);
  } catch (const Error&) {
    return nullptr;
  }
}

RingPtr build_poly_quotient(const RingExpr& e, const std::string& label) {
  const auto c = e.n;
  if (c >= (std::uint64_t{1} << 31)) semantic("polynomial base modulus too large");
  std::vector<Coeffs> rels;
  for (const auto& r : e.relations) {
    Coeffs v;
    for (auto coef : r) v.push_back(reduce_mod(coef, c));
    while (!v.empty() && v.back() == 0) v.pop_back();
    rels.push_back(std::move(v));
  }
  // The lowest-degree relation with invertible leading coefficient fixes the basis.
  std::optional<std::size_t> main;
  for (std::size_t i = 0; i < rels.size(); ++i) {
    if (rels[i].empty() || !inverse_mod(rels[i].back(), c)) continue;
    if (!main || rels[i].size() < rels[*main].size()) main = i;
  }
  if (!main) semantic(label + ": no relation has an invertible leading coefficient mod " + std::to_string(c));
  const auto& f = rels[*main];
  const std::size_t k = f.size() - 1;
  if (k == 0) semantic(label + " is the zero ring");
  const auto inv = *inverse_mod(f.back(), c);
  Coeffs top(k);
  for (std::size_t i = 0; i < k; ++i) top[i] = (c - numtheory::mulmod(f[i], inv, c)) % c;
  const auto base = mk_poly_quotient(c, std::vector<std::uint64_t>(k, c), top, label);

  std::vector<RingElement> gens;
  for (std::size_t i = 0; i < rels.size(); ++i) {
    if (i == *main) continue;
    auto acc = base->zero();
    auto xp = base->one();
    Coeffs x(k, 0);
    if (k > 1) x[1] = 1;
    else x = top;  // x = top in rank 1
    for (auto coef : rels[i]) {
      acc = base->add(acc, base->scale(xp, coef));
      xp = base->mul(xp, x);
    }
    if (!base->is_zero(acc)) gens.emplace_back(base, acc);
  }
  if (gens.empty()) return base;
  try {
    const auto q = quotient_by_ideal(base, gens);
    Coeffs x(k, 0);
    if (k > 1) x[1] = 1;
    else x = top;
    const auto xbar = q.project(RingElement(base, x));
    if (auto r = power_basis_form(*q.ring, xbar.coeffs(), label)) return r;
    return q.ring->relabeled(label);
  } catch (const Error& err) {
    if (err.code() == ErrorCode::kInvalidPresentation) semantic(label + " is the zero ring");
    throw;
  }
}

}  // namespace

RingPtr build_ring(const RingExpr& e) {
  const auto label = print(e);
  switch (e.kind) {
    case RingExpr::Kind::kZn:
      return mk_zn(e.n);
    case RingExpr::Kind::kField:
    case RingExpr::Kind::kGF: {
      const auto pp = nt::as_prime_power(e.n);
      return mk_finite_field(pp->prime, pp->exponent)->relabeled(label);
    }
    case RingExpr::Kind::kPolyQuot:
      return build_poly_quotient(e, label);
    case RingExpr::Kind::kProduct:
      return mk_product(build_ring(*e.left), build_ring(*e.right))->relabeled(label);
  }
  return nullptr;
}

classify::GroupDescriptor parse_group(const std::string& text) {
  using classify::GroupDescriptor;
  Cursor cur(text);
  GroupDescriptor d;
  if (cur.accept('Z')) {
    if (cur.accept('[')) {
      std::vector<std::uint64_t> primes;
      do {
        cur.expect('1');
        cur.expect('/');
        const auto p = cur.integer();
        if (!nt::is_prime(p)) semantic("Z[1/" + std::to_string(p) + "]: " + std::to_string(p) + " is not prime");
        primes.push_back(p);
      } while (cur.accept(','));
      cur.expect(']');
      d = GroupDescriptor::torsion_free(ordgroup::OrderedGroupSpec::rational(primes));
    } else {
      std::uint64_t rank = 1;
      if (cur.accept('^')) rank = cur.integer();
      if (rank == 0 || rank > 64) semantic("Z^r needs 1 <= r <= 64");
      d = GroupDescriptor::torsion_free(ordgroup::OrderedGroupSpec::lattice(static_cast<unsigned>(rank)));
    }
  } else {
    std::vector<std::uint64_t> orders;
    bool quasi = false;
    do {
      cur.expect('C');
      cur.accept('_');
      const auto m = cur.integer();
      if (m == 0) semantic("C0 is not a group");
      if (cur.accept('^')) {
        if (!cur.accept("inf")) cur.fail("expected 'inf'");
        if (!nt::is_prime(m)) semantic("C" + std::to_string(m) + "^inf needs a prime");
        if (!orders.empty() || quasi) semantic("quasi-cyclic groups cannot be combined");
        quasi = true;
        d = GroupDescriptor::quasi_cyclic(m);
        continue;
      }
      if (quasi) semantic("quasi-cyclic groups cannot be combined");
      orders.push_back(m);
    } while (cur.accept('x'));
    if (!quasi) d = GroupDescriptor::finite_abelian(orders);
  }
  if (!cur.done()) cur.fail("unexpected trailing input");
  return d;
}

polyfield::PrimeFieldPoly parse_poly(const std::string& text, std::optional<std::uint64_t> default_modulus) {
  Cursor cur(text);
  const auto coeffs = parse_int_poly(cur);
  std::optional<std::uint64_t> modulus = default_modulus;
  if (cur.accept('(')) {
    cur.expect("mod");
    modulus = cur.integer();
    cur.expect(')');
  }
  if (!cur.done()) cur.fail("unexpected trailing input");
  if (!modulus) throw Error(ErrorCode::kParse, "polynomial needs a '(mod q)' suffix");
  if (!nt::is_prime(*modulus)) semantic("modulus " + std::to_string(*modulus) + " is not prime");
  if (*modulus > (std::uint64_t{1} << 32)) semantic("modulus exceeds 2^32");
  return polyfield::PrimeFieldPoly::from_signed(*modulus, coeffs);
}

}  // namespace fuchs::expr
