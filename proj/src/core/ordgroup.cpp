// Copyright 2026 The fuchs Authors
// SPDX-License-Identifier: Apache-2.0

#include "core/ordgroup.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

#include "core/error.hpp"
#include "core/numtheory.hpp"

namespace fuchs::ordgroup {

SpecPtr OrderedGroupSpec::lattice(unsigned rank) {
  if (rank == 0) throw Error(ErrorCode::kDomain, "lattice rank must be >= 1");
  return SpecPtr(new OrderedGroupSpec(Kind::kIntLattice, rank, {}));
}

SpecPtr OrderedGroupSpec::rational(std::vector<std::uint64_t> primes) {
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  for (auto p : primes) {
    if (!numtheory::is_prime(p)) throw Error(ErrorCode::kDomain, std::to_string(p) + " is not prime");
  }
  return SpecPtr(new OrderedGroupSpec(Kind::kRationalSubgroup, 1, std::move(primes)));
}

std::string OrderedGroupSpec::to_string() const {
  if (kind_ == Kind::kIntLattice) return rank_ == 1 ? "Z" : "Z^" + std::to_string(rank_);
  if (primes_.empty()) return "Z";
  std::string out = "Z[";
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    if (i) out += ",";
    out += "1/" + std::to_string(primes_[i]);
  }
  return out + "]";
}

bool OrderedGroupSpec::allows_denominator(std::int64_t den) const {
  if (den <= 0) return false;
  auto d = static_cast<std::uint64_t>(den);
  for (auto p : primes_) {
    while (d % p == 0) d /= p;
  }
  return d == 1;
}

const char* cmp_name(Cmp c) {
  switch (c) {
    case Cmp::kLess: return "LT";
    case Cmp::kEqual: return "EQ";
    case Cmp::kGreater: return "GT";
  }
  return "?";
}

// ---- elements -----------------------------------------------------------------

OrderedGroupElement OrderedGroupElement::identity(const SpecPtr& spec) {
  OrderedGroupElement e;
  e.spec_ = spec;
  if (spec->kind() == OrderedGroupSpec::Kind::kIntLattice) e.coords_.assign(spec->rank(), 0);
  return e;
}

OrderedGroupElement OrderedGroupElement::lattice(const SpecPtr& spec, std::vector<std::int64_t> coords) {
  if (spec->kind() != OrderedGroupSpec::Kind::kIntLattice || coords.size() != spec->rank()) {
    throw Error(ErrorCode::kSpecMismatch, "lattice element does not fit " + spec->to_string());
  }
  OrderedGroupElement e;
  e.spec_ = spec;
  e.coords_ = std::move(coords);
  return e;
}

OrderedGroupElement OrderedGroupElement::rational(const SpecPtr& spec, std::int64_t num, std::int64_t den) {
  if (spec->kind() != OrderedGroupSpec::Kind::kRationalSubgroup) {
    throw Error(ErrorCode::kSpecMismatch, "rational element does not fit " + spec->to_string());
  }
  if (den == 0) throw Error(ErrorCode::kDomain, "zero denominator");
  Rational v(num, den);
  if (!spec->allows_denominator(v.denominator())) {
    throw Error(ErrorCode::kDomain, "denominator " + std::to_string(v.denominator()) + " not allowed in " +
                                        spec->to_string());
  }
  OrderedGroupElement e;
  e.spec_ = spec;
  e.value_ = v;
  return e;
}

namespace {

std::int64_t parse_int(const std::string& s) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw Error(ErrorCode::kParse, "bad integer '" + s + "'");
  return v;
}

std::string strip(std::string s) {
  s.erase(std::remove_if(s.begin(), s.end(), ::isspace), s.end());
  return s;
}

}  // namespace

OrderedGroupElement OrderedGroupElement::parse(const SpecPtr& spec, const std::string& text) {
  const auto s = strip(text);
  if (spec->kind() == OrderedGroupSpec::Kind::kIntLattice) {
    if (!s.empty() && s.front() == '(') {
      if (s.back() != ')') throw Error(ErrorCode::kParse, "unterminated lattice element '" + text + "'");
      std::vector<std::int64_t> coords;
      std::stringstream ss(s.substr(1, s.size() - 2));
      std::string item;
      while (std::getline(ss, item, ',')) coords.push_back(parse_int(item));
      return lattice(spec, coords);
    }
    return lattice(spec, {parse_int(s)});
  }
  const auto slash = s.find('/');
  if (slash == std::string::npos) return rational(spec, parse_int(s), 1);
  return rational(spec, parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

std::string OrderedGroupElement::to_string() const {
  if (spec_->kind() == OrderedGroupSpec::Kind::kRationalSubgroup) {
    auto out = std::to_string(value_.numerator());
    if (value_.denominator() != 1) out += "/" + std::to_string(value_.denominator());
    return out;
  }
  if (coords_.size() == 1) return std::to_string(coords_[0]);
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(coords_[i]);
  }
  return out + ")";
}

bool operator==(const OrderedGroupElement& a, const OrderedGroupElement& b) {
  return *a.spec_ == *b.spec_ && a.coords_ == b.coords_ && a.value_ == b.value_;
}

namespace {

void require_same_spec(const SpecPtr& a, const SpecPtr& b) {
  if (a != b && !(*a == *b)) {
    throw Error(ErrorCode::kSpecMismatch, "elements of " + a->to_string() + " and " + b->to_string());
  }
}

}  // namespace

Cmp compare(const OrderedGroupElement& a, const OrderedGroupElement& b) {
  require_same_spec(a.spec(), b.spec());
  if (a.spec()->kind() == OrderedGroupSpec::Kind::kIntLattice) {
    for (std::size_t i = 0; i < a.coords().size(); ++i) {
      if (a.coords()[i] != b.coords()[i]) return a.coords()[i] < b.coords()[i] ? Cmp::kLess : Cmp::kGreater;
    }
    return Cmp::kEqual;
  }
  if (a.value() == b.value()) return Cmp::kEqual;
  return a.value() < b.value() ? Cmp::kLess : Cmp::kGreater;
}

OrderedGroupElement operator+(const OrderedGroupElement& a, const OrderedGroupElement& b) {
  require_same_spec(a.spec(), b.spec());
  if (a.spec()->kind() == OrderedGroupSpec::Kind::kIntLattice) {
    auto coords = a.coords();
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += b.coords()[i];
    return OrderedGroupElement::lattice(a.spec(), std::move(coords));
  }
  const auto v = a.value() + b.value();
  return OrderedGroupElement::rational(a.spec(), v.numerator(), v.denominator());
}

OrderedGroupElement operator-(const OrderedGroupElement& a) {
  if (a.spec()->kind() == OrderedGroupSpec::Kind::kIntLattice) {
    auto coords = a.coords();
    for (auto& c : coords) c = -c;
    return OrderedGroupElement::lattice(a.spec(), std::move(coords));
  }
  return OrderedGroupElement::rational(a.spec(), -a.value().numerator(), a.value().denominator());
}

bool ordered_product_inequality_check(const OrderedGroupElement& a, const OrderedGroupElement& b,
                                      const OrderedGroupElement& c, const OrderedGroupElement& d) {
  if (compare(a, b) != Cmp::kLess || compare(c, d) == Cmp::kGreater) {
    throw Error(ErrorCode::kPreconditionFailed, "requires a < b and c <= d");
  }
  return compare(a + c, b + d) == Cmp::kLess;
}

// ---- group algebra ----------------------------------------------------------

GroupAlgebraElement GroupAlgebraElement::from_terms(const SpecPtr& spec, std::vector<OrderedGroupElement> terms) {
  for (const auto& t : terms) require_same_spec(spec, t.spec());
  std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) { return x < y; });
  GroupAlgebraElement out(spec);
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i;
    while (j < terms.size() && compare(terms[i], terms[j]) == Cmp::kEqual) ++j;
    if ((j - i) % 2 == 1) out.support_.push_back(terms[i]);
    i = j;
  }
  return out;
}

GroupAlgebraElement GroupAlgebraElement::one(const SpecPtr& spec) {
  return from_terms(spec, {OrderedGroupElement::identity(spec)});
}

std::string GroupAlgebraElement::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < support_.size(); ++i) {
    if (i) out += ", ";
    out += support_[i].to_string();
  }
  return out + "}";
}

bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  return *a.spec_ == *b.spec_ && a.support_ == b.support_;
}

GroupAlgebraElement ga_add(const GroupAlgebraElement& f, const GroupAlgebraElement& g) {
  require_same_spec(f.spec(), g.spec());
  auto terms = f.support();
  terms.insert(terms.end(), g.support().begin(), g.support().end());
  return GroupAlgebraElement::from_terms(f.spec(), std::move(terms));
}

GroupAlgebraElement ga_mul(const GroupAlgebraElement& f, const GroupAlgebraElement& g) {
  require_same_spec(f.spec(), g.spec());
  std::vector<OrderedGroupElement> terms;
  terms.reserve(f.support().size() * g.support().size());
  for (const auto& a : f.support()) {
    for (const auto& b : g.support()) terms.push_back(a + b);
  }
  return GroupAlgebraElement::from_terms(f.spec(), std::move(terms));
}

bool ga_is_unit(const GroupAlgebraElement& f) { return f.support().size() == 1; }

GroupAlgebraElement ga_inverse(const GroupAlgebraElement& f) {
  if (!ga_is_unit(f)) throw Error(ErrorCode::kNoInverse, f.to_string() + " is not a unit of F_2[G]");
  return GroupAlgebraElement::from_terms(f.spec(), {-f.support()[0]});
}

bool extremal_terms_survive(const GroupAlgebraElement& f, const GroupAlgebraElement& g) {
  if (f.is_zero() || g.is_zero()) throw Error(ErrorCode::kDomain, "extremal terms of the zero element");
  const auto product = ga_mul(f, g);
  const auto lo = f.support().front() + g.support().front();
  const auto hi = f.support().back() + g.support().back();
  const auto& s = product.support();
  return std::find(s.begin(), s.end(), lo) != s.end() && std::find(s.begin(), s.end(), hi) != s.end();
}

// ---- property suite -----------------------------------------------------------

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

class Sampler {
 public:
  Sampler(const SpecPtr& spec, std::uint64_t seed) : spec_(spec), rng_(seed) {}

  // Uniform in [lo, hi] by reduction; reproducible across standard libraries.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(rng_() % span);
  }

  OrderedGroupElement element() {
    if (spec_->kind() == OrderedGroupSpec::Kind::kIntLattice) {
      std::vector<std::int64_t> coords(spec_->rank());
      for (auto& c : coords) c = uniform(-50, 50);
      return OrderedGroupElement::lattice(spec_, std::move(coords));
    }
    std::int64_t den = 1;
    for (auto p : spec_->primes()) {
      for (auto e = uniform(0, 5); e > 0; --e) den *= static_cast<std::int64_t>(p);
    }
    return OrderedGroupElement::rational(spec_, uniform(-50, 50), den);
  }

  GroupAlgebraElement algebra_element(std::size_t min_size, std::size_t max_size) {
    const auto size = static_cast<std::size_t>(uniform(static_cast<std::int64_t>(min_size),
                                                       static_cast<std::int64_t>(max_size)));
    std::vector<OrderedGroupElement> terms;
    while (terms.size() < size) {
      auto t = element();
      if (std::find(terms.begin(), terms.end(), t) == terms.end()) terms.push_back(std::move(t));
    }
    return GroupAlgebraElement::from_terms(spec_, std::move(terms));
  }

  std::pair<OrderedGroupElement, OrderedGroupElement> ordered_pair(bool strict) {
    auto x = element();
    auto y = element();
    while (strict && x == y) y = element();
    if (compare(x, y) == Cmp::kGreater) std::swap(x, y);
    return {x, y};
  }

 private:
  SpecPtr spec_;
  std::mt19937_64 rng_;
};

// One trial: empty string on success, failure description otherwise.
using Trial = std::function<std::string(Sampler&)>;

struct PropertyDef {
  std::string name;
  std::uint64_t trial_divisor;  // trials / divisor trials are run
  Trial trial;
};

std::vector<PropertyDef> property_defs() {
  std::vector<PropertyDef> defs;
  defs.push_back({"translation-invariance", 1, [](Sampler& s) -> std::string {
                    const auto a = s.element();
                    const auto b = s.element();
                    const auto c = s.element();
                    if (compare(a, b) == compare(a + c, b + c)) return {};
                    return "a=" + a.to_string() + " b=" + b.to_string() + " c=" + c.to_string();
                  }});
  defs.push_back({"ordered-sum-inequality", 1, [](Sampler& s) -> std::string {
                    const auto [a, b] = s.ordered_pair(true);
                    const auto [c, d] = s.ordered_pair(false);
                    if (ordered_product_inequality_check(a, b, c, d)) return {};
                    return "a=" + a.to_string() + " b=" + b.to_string() + " c=" + c.to_string() +
                           " d=" + d.to_string();
                  }});
  defs.push_back({"no-nontrivial-units", 1, [](Sampler& s) -> std::string {
                    const auto f = s.algebra_element(2, 6);
                    const auto g = s.algebra_element(2, 6);
                    if (!(ga_mul(f, g) == GroupAlgebraElement::one(f.spec()))) return {};
                    return "f=" + f.to_string() + " g=" + g.to_string();
                  }});
  defs.push_back({"extremal-terms", 1, [](Sampler& s) -> std::string {
                    const auto f = s.algebra_element(1, 6);
                    const auto g = s.algebra_element(1, 6);
                    if (extremal_terms_survive(f, g)) return {};
                    return "f=" + f.to_string() + " g=" + g.to_string();
                  }});
  defs.push_back({"ring-laws", 10, [](Sampler& s) -> std::string {
                    const auto f = s.algebra_element(1, 6);
                    const auto g = s.algebra_element(1, 6);
                    const auto h = s.algebra_element(1, 6);
                    const bool assoc = ga_mul(ga_mul(f, g), h) == ga_mul(f, ga_mul(g, h));
                    const bool distrib = ga_mul(f, ga_add(g, h)) == ga_add(ga_mul(f, g), ga_mul(f, h));
                    if (assoc && distrib) return {};
                    return "f=" + f.to_string() + " g=" + g.to_string() + " h=" + h.to_string();
                  }});
  defs.push_back({"singleton-units", 1, [](Sampler& s) -> std::string {
                    const auto f = s.algebra_element(1, 1);
                    if (ga_is_unit(f) && ga_mul(f, ga_inverse(f)) == GroupAlgebraElement::one(f.spec())) {
                      return {};
                    }
                    return "f=" + f.to_string();
                  }});
  return defs;
}

}  // namespace

std::vector<PropertyResult> run_property_suite(const PropertyOptions& options) {
  const std::vector<SpecPtr> specs{OrderedGroupSpec::lattice(1), OrderedGroupSpec::lattice(2),
                                   OrderedGroupSpec::rational({2})};
  const auto defs = property_defs();
  std::vector<PropertyResult> results;
  for (std::size_t si = 0; si < specs.size(); ++si) {
    for (std::size_t pi = 0; pi < defs.size(); ++pi) {
      const auto& def = defs[pi];
      const std::uint64_t trials = std::max<std::uint64_t>(1, options.trials / def.trial_divisor);
      const std::uint64_t stream = splitmix(splitmix(options.seed) ^ (si * 131 + pi + 1));
      const unsigned workers = std::max(1u, std::min<unsigned>(options.workers, 64));
      struct Shard {
        std::uint64_t failures = 0;
        std::uint64_t first_trial = UINT64_MAX;
        std::string first_detail;
      };
      std::vector<Shard> shards(workers);
      auto run = [&](unsigned w) {
        for (std::uint64_t t = trials * w / workers; t < trials * (w + 1) / workers; ++t) {
          Sampler sampler(specs[si], splitmix(stream + t));
          auto detail = def.trial(sampler);
          if (detail.empty()) continue;
          auto& sh = shards[w];
          if (sh.failures++ == 0) {
            sh.first_trial = t;
            sh.first_detail = "trial " + std::to_string(t) + ": " + detail;
          }
        }
      };
      if (workers == 1) {
        run(0);
      } else {
        std::vector<std::thread> threads;
        for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run, w);
        for (auto& th : threads) th.join();
      }
      PropertyResult r;
      r.group = specs[si]->to_string();
      r.property = def.name;
      r.trials = trials;
      std::uint64_t first = UINT64_MAX;
      for (const auto& sh : shards) {
        r.failures += sh.failures;
        if (sh.failures && sh.first_trial < first) {
          first = sh.first_trial;
          r.first_failure = sh.first_detail;
        }
      }
      results.push_back(std::move(r));
    }
  }
  return results;
}

}  // namespace fuchs::ordgroup
