// Copyright 2026 The fuchs Authors
// SPDX-License-Identifier: Apache-2.0

// ASCII expression language for rings, groups and polynomials.
//
//   ring  := atom { ("x" | "*") atom }
//   atom  := "Z" int | "F" int | "GF(" int ")" | base "[x]/(" poly { "," poly } ")"
//   base  := "Z" int | "F" prime
//   group := cyc { "x" cyc } | "C" prime "^inf" | "Z" [ "^" int ] | "Z[1/p, 1/q, ...]"
//   cyc   := "C" ["_"] int
//   poly  := signed integer polynomial in x, e.g. "x^2-2", "2x", "1 + x + x^3"
//
// Whitespace is ignored. Polynomials for factoring carry a "(mod q)" suffix.

#ifndef FUCHS_CORE_EXPR_HPP
#define FUCHS_CORE_EXPR_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "core/classify.hpp"
#include "core/finring.hpp"
#include "core/polyfield.hpp"

namespace fuchs::expr {

struct RingExpr {
  enum class Kind { kZn, kField, kGF, kPolyQuot, kProduct };

  Kind kind = Kind::kZn;
  std::uint64_t n = 0;               // modulus, field order, or polynomial base
  bool field_base = false;           // PolyQuot over "F p" rather than "Z n"
  std::vector<polyfield::IntPoly> relations;
  std::shared_ptr<const RingExpr> left;
  std::shared_ptr<const RingExpr> right;

  friend bool operator==(const RingExpr& a, const RingExpr& b);
};

// Throws ParseError (with position) on syntax errors and kSemantic for
// well-formed but meaningless input such as GF(6).
RingExpr parse_ring(const std::string& text);
std::string print(const RingExpr& e);
// Builds the ring; labels it with print(e).
RingPtr build_ring(const RingExpr& e);

classify::GroupDescriptor parse_group(const std::string& text);

// "x^2-2" style, highest degree first.
std::string print_int_poly(const polyfield::IntPoly& p);

// "1 + x + x^3 (mod 2)". Without a suffix `default_modulus` is used;
// with neither, kParse.
polyfield::PrimeFieldPoly parse_poly(const std::string& text,
                                     std::optional<std::uint64_t> default_modulus = std::nullopt);

}  // namespace fuchs::expr

#endif  // FUCHS_CORE_EXPR_HPP
