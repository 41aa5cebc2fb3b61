// Copyright 2026 The fuchs Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FUCHS_CORE_ERROR_HPP
#define FUCHS_CORE_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fuchs {

enum class ErrorCode {
  kInvalidCharacteristic,
  kInvalidPresentation,
  kSizeLimit,
  kRingMismatch,
  kModulusMismatch,
  kHypothesisViolation,
  kDomain,
  kNoWitness,
  kNoInverse,
  kPreconditionFailed,
  kSpecMismatch,
  kParse,
  kSemantic,
  kUnknownSuite,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Syntax error in a ring, group or polynomial expression. `position` is the
// byte offset into the original text.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error(ErrorCode::kParse,
              what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Guardrail on operations that enumerate every element of a finite ring.
// Default 2^20; the CLI lets FUCHS_MAX_RING_ORDER override it.
inline constexpr std::uint64_t kDefaultMaxRingOrder = std::uint64_t{1} << 20;

std::uint64_t max_ring_order();
void set_max_ring_order(std::uint64_t limit);

// Throws kSizeLimit when `order` exceeds the guardrail.
void check_ring_order(std::uint64_t order, const std::string& what);

}  // namespace fuchs

#endif  // FUCHS_CORE_ERROR_HPP
