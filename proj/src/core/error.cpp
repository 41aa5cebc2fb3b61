// Copyright 2026 The fuchs Authors
// SPDX-License-Identifier: Apache-2.0

#include "core/error.hpp"

#include <atomic>

namespace fuchs {

namespace {
std::atomic<std::uint64_t> g_max_ring_order{kDefaultMaxRingOrder};
}  // namespace

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidCharacteristic: return "invalid-characteristic";
    case ErrorCode::kInvalidPresentation: return "invalid-presentation";
    case ErrorCode::kSizeLimit: return "size-limit";
    case ErrorCode::kRingMismatch: return "ring-mismatch";
    case ErrorCode::kModulusMismatch: return "modulus-mismatch";
    case ErrorCode::kHypothesisViolation: return "hypothesis-violation";
    case ErrorCode::kDomain: return "domain";
    case ErrorCode::kNoWitness: return "no-witness";
    case ErrorCode::kNoInverse: return "no-inverse";
    case ErrorCode::kPreconditionFailed: return "precondition-failed";
    case ErrorCode::kSpecMismatch: return "spec-mismatch";
    case ErrorCode::kParse: return "parse";
    case ErrorCode::kSemantic: return "semantic";
    case ErrorCode::kUnknownSuite: return "unknown-suite";
  }
  return "unknown";
}

std::uint64_t max_ring_order() { return g_max_ring_order.load(); }

void set_max_ring_order(std::uint64_t limit) {
  g_max_ring_order.store(limit == 0 ? kDefaultMaxRingOrder : limit);
}

void check_ring_order(std::uint64_t order, const std::string& what) {
  const auto limit = max_ring_order();
  if (order > limit) {
    throw Error(ErrorCode::kSizeLimit,
                what + ": ring order " + std::to_string(order) +
                    " exceeds the enumeration limit " + std::to_string(limit));
  }
}

}  // namespace fuchs
