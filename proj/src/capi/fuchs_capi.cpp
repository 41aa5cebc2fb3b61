// Copyright 2026 The fuchs Authors
// SPDX-License-Identifier: Apache-2.0

#include "fuchs/fuchs.h"

#include <json.hpp>

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "core/census.hpp"
#include "core/classify.hpp"
#include "core/error.hpp"
#include "core/expr.hpp"
#include "core/finring.hpp"
#include "core/numtheory.hpp"
#include "core/polyfield.hpp"
#include "core/unitgroup.hpp"
#include "core/verifier.hpp"

struct fuchs_ring {
  fuchs::RingPtr ring;
};

struct fuchs_group {
  fuchs::classify::GroupDescriptor group;
};

namespace {

thread_local std::string last_error;

fuchs_status status_for(fuchs::ErrorCode code) {
  using fuchs::ErrorCode;
  switch (code) {
    case ErrorCode::kParse: return FUCHS_ERR_PARSE;
    case ErrorCode::kSemantic: return FUCHS_ERR_SEMANTIC;
    case ErrorCode::kSizeLimit: return FUCHS_ERR_SIZE_LIMIT;
    case ErrorCode::kInvalidPresentation: return FUCHS_ERR_INVALID_PRESENTATION;
    case ErrorCode::kNoWitness: return FUCHS_ERR_NO_WITNESS;
    case ErrorCode::kUnknownSuite: return FUCHS_ERR_UNKNOWN_SUITE;
    default: return FUCHS_ERR_DOMAIN;
  }
}

fuchs_status fail(fuchs_status status, const std::string& message) {
  last_error = message;
  return status;
}

// Runs `body` and converts exceptions into status codes.
template <typename F>
fuchs_status guard(F&& body) {
  last_error.clear();
  try {
    body();
    return FUCHS_OK;
  } catch (const fuchs::Error& e) {
    return fail(status_for(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(FUCHS_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(FUCHS_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

fuchs::verifier::VerifyOptions to_options(const fuchs_verify_options* o) {
  fuchs::verifier::VerifyOptions opts;
  if (!o) return opts;
  opts.order_bound = o->order_bound;
  opts.seed = o->seed;
  opts.trials = o->trials;
  opts.workers = o->workers == 0 ? 1 : o->workers;
  opts.specialization_bound = o->specialization_bound;
  return opts;
}

}  // namespace

extern "C" {

const char* fuchs_version(void) { return "1.0.0"; }

const char* fuchs_status_name(fuchs_status status) {
  switch (status) {
    case FUCHS_OK: return "ok";
    case FUCHS_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case FUCHS_ERR_PARSE: return "parse-error";
    case FUCHS_ERR_SEMANTIC: return "semantic-error";
    case FUCHS_ERR_SIZE_LIMIT: return "size-limit";
    case FUCHS_ERR_INVALID_PRESENTATION: return "invalid-presentation";
    case FUCHS_ERR_DOMAIN: return "domain-error";
    case FUCHS_ERR_NO_WITNESS: return "no-witness";
    case FUCHS_ERR_UNKNOWN_SUITE: return "unknown-suite";
    case FUCHS_ERR_INTERNAL: return "internal-error";
  }
  return "unknown";
}

const char* fuchs_last_error(void) { return last_error.c_str(); }

void fuchs_string_free(char* s) { std::free(s); }

void fuchs_set_max_ring_order(uint64_t limit) { fuchs::set_max_ring_order(limit); }

uint64_t fuchs_max_ring_order(void) { return fuchs::max_ring_order(); }

// ---- rings ----

fuchs_status fuchs_ring_parse(const char* text, fuchs_ring** out) {
  if (!text || !out) return fail(FUCHS_ERR_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    auto ring = fuchs::expr::build_ring(fuchs::expr::parse_ring(text));
    *out = new fuchs_ring{std::move(ring)};
  });
}

fuchs_status fuchs_ring_from_presentation(const char* text, fuchs_ring** out) {
  if (!text || !out) return fail(FUCHS_ERR_INVALID_ARGUMENT, "null argument");
  return guard([&] { *out = new fuchs_ring{fuchs::parse_presentation(text)}; });
}

void fuchs_ring_free(fuchs_ring* ring) { delete ring; }

fuchs_status fuchs_ring_order(const fuchs_ring* ring, uint64_t* out) {
  if (!ring || !out) return fail(FUCHS_ERR_INVALID_ARGUMENT, "null argument");
  *out = ring->ring->order();
  return FUCHS_OK;
}

fuchs_status fuchs_ring_characteristic(const fuchs_ring* ring, uint64_t* out) {
  if (!ring || !out) return fail(FUCHS_ERR_INVALID_ARGUMENT, "null argument");
  *out = ring->ring->characteristic();
  return FUCHS_OK;
}

fuchs_status fuchs_ring_label(const fuchs_ring* ring, char** out) {
  if (!ring || !out) return fail(FUCHS_ERR_INVALID_ARGUMENT, "null argument");
  return guard([&] { *out = copy_string(ring->ring->label()); });
}

fuchs_status fuchs_ring_presentation(const fuchs_ring* ring, char** out) {
  if (!ring || !out) return fail(FUCHS_ERR_INVALID_ARGUMENT, "null argument");
  return guard([&] { *out = copy_string(fuchs::serialize(*ring->ring)); });
}

fuchs_status fuchs_ring_units_json(const fuchs_ring* ring, uint32_t workers, char** out) {
  if (!ring || !out) return fail(FUCHS_ERR_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    namespace ug = fuchs::unitgroup;
    const auto& r = *ring->ring;
    const auto s = ug::group_structure(r, workers == 0 ? 1 : workers);
    nlohmann::json j;
    j["ring"] = r.label();
    j["presentation"] = fuchs::serialize(r);
    j["order"] = r.order();
    j["characteristic"] = r.characteristic();
    j["unit_count"] = s.order();
    j["invariant_factors"] = s.invariant_factors;
    j["structure"] = s.to_string();
    j["cyclic"] = ug::is_cyclic(s);
    j["indecomposable"] = ug::is_indecomposable(s);
    *out = copy_string(j.dump());
  });
}

// ---- groups ----

fuchs_status fuchs_group_parse(const char* text, fuchs_group** out) {
  if (!text || !out) return fail(FUCHS_ERR_INVALID_ARGUMENT, "null argument");
  return guard([&] { *out = new fuchs_group{fuchs::expr::parse_group(text)}; });
}

void fuchs_group_free(fuchs_group* group) { delete group; }

fuchs_status fuchs_group_print(const fuchs_group* group, char** out) {
  if (!group || !out) return fail(FUCHS_ERR_INVALID_ARGUMENT, "null argument");
  return guard([&] { *out = copy_string(group->group.to_string()); });
}

fuchs_status fuchs_realizable_json(const fuchs_group* group, int has_char, uint64_t c, char** out,
                                   int* realizable) {
  if (!group || !out) return fail(FUCHS_ERR_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    const auto v = has_char ? fuchs::classify::realizable_with_char(group->group, c)
                            : fuchs::classify::realizable(group->group);
    if (realizable) *realizable = v.realizable ? 1 : 0;
    *out = copy_string(fuchs::classify::to_json(v).dump());
  });
}

fuchs_status fuchs_witness_json(const fuchs_group* group, uint64_t c, char** out) {
  if (!group || !out) return fail(FUCHS_ERR_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    const auto w = fuchs::classify::witness(group->group, c);
    *out = copy_string(fuchs::classify::to_json(w, group->group, c).dump());
  });
}

// ---- verification ----

void fuchs_verify_options_init(fuchs_verify_options* options) {
  if (!options) return;
  const fuchs::verifier::VerifyOptions d;
  options->order_bound = d.order_bound;
  options->seed = d.seed;
  options->trials = d.trials;
  options->workers = d.workers;
  options->specialization_bound = d.specialization_bound;
}

fuchs_status fuchs_verify_suites(char** out) {
  if (!out) return fail(FUCHS_ERR_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    std::string names;
    for (const auto& n : fuchs::verifier::suite_names()) names += n + "\n";
    *out = copy_string(names);
  });
}

fuchs_status fuchs_verify_json(const char* suite, const fuchs_verify_options* options, char** out, int* all_passed) {
  if (!suite || !out) return fail(FUCHS_ERR_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    const auto reports = fuchs::verifier::run_suite(suite, to_options(options));
    const auto j = fuchs::verifier::reports_to_json(reports);
    if (all_passed) *all_passed = j["passed"].get<bool>() ? 1 : 0;
    *out = copy_string(j.dump());
  });
}

// ---- census ----

fuchs_status fuchs_additive_types_json(uint64_t order_bound, int has_char, uint64_t c, char** out) {
  if (!out) return fail(FUCHS_ERR_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    if (order_bound > fuchs::census::kMaxCensusOrder) {
      throw fuchs::Error(fuchs::ErrorCode::kSizeLimit, "census is limited to rings of order <= " +
                                                           std::to_string(fuchs::census::kMaxCensusOrder));
    }
    std::optional<std::uint64_t> ch;
    if (has_char) ch = c;
    *out = copy_string(nlohmann::json(fuchs::census::additive_types(order_bound, ch)).dump());
  });
}

fuchs_status fuchs_enumerate_jsonl(const uint64_t* orders, size_t count, int dedupe, uint32_t workers, char** out,
                                   size_t* rings) {
  if (!orders || count == 0 || !out) return fail(FUCHS_ERR_INVALID_ARGUMENT, "null or empty argument");
  return guard([&] {
    const std::vector<std::uint64_t> type(orders, orders + count);
    const auto entries = fuchs::census::enumerate_rings(type, {dedupe != 0, workers == 0 ? 1 : workers});
    std::string lines;
    for (const auto& e : entries) lines += fuchs::census::to_json(e).dump() + "\n";
    if (rings) *rings = entries.size();
    *out = copy_string(lines);
  });
}

// ---- polynomials and number theory ----

fuchs_status fuchs_factor_json(const char* poly, uint64_t default_modulus, char** out) {
  if (!poly || !out) return fail(FUCHS_ERR_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    namespace pf = fuchs::polyfield;
    std::optional<std::uint64_t> modulus;
    if (default_modulus) modulus = default_modulus;
    const auto f = fuchs::expr::parse_poly(poly, modulus);
    if (f.is_zero()) throw fuchs::Error(fuchs::ErrorCode::kDomain, "cannot factor the zero polynomial");
    nlohmann::json j;
    j["polynomial"] = f.to_string();
    j["modulus"] = f.modulus();
    j["degree"] = f.degree();
    switch (pf::squarefree_status(f)) {
      case pf::SquarefreeStatus::kCoprimeToDerivative: j["squarefree"] = "coprime-to-derivative"; break;
      case pf::SquarefreeStatus::kSharesFactorWithDerivative: j["squarefree"] = "shares-factor-with-derivative"; break;
      case pf::SquarefreeStatus::kZeroDerivative: j["squarefree"] = "zero-derivative"; break;
    }
    j["factors"] = nlohmann::json::array();
    for (const auto& fac : pf::factor(f)) {
      j["factors"].push_back({{"factor", fac.poly.to_string()},
                              {"degree", fac.poly.degree()},
                              {"multiplicity", fac.multiplicity}});
    }
    *out = copy_string(j.dump());
  });
}

int fuchs_is_prime(uint64_t n) { return fuchs::numtheory::is_prime(n) ? 1 : 0; }
int fuchs_is_mersenne_prime(uint64_t p) { return fuchs::numtheory::is_mersenne_prime(p) ? 1 : 0; }
int fuchs_is_fermat_prime(uint64_t q) { return fuchs::numtheory::is_fermat_prime(q) ? 1 : 0; }
int fuchs_has_cyclic_units_mod(uint64_t c) { return fuchs::numtheory::has_cyclic_units_mod(c) ? 1 : 0; }

fuchs_status fuchs_euler_phi(uint64_t n, uint64_t* out) {
  if (!out) return fail(FUCHS_ERR_INVALID_ARGUMENT, "null argument");
  return guard([&] { *out = fuchs::numtheory::euler_phi(n); });
}

fuchs_status fuchs_solve_power_equation_json(uint64_t q, uint32_t m_bound, char** out) {
  if (!out) return fail(FUCHS_ERR_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& s : fuchs::numtheory::solve_power_equation(q, m_bound)) {
      j.push_back({{"q", q}, {"m", s.m}, {"p", s.p}, {"r", s.r}});
    }
    *out = copy_string(j.dump());
  });
}

}  // extern "C"
