/* Copyright 2026 The fuchs Authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to the fuchs library: finite ring arithmetic, unit groups and
 * realizability of indecomposable abelian groups as unit groups.
 *
 * Handles are opaque and owned by the caller. Strings returned through
 * `char **out` are heap allocated and must be released with
 * fuchs_string_free. Every call that can fail returns a fuchs_status and
 * leaves a message for fuchs_last_error() on the calling thread.
 */

#ifndef FUCHS_FUCHS_H
#define FUCHS_FUCHS_H

#include <stddef.h>
#include <stdint.h>

#if defined(FUCHS_BUILDING_LIBRARY)
#define FUCHS_API __attribute__((visibility("default")))
#else
#define FUCHS_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fuchs_status {
  FUCHS_OK = 0,
  FUCHS_ERR_INVALID_ARGUMENT = 1, /* null pointer or out-of-range option */
  FUCHS_ERR_PARSE = 2,            /* syntax error in an expression */
  FUCHS_ERR_SEMANTIC = 3,         /* well-formed but meaningless, e.g. GF(6) */
  FUCHS_ERR_SIZE_LIMIT = 4,       /* ring too large to enumerate */
  FUCHS_ERR_INVALID_PRESENTATION = 5,
  FUCHS_ERR_DOMAIN = 6,           /* outside an operation's domain */
  FUCHS_ERR_NO_WITNESS = 7,       /* group not realizable in that characteristic */
  FUCHS_ERR_UNKNOWN_SUITE = 8,
  FUCHS_ERR_INTERNAL = 9
} fuchs_status;

typedef struct fuchs_ring fuchs_ring;
typedef struct fuchs_group fuchs_group;

typedef struct fuchs_verify_options {
  uint64_t order_bound;          /* census bound, default 16 */
  uint64_t seed;                 /* property-test seed */
  uint64_t trials;               /* property-test trials per property */
  uint32_t workers;              /* threads for sharded searches */
  uint64_t specialization_bound; /* largest cyclic group order scanned */
} fuchs_verify_options;

FUCHS_API const char *fuchs_version(void);
FUCHS_API const char *fuchs_status_name(fuchs_status status);
/* Message of the last failed call on this thread; "" if none. */
FUCHS_API const char *fuchs_last_error(void);
FUCHS_API void fuchs_string_free(char *s);

/* Largest ring order that may be enumerated; 0 restores the default 2^20. */
FUCHS_API void fuchs_set_max_ring_order(uint64_t limit);
FUCHS_API uint64_t fuchs_max_ring_order(void);

/* ---- rings ---- */

/* Ring expression such as "Z4[x]/(x^2-2,2x)" or "F9 x F2". */
FUCHS_API fuchs_status fuchs_ring_parse(const char *text, fuchs_ring **out);
/* Canonical text form "char=4; orders=4,2; top=2,0". */
FUCHS_API fuchs_status fuchs_ring_from_presentation(const char *text, fuchs_ring **out);
FUCHS_API void fuchs_ring_free(fuchs_ring *ring);
FUCHS_API fuchs_status fuchs_ring_order(const fuchs_ring *ring, uint64_t *out);
FUCHS_API fuchs_status fuchs_ring_characteristic(const fuchs_ring *ring, uint64_t *out);
FUCHS_API fuchs_status fuchs_ring_label(const fuchs_ring *ring, char **out);
FUCHS_API fuchs_status fuchs_ring_presentation(const fuchs_ring *ring, char **out);
/* Unit count, invariant factors and cyclic/indecomposable flags as JSON. */
FUCHS_API fuchs_status fuchs_ring_units_json(const fuchs_ring *ring, uint32_t workers, char **out);

/* ---- groups ---- */

/* "C8", "C2^inf", "C2xC4", "Z", "Z^2", "Z[1/2]". */
FUCHS_API fuchs_status fuchs_group_parse(const char *text, fuchs_group **out);
FUCHS_API void fuchs_group_free(fuchs_group *group);
FUCHS_API fuchs_status fuchs_group_print(const fuchs_group *group, char **out);

/* Verdict JSON. With has_char = 0 every characteristic is considered;
 * characteristic zero is c = 0. `realizable` may be null. */
FUCHS_API fuchs_status fuchs_realizable_json(const fuchs_group *group, int has_char, uint64_t c, char **out,
                                             int *realizable);
/* Witness JSON; FUCHS_ERR_NO_WITNESS when not realizable. */
FUCHS_API fuchs_status fuchs_witness_json(const fuchs_group *group, uint64_t c, char **out);

/* ---- verification ---- */

FUCHS_API void fuchs_verify_options_init(fuchs_verify_options *options);
/* Newline-separated suite names, "all" excluded. */
FUCHS_API fuchs_status fuchs_verify_suites(char **out);
/* Runs one suite or "all"; `out` holds {"passed", "reports": [...]}.
 * options may be null for defaults. */
FUCHS_API fuchs_status fuchs_verify_json(const char *suite, const fuchs_verify_options *options, char **out,
                                         int *all_passed);

/* ---- census ---- */

/* JSON array of additive types (arrays of orders) of order <= order_bound,
 * restricted to characteristic c when has_char is set. */
FUCHS_API fuchs_status fuchs_additive_types_json(uint64_t order_bound, int has_char, uint64_t c, char **out);
/* One JSON object per line for every ring of the given additive type. */
FUCHS_API fuchs_status fuchs_enumerate_jsonl(const uint64_t *orders, size_t count, int dedupe, uint32_t workers,
                                             char **out, size_t *rings);

/* ---- polynomials and number theory ---- */

/* Factorization over F_q of "1 + x + x^3 (mod 2)"; default_modulus (0 for
 * none) applies when the text has no "(mod q)" suffix. */
FUCHS_API fuchs_status fuchs_factor_json(const char *poly, uint64_t default_modulus, char **out);

FUCHS_API int fuchs_is_prime(uint64_t n);
FUCHS_API int fuchs_is_mersenne_prime(uint64_t p);
FUCHS_API int fuchs_is_fermat_prime(uint64_t q);
FUCHS_API int fuchs_has_cyclic_units_mod(uint64_t c);
FUCHS_API fuchs_status fuchs_euler_phi(uint64_t n, uint64_t *out);
/* Solutions of q^m - 1 = p^r with m <= m_bound as a JSON array. */
FUCHS_API fuchs_status fuchs_solve_power_equation_json(uint64_t q, uint32_t m_bound, char **out);

#ifdef __cplusplus
}
#endif

#endif /* FUCHS_FUCHS_H */
