/*
 * Copyright 2026 The isodual Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/**
 * @file isodual.h
 * @brief C interface to the isodual library.
 *
 * Every function returning iso_status stores a message retrievable with
 * iso_last_error() on failure. The message is thread-local and valid until
 * the next failing call on the same thread. Strings returned through char**
 * are owned by the caller and released with iso_string_free().
 */

#ifndef ISODUAL_ISODUAL_H
#define ISODUAL_ISODUAL_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define ISO_API __declspec(dllexport)
#else
#define ISO_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum iso_status {
  ISO_OK = 0,
  ISO_E_PARSE = 1,         /* malformed text or certificate schema */
  ISO_E_INVALID = 2,       /* bad argument */
  ISO_E_PRECONDITION = 3,  /* construction hypotheses do not hold */
  ISO_E_BUDGET = 4,        /* work budget exceeded */
  ISO_E_IO = 5,
  ISO_E_INTERNAL = 6,      /* an identity that must hold failed */
  ISO_E_NOT_FOUND = 7      /* search ended without a result */
} iso_status;

typedef enum iso_pair_mode {
  ISO_PAIRS_CANONICAL = 0,
  ISO_PAIRS_EVAL_X = 1, /* x of the translated evaluation points */
  ISO_PAIRS_ODD_X = 2   /* x of the odd-order pair representatives */
} iso_pair_mode;

typedef enum iso_format { ISO_FORMAT_CSV = 0, ISO_FORMAT_JSON = 1 } iso_format;

typedef struct iso_field iso_field;
typedef struct iso_curve iso_curve;
typedef struct iso_cert iso_cert;
typedef struct iso_scaled iso_scaled;
typedef struct iso_table iso_table;

ISO_API const char* iso_version(void);
ISO_API const char* iso_last_error(void);
ISO_API void iso_string_free(char* s);

/* ---- fields: "p=2,m=4,mod=1,1,0,0,1" (modulus c0..cm, low degree first) */
ISO_API iso_status iso_field_parse(const char* spec, iso_field** out);
ISO_API iso_status iso_field_default(uint64_t q, iso_field** out);
ISO_API void iso_field_free(iso_field* f);
ISO_API uint64_t iso_field_q(const iso_field* f);
ISO_API iso_status iso_field_spec(const iso_field* f, char** out);

/* ---- curves: "a1,a2,a3,a4,a6" as field element encodings */
ISO_API iso_status iso_curve_parse(const iso_field* f, const char* coeffs, iso_curve** out);
ISO_API void iso_curve_free(iso_curve* c);
ISO_API iso_status iso_curve_group(const iso_curve* c, uint64_t* order, uint64_t* d1, uint64_t* d2);

/* ---- construction */
typedef struct iso_construct_opts {
  int k;
  int construction; /* 1 or 2 */
  int torsion_a;    /* 1-based 2-torsion indices, construction 2 */
  int torsion_b;
  iso_pair_mode pair_mode;
  const uint32_t* pair_x;
  size_t pair_x_len;
  int brute_force_distance;
} iso_construct_opts;

ISO_API void iso_construct_opts_init(iso_construct_opts* o);
ISO_API iso_status iso_construct(const iso_curve* c, const iso_construct_opts* o, iso_cert** out);
ISO_API void iso_cert_free(iso_cert* c);

ISO_API iso_status iso_cert_params(const iso_cert* c, uint64_t* q, size_t* n, size_t* k, size_t* d, size_t* hull);
ISO_API int iso_cert_iso_dual(const iso_cert* c);
ISO_API const char* iso_cert_distance_method(const iso_cert* c);

/* Deterministic JSON text. */
ISO_API iso_status iso_cert_to_json(const iso_cert* c, char** out);
/* Schema-checked parse; the result still needs iso_cert_verify. */
ISO_API iso_status iso_cert_from_json(const char* text, iso_cert** out);
ISO_API iso_status iso_cert_read(const char* path, iso_cert** out);
ISO_API iso_status iso_cert_write(const iso_cert* c, const char* path);

/* Re-checks a certificate. *ok is 1 when every check passes. *report gets
   one line per check ("name ok" or "name FAIL detail"); *first_failure gets
   the first failed check name or "". Either may be NULL. */
ISO_API iso_status iso_cert_verify(const iso_cert* c, int* ok, char** report, char** first_failure);

/* ---- transforms */
ISO_API iso_status iso_transform_selfdual(const iso_cert* c, iso_scaled** out);
ISO_API iso_status iso_transform_lcd(const iso_cert* c, uint64_t budget, iso_scaled** out);
ISO_API iso_status iso_transform_hull(const iso_cert* c, size_t target, uint64_t seed, uint64_t max_samples,
                                      iso_scaled** out);
/* Hull counts over random scalings as "hull,count" CSV lines. */
ISO_API iso_status iso_hull_histogram(const iso_cert* c, uint64_t samples, uint64_t seed, char** out);
ISO_API void iso_scaled_free(iso_scaled* s);
ISO_API iso_status iso_scaled_params(const iso_scaled* s, uint64_t* q, size_t* n, size_t* k, size_t* d, size_t* hull);
ISO_API iso_status iso_scaled_to_json(const iso_scaled* s, char** out);
ISO_API iso_status iso_scaled_from_json(const char* text, iso_scaled** out);
ISO_API iso_status iso_scaled_read(const char* path, iso_scaled** out);
ISO_API iso_status iso_scaled_write(const iso_scaled* s, const char* path);

/* ---- EAQECC */
typedef struct iso_eaqecc {
  uint64_t n, k_q, d, c, q;
  int mds;
  int maximal_entanglement;
} iso_eaqecc;

ISO_API iso_status iso_eaqecc_derive(uint64_t n, uint64_t k, uint64_t d, uint64_t hull, uint64_t q, iso_eaqecc* out);
/* "[[n,k,d;c]]_q" */
ISO_API iso_status iso_eaqecc_label(const iso_eaqecc* p, char** out);
ISO_API iso_status iso_eaqecc_csv_header(char** out);
ISO_API iso_status iso_eaqecc_csv_row(const iso_eaqecc* p, char** out);

/* ---- search tables: "bounds", "census", "probe", "lemma-max" */
ISO_API iso_status iso_table_new(const char* kind, iso_table** out);
ISO_API void iso_table_free(iso_table* t);
/* q for bounds/census/probe, group order for lemma-max. */
ISO_API iso_status iso_table_add(iso_table* t, uint64_t param);
ISO_API size_t iso_table_rows(const iso_table* t);
ISO_API iso_status iso_table_render(const iso_table* t, iso_format fmt, char** out);

#ifdef __cplusplus
}
#endif

#endif /* ISODUAL_ISODUAL_H */
