/*
   Copyright 2026 The confpoly authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/*
 * C interface of libconfpoly.
 *
 * The library computes Grothendieck-ring classes and virtual Poincare
 * polynomials of ordered configuration spaces F_n(X) and of sum-zero
 * configurations F_n^0(E) on an elliptic curve, together with the two
 * Stirling triangles (classical s(n,k) and the gcd^2-weighted s_m(n,k))
 * behind them.
 *
 * All objects are opaque handles created and destroyed through this
 * interface. Every function that can fail returns a confpoly_status;
 * out-parameters are written only on CONFPOLY_OK. Numeric values are
 * exchanged as decimal strings because the integers involved exceed any
 * machine word size. Strings returned through char** out-parameters are
 * owned by the caller and released with confpoly_string_free().
 */

#ifndef CONFPOLY_H
#define CONFPOLY_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum confpoly_status {
  CONFPOLY_OK = 0,
  CONFPOLY_ERR_ARGUMENT = 1,     /* null pointer or malformed argument */
  CONFPOLY_ERR_RANGE = 2,        /* value outside the supported range */
  CONFPOLY_ERR_BUDGET = 3,       /* enumeration exceeds its resource bound */
  CONFPOLY_ERR_PRECONDITION = 4, /* a stated precondition does not hold */
  CONFPOLY_ERR_VARIABLE = 5,     /* incompatible polynomial variable tags */
  CONFPOLY_ERR_NOMEM = 6,
  CONFPOLY_ERR_INTERNAL = 7
} confpoly_status;

typedef enum confpoly_space {
  CONFPOLY_SPACE_FN = 0, /* F_n(X): n-tuples of pairwise-distinct points */
  CONFPOLY_SPACE_FN0 = 1 /* F_n^0(E): distinct n-tuples with sum zero */
} confpoly_space;

typedef enum confpoly_format {
  CONFPOLY_FORMAT_PLAIN = 0, /* e.g. "E^3 - 6E^2 + 20E - 96" */
  CONFPOLY_FORMAT_LATEX = 1, /* e.g. "$E^3 - 6E^2 + 20E - 96$" */
  CONFPOLY_FORMAT_JSON = 2   /* coefficient array, lowest degree first */
} confpoly_format;

typedef struct confpoly_ctx confpoly_ctx;
typedef struct confpoly_poly confpoly_poly;
typedef struct confpoly_report confpoly_report;

const char* confpoly_version(void);
/* Short identifier of a status code, e.g. "range". Never NULL. */
const char* confpoly_status_name(confpoly_status status);

/*
 * Context: owns the Stirling triangles up to n_max and the oracle budget.
 * n_max <= 0 selects the default of 64. Contexts are independent; one
 * context must not be used from multiple threads concurrently.
 */
confpoly_status confpoly_ctx_new(int n_max, confpoly_ctx** out_ctx);
void confpoly_ctx_free(confpoly_ctx* ctx);
int confpoly_ctx_n_max(const confpoly_ctx* ctx);
/* Budget is a tuple-visit count for the counting oracles (default 1e8). */
confpoly_status confpoly_ctx_set_oracle_budget(confpoly_ctx* ctx, long long tuple_visits);

/*
 * Class polynomial of the configuration space:
 *   FN:  sum_{k>=1} (-1)^(n-k) s(n,k)   X^k     in variable 'X'
 *   FN0: sum_{k>=1} (-1)^(n-k) s_m(n,k) E^(k-1) in variable 'E'
 */
confpoly_status confpoly_class_poly(confpoly_ctx* ctx, confpoly_space space, int n,
                                    confpoly_poly** out_poly);

/* Entries of the Stirling triangles as decimal strings. */
confpoly_status confpoly_stirling_first(confpoly_ctx* ctx, int n, int k, char** out_value);
confpoly_status confpoly_stirling_mod(confpoly_ctx* ctx, int n, int k, char** out_value);

/*
 * Virtual Poincare polynomial: substitutes sx, a polynomial in 'x'
 * playing the role of S(X), for the class variable. sx may be NULL for
 * the default S(E) = 1 + 2x + x^2.
 */
confpoly_status confpoly_virtual_poincare(confpoly_ctx* ctx, confpoly_space space, int n,
                                          const confpoly_poly* sx, confpoly_poly** out_poly);

/* S(E) = 1 + 2x + x^2, the Poincare polynomial of a genus-1 curve. */
confpoly_status confpoly_poincare_elliptic(confpoly_poly** out_poly);

/*
 * Polynomial handles. Coefficients are decimal strings, lowest degree
 * first; var is one of 'X', 'E', 'x'. The degree of the zero polynomial
 * is -1 and coefficients outside the stored range read as "0".
 */
confpoly_status confpoly_poly_from_coeffs(const char* const* decimal_coeffs, size_t count,
                                          char var, confpoly_poly** out_poly);
confpoly_status confpoly_poly_degree(const confpoly_poly* poly, int* out_degree);
confpoly_status confpoly_poly_var(const confpoly_poly* poly, char* out_var);
confpoly_status confpoly_poly_coeff(const confpoly_poly* poly, int i, char** out_value);
confpoly_status confpoly_poly_render(const confpoly_poly* poly, confpoly_format format,
                                     char** out_text);
/* Renders with the variable letter replaced, e.g. printing an 'X'
 * polynomial with 'E'; the handle itself is not modified. */
confpoly_status confpoly_poly_render_as(const confpoly_poly* poly, confpoly_format format,
                                        char display_var, char** out_text);
/* Exact value at an integer point, as a decimal string. */
confpoly_status confpoly_poly_eval(const confpoly_poly* poly, const char* decimal_point,
                                   char** out_value);
void confpoly_poly_free(confpoly_poly* poly);

/*
 * Cross-validation suite: reference-table parity, dual-path Stirling
 * equality, Mobius function closed form vs defining recursion, generating
 * identities, counting oracles. Checks that would exceed the context's
 * oracle budget are reported as skipped.
 */
confpoly_status confpoly_verify_run(confpoly_ctx* ctx, confpoly_report** out_report);
size_t confpoly_report_size(const confpoly_report* report);
/* 0 = pass, 1 = fail, 2 = skipped; -1 on bad arguments. */
int confpoly_report_status(const confpoly_report* report, size_t index);
/* Borrowed pointers, valid until the report is freed; NULL on bad index. */
const char* confpoly_report_name(const confpoly_report* report, size_t index);
const char* confpoly_report_detail(const confpoly_report* report, size_t index);
void confpoly_report_free(confpoly_report* report);

void confpoly_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif /* CONFPOLY_H */
