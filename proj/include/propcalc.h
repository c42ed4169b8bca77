/* Copyright 2026 The propcalc Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

/* C interface to the propcalc proof kernel and synthesizers.
 *
 * All objects are opaque handles owned by the caller and released with the
 * matching *_free function. Functions that can fail return propcalc_status;
 * on failure the thread-local message from propcalc_last_error() describes
 * what went wrong. Strings returned through char** out-parameters are
 * heap-allocated and released with propcalc_string_free.
 */

#ifndef PROPCALC_H
#define PROPCALC_H

#include <stddef.h>

#if defined(_WIN32)
#  define PROPCALC_API __declspec(dllexport)
#elif defined(__GNUC__)
#  define PROPCALC_API __attribute__((visibility("default")))
#else
#  define PROPCALC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct propcalc_formula propcalc_formula;
typedef struct propcalc_proof propcalc_proof;
typedef struct propcalc_shape propcalc_shape;

typedef enum propcalc_status {
  PROPCALC_OK = 0,
  PROPCALC_ERR_PARSE = 1, /* formula or proof text syntax error */
  PROPCALC_ERR_EVAL = 2,  /* valuation missing a variable */
  PROPCALC_ERR_LIMIT = 3, /* variable count above the oracle bound */
  PROPCALC_ERR_SYNTH = 4, /* synthesis precondition violated */
  PROPCALC_ERR_ARG = 5,   /* invalid argument */
  PROPCALC_ERR_NOMEM = 6
} propcalc_status;

typedef enum propcalc_connective {
  PROPCALC_CONN_AND = 0,
  PROPCALC_CONN_OR = 1
} propcalc_connective;

typedef enum propcalc_direction {
  PROPCALC_ELIM = 0, /* (a o ... o a) -> a */
  PROPCALC_INTRO = 1 /* a -> (a o ... o a) */
} propcalc_direction;

typedef enum propcalc_method {
  PROPCALC_METHOD_ONE = 1,
  PROPCALC_METHOD_TWO = 2
} propcalc_method;

PROPCALC_API const char* propcalc_version(void);

/* Message for the most recent failing call on this thread; valid until the
 * next propcalc call on the same thread. */
PROPCALC_API const char* propcalc_last_error(void);
/* For PROPCALC_ERR_PARSE on a formula: 1-based byte offset of the error;
 * 0 otherwise. */
PROPCALC_API size_t propcalc_last_error_position(void);

PROPCALC_API void propcalc_string_free(char* s);

/* ----- formulas ---------------------------------------------------------- */

PROPCALC_API propcalc_status propcalc_formula_parse(const char* text,
                                                    propcalc_formula** out);
PROPCALC_API propcalc_status propcalc_formula_print(const propcalc_formula* f,
                                                    char** out);
PROPCALC_API int propcalc_formula_equal(const propcalc_formula* a,
                                        const propcalc_formula* b);
PROPCALC_API void propcalc_formula_free(propcalc_formula* f);

/* ----- truth-table oracle ------------------------------------------------ */

PROPCALC_API propcalc_status propcalc_is_tautology(const propcalc_formula* f,
                                                   int* taut);
/* *found = 1 and *valuation = "{A:false, B:true}" (first falsifying
 * valuation, variables sorted, false before true) when f is falsifiable;
 * *found = 0 and *valuation = NULL when f is a tautology. */
PROPCALC_API propcalc_status propcalc_find_counterexample(
    const propcalc_formula* f, int* found, char** valuation);

/* ----- proofs ------------------------------------------------------------ */

PROPCALC_API void propcalc_proof_free(propcalc_proof* p);
/* Text format: "<idx> | <formula> | AX <schema> {A:=...}" or
 * "<idx> | <formula> | MP <minor> <major>", one step per line, closed by
 * "QED <formula>". */
PROPCALC_API propcalc_status propcalc_proof_parse(const char* text,
                                                  propcalc_proof** out);
PROPCALC_API propcalc_status propcalc_proof_print(const propcalc_proof* p,
                                                  char** out);
/* Always returns PROPCALC_OK for a valid handle; the verdict goes to *ok.
 * On rejection, *step (1-based) and *diagnostic name the first offending
 * step. diagnostic may be NULL if the caller does not want the text. */
PROPCALC_API propcalc_status propcalc_proof_check(const propcalc_proof* p,
                                                  int* ok, size_t* step,
                                                  char** diagnostic);
PROPCALC_API propcalc_status propcalc_proof_conclusion(const propcalc_proof* p,
                                                       propcalc_formula** out);
PROPCALC_API size_t propcalc_proof_num_steps(const propcalc_proof* p);

/* ----- synthesis --------------------------------------------------------- */

/* One-step proof of a schema instance. schema_id is "I.a" ... "IV.c"; a, b,
 * c bind the metavariables A, B, C and may be NULL to default a
 * metavariable to the same-named variable. */
PROPCALC_API propcalc_status propcalc_axiom_proof(const char* schema_id,
                                                  const propcalc_formula* a,
                                                  const propcalc_formula* b,
                                                  const propcalc_formula* c,
                                                  propcalc_proof** out);

PROPCALC_API propcalc_status propcalc_identity(const propcalc_formula* a,
                                               propcalc_proof** out);
PROPCALC_API propcalc_status propcalc_syllogism(const propcalc_proof* xy,
                                                const propcalc_proof* yz,
                                                propcalc_proof** out);

/* From n proofs of Ai -> Bi: conj_n(A) -> conj_n(B), resp.
 * disj_n(A) -> disj_n(B). */
PROPCALC_API propcalc_status propcalc_theorem_conj(
    const propcalc_proof* const* ps, size_t n, propcalc_proof** out);
PROPCALC_API propcalc_status propcalc_theorem_disj(
    const propcalc_proof* const* ps, size_t n, propcalc_proof** out);

/* (b | ... | b) -> b with n disjuncts. */
PROPCALC_API propcalc_status propcalc_lemma_idem_disj(const propcalc_formula* b,
                                                      size_t n,
                                                      propcalc_proof** out);

/* conj_n(as) -> as[i], resp. as[i] -> disj_n(as); i is 1-based. */
PROPCALC_API propcalc_status propcalc_projection(
    const propcalc_formula* const* as, size_t n, size_t i,
    propcalc_proof** out);
PROPCALC_API propcalc_status propcalc_injection(
    const propcalc_formula* const* as, size_t n, size_t i,
    propcalc_proof** out);

/* From n proofs of Ai -> B (common B): conj_n(A) -> B, resp.
 * disj_n(A) -> B. */
PROPCALC_API propcalc_status propcalc_cons_conj_to_common(
    const propcalc_proof* const* ps, size_t n, propcalc_proof** out);
PROPCALC_API propcalc_status propcalc_cons_disj_to_common(
    const propcalc_proof* const* ps, size_t n, propcalc_proof** out);

/* From n proofs of A -> Bi (common A): A -> conj_n(B), resp.
 * A -> disj_n(B). */
PROPCALC_API propcalc_status propcalc_cons_common_to_conj(
    const propcalc_proof* const* ps, size_t n, propcalc_proof** out);
PROPCALC_API propcalc_status propcalc_cons_common_to_disj(
    const propcalc_proof* const* ps, size_t n, propcalc_proof** out);

/* Idempotence family over the n-fold connective. */
PROPCALC_API propcalc_status propcalc_idempotence(propcalc_connective conn,
                                                  propcalc_direction dir,
                                                  const propcalc_formula* a,
                                                  size_t n,
                                                  propcalc_proof** out);

/* conj_n(as) -> disj_n(as). */
PROPCALC_API propcalc_status propcalc_conj_implies_disj(
    const propcalc_formula* const* as, size_t n, propcalc_method method,
    propcalc_proof** out);

/* From n proofs of Ai -> Bi: conj_n(A) -> disj_n(B). */
PROPCALC_API propcalc_status propcalc_mixed_conj_to_disj(
    const propcalc_proof* const* ps, size_t n, propcalc_method method,
    propcalc_proof** out);

/* Worked examples; label is "i", "ii", "iii-M1" or "iii-M2". */
PROPCALC_API propcalc_status propcalc_example(const char* label,
                                              propcalc_proof** out);

/* ----- shape problems ----------------------------------------------------
 * Goal (A1 o ... o Ap) -> (B1 o' ... o' Br) assembled from bridge proofs of
 * Ai -> Bj. Build the problem, then solve it. propcalc_shape_solve returns
 * PROPCALC_OK in two cases: *proof set and *failure NULL when a proof was
 * assembled, or *proof NULL and *failure describing the unsatisfied bridge
 * condition when the bridges do not cover the goal. */

PROPCALC_API propcalc_status propcalc_shape_new(
    propcalc_connective antecedent_connective,
    propcalc_connective consequent_connective, propcalc_shape** out);
PROPCALC_API void propcalc_shape_free(propcalc_shape* s);
PROPCALC_API propcalc_status propcalc_shape_add_antecedent(
    propcalc_shape* s, const propcalc_formula* f);
PROPCALC_API propcalc_status propcalc_shape_add_consequent(
    propcalc_shape* s, const propcalc_formula* f);
/* i, j are 1-based positions among the antecedents/consequents added so
 * far. The proof is copied. */
PROPCALC_API propcalc_status propcalc_shape_add_bridge(propcalc_shape* s,
                                                       size_t i, size_t j,
                                                       const propcalc_proof* p);
PROPCALC_API propcalc_status propcalc_shape_solve(const propcalc_shape* s,
                                                  propcalc_proof** proof,
                                                  char** failure);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* PROPCALC_H */
