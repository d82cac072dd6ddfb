/*
 *   Copyright 2026 The inqlab authors
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

/* C interface to the inqlab library: formulas of intuitionistic inquisitive
 * and dependence logic, team-semantic Kripke models, core-valued finite
 * algebras, and the finite duality between the two semantics.
 *
 * Inputs and results cross the boundary as UTF-8 strings, usually JSON on
 * one line; structured state lives behind opaque handles. Every function
 * returns INQLAB_OK or a negative status; the error message of the most
 * recent failure on the calling thread is available from
 * inqlab_last_error(). Strings returned through char** are heap-allocated
 * and released with inqlab_string_free(); handles are released with their
 * matching *_free function. Output parameters are written only on success,
 * and int* flags may be NULL when the caller does not need them.
 */

#ifndef INQLAB_H
#define INQLAB_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

/* 0 for success; errors mirror the library's error codes one to one as
 * negative values. */
typedef enum inqlab_status {
  INQLAB_OK = 0,
  INQLAB_SYNTAX_ERROR = -1,
  INQLAB_UNKNOWN_TOKEN = -2,
  INQLAB_SCHEMA_ARITY_MISMATCH = -3,
  INQLAB_NON_STANDARD_SLOT = -4,
  INQLAB_NON_STANDARD_SUBSTITUENT = -5,
  INQLAB_FOREIGN_WORLD = -6,
  INQLAB_NOT_A_PARTIAL_ORDER = -7,
  INQLAB_NOT_PERSISTENT = -8,
  INQLAB_NOT_A_LATTICE = -9,
  INQLAB_NOT_CORE_SUBSET = -10,
  INQLAB_NOT_IN_CORE_CLOSURE = -11,
  INQLAB_MISSING_ATOM = -12,
  INQLAB_MISSING_TENSOR = -13,
  INQLAB_X_IS_TOP = -14,
  INQLAB_PHI_IS_VALID = -15,
  INQLAB_NOT_WELL_CONNECTED = -16,
  INQLAB_MAP_ROLE_MISMATCH = -17,
  INQLAB_NOT_FCGW = -18,
  INQLAB_BAD_INPUT = -19,
  INQLAB_LIMIT_EXCEEDED = -20,
  INQLAB_INTERNAL = -21
} inqlab_status;

/* Selects the logic for operations that exist in both: INQLAB_INQ is the
 * tensor-free inquisitive flavour, INQLAB_DEP the dependence flavour. */
typedef enum inqlab_flavour { INQLAB_INQ = 0, INQLAB_DEP = 1 } inqlab_flavour;

typedef struct inqlab_formula inqlab_formula;
typedef struct inqlab_model inqlab_model;
typedef struct inqlab_algebra inqlab_algebra;

/* Message of the most recent failure on this thread; empty string if none.
 * The pointer stays valid until the next failing call on the thread. */
const char* inqlab_last_error(void);

void inqlab_string_free(char* s);
void inqlab_formula_free(inqlab_formula* f);
void inqlab_model_free(inqlab_model* m);
void inqlab_algebra_free(inqlab_algebra* a);

/* ---- formulas ---------------------------------------------------------- */

/* Parses the ASCII surface syntax: atoms [a-z][a-z0-9]*, _|_, ~, &, (*),
 * \/, ->, and the dep(...) sugar. */
inqlab_status inqlab_parse(const char* text, inqlab_formula** out);

/* Instantiates axiom schema A1..A15 with the given formula texts. */
inqlab_status inqlab_axiom(const char* schema, const char* const* args,
                           size_t n_args, inqlab_formula** out);

/* Substitutes a standard formula for every occurrence of the atom. */
inqlab_status inqlab_substitute(const inqlab_formula* f, const char* atom,
                                const inqlab_formula* replacement,
                                inqlab_formula** out);

/* The canonical printed form. */
inqlab_status inqlab_print(const inqlab_formula* f, char** out);

/* 1 when the formula avoids inquisitive disjunction. */
inqlab_status inqlab_is_standard(const inqlab_formula* f, int* out);

/* {"formula": ..., "standard": ..., "atoms": [...]} */
inqlab_status inqlab_formula_info(const inqlab_formula* f, char** out_json);

/* {"formula": ..., "disjuncts": [...]}: the standard disjuncts whose join
 * is team-equivalent to f. */
inqlab_status inqlab_dnf(const inqlab_formula* f, char** out_json);

/* ---- models ------------------------------------------------------------ */

/* Loads {"worlds": ..., "order": ..., "valuation": ...}; the order is
 * closed reflexively and transitively and must be antisymmetric, and the
 * valuation must be persistent. A file without "valuation" is a frame. */
inqlab_status inqlab_model_from_json(const char* text, inqlab_model** out);

inqlab_status inqlab_model_to_json(const inqlab_model* m, char** out_json);

/* {"supports": ...}: team semantics at the team named by a comma-separated
 * list of worlds (empty string for the empty team). */
inqlab_status inqlab_eval_team(const inqlab_model* m, const char* team_csv,
                               const inqlab_formula* f, char** out_json,
                               int* supports);

/* {"valid": ...}: support at every team of the model. */
inqlab_status inqlab_model_valid(const inqlab_model* m,
                                 const inqlab_formula* f, char** out_json,
                                 int* valid);

/* {"valid": ...}: support under every persistent valuation of the model's
 * frame (the model's own valuation is ignored). */
inqlab_status inqlab_frame_valid(const inqlab_model* m,
                                 const inqlab_formula* f, char** out_json,
                                 int* valid);

/* {"flat": ...}: support everywhere equals singleton support. */
inqlab_status inqlab_flatness_check(const inqlab_model* m,
                                    const inqlab_formula* f, char** out_json,
                                    int* flat);

/* Searches models with up to max_worlds worlds for a refuting team.
 * Found: {"found": true, "model": ..., "team": [...]} and *found = 1;
 * otherwise {"found": false, "valid_up_to": ...} and *found = 0. */
inqlab_status inqlab_countermodel(const inqlab_formula* f, int max_worlds,
                                  int classical, int dedup_iso, int jobs,
                                  int deterministic, char** out_json,
                                  int* found);

/* ---- algebras ---------------------------------------------------------- */

/* Loads {"elements": ..., "leq": ..., "zero": ..., "core": ...,
 * "tensor": ...}; the order is closed on load, the lattice tables are
 * derived, and stored "one"/"tables" entries are verified. */
inqlab_status inqlab_algebra_from_json(const char* text,
                                       inqlab_algebra** out);

inqlab_status inqlab_algebra_to_json(const inqlab_algebra* a,
                                     char** out_json);

/* {"ok": true} or {"ok": false, "check": ..., "detail": ...}: the
 * inquisitive or dependence algebra laws. */
inqlab_status inqlab_check_algebra(const inqlab_algebra* a,
                                   inqlab_flavour flavour, char** out_json,
                                   int* ok);

/* {"valid": ...}: designated value under every core valuation. */
inqlab_status inqlab_algebra_valid(const inqlab_algebra* a,
                                   const inqlab_formula* f, char** out_json,
                                   int* valid);

/* {"valid": ...}: the universally quantified Horn translation. */
inqlab_status inqlab_horn_check(const inqlab_algebra* a,
                                const inqlab_formula* f, char** out_json,
                                int* valid);

/* {"valid": ...}: the Horn equation eps = delta over all assignments. */
inqlab_status inqlab_horn_equation(const inqlab_algebra* a,
                                   const inqlab_formula* eps,
                                   const inqlab_formula* delta,
                                   char** out_json, int* valid);

/* {"value": ..., "designated": ...}: evaluates f under the core valuation
 * {"p": element name, ...}. */
inqlab_status inqlab_eval_core(const inqlab_algebra* a, const char* mu_json,
                               const inqlab_formula* f, char** out_json,
                               int* designated);

/* {"algebra": ..., "refuting_valuation": ...}: a finite, core-generated,
 * well-connected algebra refuting f, or INQLAB_PHI_IS_VALID. */
inqlab_status inqlab_birkhoff_reduce(const inqlab_algebra* a,
                                     const inqlab_formula* f,
                                     inqlab_flavour flavour,
                                     char** out_json);

/* Same result shape along the dependence-specific finiteness route. */
inqlab_status inqlab_dep_finite_refuter(const inqlab_algebra* a,
                                        const inqlab_formula* f,
                                        char** out_json);

/* ---- duality ----------------------------------------------------------- */

/* The canonical algebra of the model's frame, as an algebra file with a
 * provenance block mapping core elements to their generating upsets. */
inqlab_status inqlab_dualize(const inqlab_model* m, inqlab_flavour flavour,
                             char** out_json);

/* The frame of join-irreducible core elements of an FCGW algebra, as a
 * frame file. */
inqlab_status inqlab_dualize_back(const inqlab_algebra* a, char** out_json);

/* {"team": ..., "algebra": ..., "match": ...}: compares the team verdict
 * with the algebraic verdict on the canonical dual model. */
inqlab_status inqlab_cross_check(const inqlab_model* m,
                                 const inqlab_formula* f,
                                 inqlab_flavour flavour, char** out_json,
                                 int* match);

/* {"ok": true, "iso": [...]} or {"ok": false, "detail": ...}: frame-side
 * and algebra-side round trips through the duality. */
inqlab_status inqlab_round_trip_frame(const inqlab_model* m,
                                      inqlab_flavour flavour,
                                      char** out_json, int* ok);
inqlab_status inqlab_round_trip_algebra(const inqlab_algebra* a,
                                        inqlab_flavour flavour,
                                        char** out_json, int* ok);

#ifdef __cplusplus
}
#endif

#endif /* INQLAB_H */
