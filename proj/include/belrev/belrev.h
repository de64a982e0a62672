/* Copyright 2026 The belrev Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the belrev engine: exact world-enumeration probability on
 * small propositional spaces, conditionalization with admissibility
 * screening, soft-evidence (Jeffrey / virtual-proposition) updating, a
 * two-number evidence calculus, and a scenario runner that drives all of
 * them from plain-text files.
 *
 * Conventions: every fallible function returns belrev_status and writes
 * its result through out-parameters, which are left untouched on failure.
 * belrev_last_error() returns a thread-local message for the most recent
 * failure on the calling thread.  Objects are created behind opaque
 * handles and released with the matching _destroy function; handles are
 * independent of the handles they were created from and may outlive them.
 * Strings returned through char** out-parameters are heap-allocated and
 * must be released with belrev_string_free().
 */

#ifndef BELREV_BELREV_H
#define BELREV_BELREV_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum belrev_status {
    BELREV_OK = 0,
    BELREV_ERR_INVALID_ARGUMENT = 1,
    BELREV_ERR_PARSE = 2,
    BELREV_ERR_UNKNOWN_ATOM = 3,
    BELREV_ERR_SPACE_TOO_LARGE = 4,
    BELREV_ERR_INVALID_PRIOR = 5,
    BELREV_ERR_ZERO_CONDITION = 6,
    BELREV_ERR_UNDEFINED_CONDITIONAL = 7,
    BELREV_ERR_ABSOLUTE_CONFIDENCE = 8,
    BELREV_ERR_UNDEFINED_FREQUENCY = 9,
    BELREV_ERR_RULE_INAPPLICABLE = 10,
    BELREV_ERR_CORRELATIVE_SOURCES = 11,
    BELREV_ERR_DISJOINT_SOURCES = 12,
    BELREV_ERR_NOT_COMBINABLE = 13,
    BELREV_ERR_NO_EVIDENCE = 14,
    BELREV_ERR_UNUSABLE_SCENARIO = 15,
    BELREV_ERR_INTERNAL = 16
} belrev_status;

typedef struct belrev_space belrev_space;
typedef struct belrev_sentence belrev_sentence;
typedef struct belrev_distribution belrev_distribution;
typedef struct belrev_belief belrev_belief;
typedef struct belrev_scenario belrev_scenario;

typedef struct belrev_truth_value {
    double frequency;  /* in [0, 1] */
    double confidence; /* in [0, 1) */
} belrev_truth_value;

typedef struct belrev_precheck {
    int binary_ok;        /* evidence certainty is 0 or 1 */
    int in_space_ok;      /* every atom mentioned is declared */
    int positive_prob_ok; /* the accepted claim has positive belief */
} belrev_precheck;

/* --- library ----------------------------------------------------------- */

const char* belrev_version(void);
const char* belrev_status_name(belrev_status status);
/* Message for the last failure on this thread; empty string if none. */
const char* belrev_last_error(void);
void belrev_string_free(char* str);

/* --- proposition space -------------------------------------------------- */

/* At most 16 atoms; names are [A-Za-z_][A-Za-z0-9_]* excluding the
 * constants "true" and "false". */
belrev_status belrev_space_create(const char* const* atom_names, size_t atom_count,
                                  belrev_space** out);
void belrev_space_destroy(belrev_space* space);
size_t belrev_space_atom_count(const belrev_space* space);
uint32_t belrev_space_world_count(const belrev_space* space);

/* --- sentences ----------------------------------------------------------
 * Grammar: atoms, "true", "false", "!" (not), "&" (and), "|" (or),
 * parentheses; "!" binds tighter than "&", which binds tighter than "|";
 * binary operators associate left.  Sentences are independent of any
 * space; atoms resolve when the sentence is evaluated. */

belrev_status belrev_sentence_parse(const char* text, belrev_sentence** out);
void belrev_sentence_destroy(belrev_sentence* sentence);
/* Canonical text with minimal parentheses. */
belrev_status belrev_sentence_text(const belrev_sentence* sentence, char** out);

/* --- distributions ------------------------------------------------------
 * Worlds are indexed 0..2^n-1 in binary counting order over the declared
 * atom list, first atom most significant; world 0 makes every atom false. */

belrev_status belrev_distribution_uniform(const belrev_space* space,
                                          belrev_distribution** out);
/* weight_count must equal the space's world count; weights are
 * normalized.  Fails unless all are finite, non-negative, and at least
 * one is positive. */
belrev_status belrev_distribution_from_weights(const belrev_space* space,
                                               const double* weights, size_t weight_count,
                                               belrev_distribution** out);
void belrev_distribution_destroy(belrev_distribution* dist);
/* Copies the normalized weights into out[0..capacity); capacity must be
 * at least the world count. */
belrev_status belrev_distribution_weights(const belrev_distribution* dist, double* out,
                                          size_t capacity);
belrev_status belrev_distribution_probability(const belrev_distribution* dist,
                                              const belrev_sentence* s, double* out);
/* P(x and y) / P(y); fails with BELREV_ERR_ZERO_CONDITION when P(y)=0. */
belrev_status belrev_distribution_conditional(const belrev_distribution* dist,
                                              const belrev_sentence* x,
                                              const belrev_sentence* y, double* out);
/* Reweights so P(sentence) becomes exactly m while conditionals given the
 * sentence and given its negation are preserved. */
belrev_status belrev_distribution_jeffrey(const belrev_distribution* dist,
                                          const belrev_sentence* sentence, double m,
                                          belrev_distribution** out);
/* Same posterior via conditioning on an unspecified proposition. */
belrev_status belrev_distribution_virtual(const belrev_distribution* dist,
                                          const belrev_sentence* sentence, double m,
                                          belrev_distribution** out);
/* Converts likelihood ratio lambda = P(E|V)/P(E|!V) to its posterior
 * target and applies the virtual update. */
belrev_status belrev_distribution_likelihood(const belrev_distribution* dist,
                                             const belrev_sentence* sentence,
                                             double ratio, belrev_distribution** out);

/* --- belief states ------------------------------------------------------
 * A prior plus the log of sentences accepted as true. */

belrev_status belrev_belief_create(const belrev_distribution* prior, belrev_belief** out);
void belrev_belief_destroy(belrev_belief* belief);
/* Number of accepted sentences. */
size_t belrev_belief_time(const belrev_belief* belief);
belrev_status belrev_belief_bel(const belrev_belief* belief, const belrev_sentence* x,
                                double* out);
belrev_status belrev_belief_bel_conditional(const belrev_belief* belief,
                                            const belrev_sentence* x,
                                            const belrev_sentence* y, double* out);
/* Returns a new state with the sentence accepted; the input state is
 * unchanged. */
belrev_status belrev_belief_conditionalize(const belrev_belief* belief,
                                           const belrev_sentence* a, belrev_belief** out);
/* Classifies evidence "a holds with certainty m" without applying it.
 * Never fails on foreign atoms; they turn off in_space_ok. */
belrev_status belrev_belief_check(const belrev_belief* belief, const belrev_sentence* a,
                                  double m, belrev_precheck* out);
/* Longest chain of informative conditionalizations from the distribution
 * and the count of sentence equivalence classes (2^(2^n)).  Exhaustive;
 * at most 4 atoms. */
belrev_status belrev_capacity(const belrev_distribution* dist, size_t* out_max_length,
                              uint64_t* out_sentence_classes);

/* --- evidence calculus -------------------------------------------------- */

/* f = positive/total, c = total/(total + horizon). */
belrev_status belrev_truth_from_counts(long positive, long total, int horizon,
                                       belrev_truth_value* out);
/* w = c/(1-c). */
belrev_status belrev_evidence_weight(double confidence, double* out);
/* Truth value of the hypothesis "S is a kind of P" induced from
 * "M is a kind of P" (j1) and "M is a kind of S" (j2). */
belrev_status belrev_nars_induction(belrev_truth_value j1, belrev_truth_value j2,
                                    int horizon, belrev_truth_value* out);
/* Weighted pooling of two opinions from disjoint sources. */
belrev_status belrev_nars_revision(belrev_truth_value j1, belrev_truth_value j2,
                                   belrev_truth_value* out);
/* Resolution for correlated sources: higher confidence wins, ties keep
 * the first argument. */
belrev_status belrev_nars_choice(belrev_truth_value j1, belrev_truth_value j2,
                                 belrev_truth_value* out);

/* --- scenarios ----------------------------------------------------------
 * Line-oriented text; see the project README for the directive grammar. */

belrev_status belrev_scenario_parse(const char* text, belrev_scenario** out);
void belrev_scenario_destroy(belrev_scenario* scenario);
size_t belrev_scenario_directive_count(const belrev_scenario* scenario);
/* Canonical source text; reparsing it yields an equal scenario. */
belrev_status belrev_scenario_render(const belrev_scenario* scenario, char** out);
/* Executes the scenario and returns the rendered trace.  out_completed is
 * 1 when every directive executed, 0 when a hard error halted the run
 * (the trace then ends with the error event).  horizon must be >= 1,
 * tolerance > 0. */
belrev_status belrev_scenario_run(const belrev_scenario* scenario, int horizon,
                                  double tolerance, char** out_trace,
                                  int* out_completed);
/* Side-by-side updating-vs-revision report; the scenario must stage a
 * prior, soft evidence, and a disjoint-source combine. */
belrev_status belrev_scenario_compare(const belrev_scenario* scenario, int horizon,
                                      double tolerance, char** out_report);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* BELREV_BELREV_H */
