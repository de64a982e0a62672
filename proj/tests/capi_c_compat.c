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

/* Compiled as C, not C++: proves the public header is consumable by a
 * plain C compiler and that a C caller can drive the main flows.
 * Returns 0 on success, a distinct small number per failing step. */

#include <math.h>
#include <string.h>

#include "belrev/belrev.h"

int capi_c_compat_smoke(void) {
    const char* names[2];
    belrev_space* space = NULL;
    belrev_sentence* p = NULL;
    belrev_sentence* q = NULL;
    belrev_distribution* prior = NULL;
    belrev_distribution* updated = NULL;
    belrev_belief* belief = NULL;
    belrev_belief* conditioned = NULL;
    belrev_truth_value tv1, tv2, pooled;
    double value = -1.0;
    double weights[4] = {0.1, 0.3, 0.2, 0.4};
    int rc = 0;

    names[0] = "p";
    names[1] = "q";
    if (belrev_space_create(names, 2, &space) != BELREV_OK) return 1;
    if (belrev_space_world_count(space) != 4u) { rc = 2; goto done; }

    if (belrev_sentence_parse("p", &p) != BELREV_OK) { rc = 3; goto done; }
    if (belrev_sentence_parse("q", &q) != BELREV_OK) { rc = 4; goto done; }

    if (belrev_distribution_from_weights(space, weights, 4, &prior) != BELREV_OK) {
        rc = 5;
        goto done;
    }
    if (belrev_distribution_probability(prior, p, &value) != BELREV_OK) {
        rc = 6;
        goto done;
    }
    if (fabs(value - 0.6) > 1e-9) { rc = 7; goto done; }

    if (belrev_belief_create(prior, &belief) != BELREV_OK) { rc = 8; goto done; }
    if (belrev_belief_conditionalize(belief, q, &conditioned) != BELREV_OK) {
        rc = 9;
        goto done;
    }
    if (belrev_belief_bel(conditioned, p, &value) != BELREV_OK) { rc = 10; goto done; }
    if (fabs(value - 4.0 / 7.0) > 1e-9) { rc = 11; goto done; }
    if (belrev_belief_time(conditioned) != 1) { rc = 12; goto done; }

    if (belrev_distribution_jeffrey(prior, q, 0.5, &updated) != BELREV_OK) {
        rc = 13;
        goto done;
    }
    if (belrev_distribution_probability(updated, p, &value) != BELREV_OK) {
        rc = 14;
        goto done;
    }
    if (fabs(value - 13.0 / 21.0) > 1e-9) { rc = 15; goto done; }

    if (belrev_truth_from_counts(9, 10, 2, &tv1) != BELREV_OK) { rc = 16; goto done; }
    if (fabs(tv1.frequency - 0.9) > 1e-12) { rc = 17; goto done; }
    tv1.frequency = 0.9;
    tv1.confidence = 0.81 / 2.81;
    tv2.frequency = 0.9;
    tv2.confidence = 0.81 / 2.81;
    if (belrev_nars_revision(tv1, tv2, &pooled) != BELREV_OK) { rc = 18; goto done; }
    if (fabs(pooled.confidence - 0.81 / 1.81) > 1e-9) { rc = 19; goto done; }

    /* a deliberate failure must not clobber the out-parameter */
    value = 123.0;
    if (belrev_distribution_probability(prior, NULL, &value) == BELREV_OK) {
        rc = 20;
        goto done;
    }
    if (value != 123.0) { rc = 21; goto done; }
    if (strlen(belrev_last_error()) == 0) { rc = 22; goto done; }

done:
    belrev_belief_destroy(conditioned);
    belrev_belief_destroy(belief);
    belrev_distribution_destroy(updated);
    belrev_distribution_destroy(prior);
    belrev_sentence_destroy(q);
    belrev_sentence_destroy(p);
    belrev_space_destroy(space);
    return rc;
}
