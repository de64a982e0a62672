// Copyright 2026 The belrev Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BELREV_CORE_JEFFREY_HPP
#define BELREV_CORE_JEFFREY_HPP

#include "core/distribution.hpp"
#include "core/sentence.hpp"

namespace belrev {

// Soft evidence: sentence a should end up with probability m.
struct SoftEvidence {
    Sentence a;
    double m;  // in [0, 1]
};

// Reweights d so prob(a) becomes exactly m while conditionals given a and
// given !a are preserved.  Throws undefined_conditional when the side of
// the split that m gives weight to has prior probability zero.
Distribution jeffrey_update(const Distribution& d, const SoftEvidence& ev);

// Same posterior reached by conditioning on an unspecified proposition
// that is independent of everything given a and given !a: mixes the two
// conditional distributions with weights m and 1-m.
Distribution virtual_update(const Distribution& d, const SoftEvidence& ev);

struct DominanceReport {
    double prior_opinion = 0.0;     // prob(d, a) before the update
    double target = 0.0;            // the incoming m
    double posterior_opinion = 0.0; // prob(d', a) after the update
    bool dominated = false;         // posterior equals the target within tol
};

// Applies the update and reports that the posterior opinion about a is the
// incoming m regardless of the prior opinion.
DominanceReport dominance_probe(const Distribution& d, const SoftEvidence& ev,
                                double tolerance = 1e-9);

// Converts a likelihood ratio lambda = P(E|V)/P(E|!V) for sentence e into
// the posterior target it forces: m = lambda*P(E) / (lambda*P(E) + 1 - P(E)).
// Requires lambda > 0 and 0 < prob(d, e) < 1.
double likelihood_target(const Distribution& d, const Sentence& e, double lambda);

// likelihood_target followed by virtual_update.
Distribution likelihood_update(const Distribution& d, const Sentence& e, double lambda);

}  // namespace belrev

#endif  // BELREV_CORE_JEFFREY_HPP
