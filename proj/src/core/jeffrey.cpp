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

#include "core/jeffrey.hpp"

#include <cmath>

#include "core/error.hpp"
#include "core/format.hpp"

namespace belrev {

namespace {

void check_target(double m) {
    if (!std::isfinite(m) || m < 0.0 || m > 1.0)
        fail(ErrorCode::invalid_argument,
             "target probability must lie in [0, 1], got " + shortest(m));
}

// Splits d's mass between the models of a and of !a.  Exact sums of
// non-negative weights, so a zero really means no mass on that side.
struct Split {
    double on_a = 0.0;
    double off_a = 0.0;
};

Split split_mass(const Distribution& d, const Sentence& a) {
    Split s;
    const Space& sp = d.space();
    for (World w = 0; w < sp.world_count(); ++w)
        (a.evaluate(sp, w) ? s.on_a : s.off_a) += d.weight(w);
    return s;
}

void check_admissible(const Split& s, const Sentence& a, double m) {
    if (m > 0.0 && s.on_a == 0.0)
        fail(ErrorCode::undefined_conditional,
             "'" + a.text() + "' has probability zero, so no mass can be moved onto it");
    if (m < 1.0 && s.off_a == 0.0)
        fail(ErrorCode::undefined_conditional,
             "'!(" + a.text() + ")' has probability zero, so no mass can be moved onto it");
}

}  // namespace

Distribution jeffrey_update(const Distribution& d, const SoftEvidence& ev) {
    check_target(ev.m);
    Split s = split_mass(d, ev.a);
    check_admissible(s, ev.a, ev.m);
    double factor_a = (ev.m == 0.0) ? 0.0 : ev.m / s.on_a;
    double factor_na = (ev.m == 1.0) ? 0.0 : (1.0 - ev.m) / s.off_a;
    const Space& sp = d.space();
    std::vector<double> w(sp.world_count());
    for (World world = 0; world < sp.world_count(); ++world)
        w[world] = d.weight(world) *
                   (ev.a.evaluate(sp, world) ? factor_a : factor_na);
    return Distribution::adopt_normalized(d.space_ptr(), std::move(w));
}

Distribution virtual_update(const Distribution& d, const SoftEvidence& ev) {
    check_target(ev.m);
    Split s = split_mass(d, ev.a);
    check_admissible(s, ev.a, ev.m);
    // Conditioning on the unspecified proposition mixes the distribution
    // given the evidence sentence with the one given its negation; the
    // evidence sentence screens the rest of the space off from it.
    const Space& sp = d.space();
    std::vector<double> w(sp.world_count(), 0.0);
    for (World world = 0; world < sp.world_count(); ++world) {
        bool on_a = ev.a.evaluate(sp, world);
        if (on_a && ev.m > 0.0) w[world] += ev.m * (d.weight(world) / s.on_a);
        if (!on_a && ev.m < 1.0) w[world] += (1.0 - ev.m) * (d.weight(world) / s.off_a);
    }
    return Distribution::adopt_normalized(d.space_ptr(), std::move(w));
}

DominanceReport dominance_probe(const Distribution& d, const SoftEvidence& ev,
                                double tolerance) {
    DominanceReport rep;
    rep.prior_opinion = d.prob(ev.a);
    rep.target = ev.m;
    Distribution updated = jeffrey_update(d, ev);
    rep.posterior_opinion = updated.prob(ev.a);
    rep.dominated = std::abs(rep.posterior_opinion - rep.target) < tolerance;
    return rep;
}

double likelihood_target(const Distribution& d, const Sentence& e, double lambda) {
    if (!std::isfinite(lambda) || lambda <= 0.0)
        fail(ErrorCode::invalid_argument,
             "likelihood ratio must be positive and finite, got " + shortest(lambda));
    double pe = d.prob(e);
    if (pe == 0.0 || pe == 1.0)
        fail(ErrorCode::undefined_conditional,
             "likelihood evidence needs 0 < P(" + e.text() + ") < 1, got " + shortest(pe));
    return lambda * pe / (lambda * pe + (1.0 - pe));
}

Distribution likelihood_update(const Distribution& d, const Sentence& e, double lambda) {
    return virtual_update(d, SoftEvidence{e, likelihood_target(d, e, lambda)});
}

}  // namespace belrev
