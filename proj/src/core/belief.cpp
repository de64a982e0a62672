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

#include "core/belief.hpp"

#include "core/error.hpp"
#include "core/format.hpp"

namespace belrev {

BeliefState::BeliefState(Distribution prior)
    : prior_(std::move(prior)), k_(Sentence::top()) {}

BeliefState::BeliefState(Distribution prior, std::vector<Sentence> log, Sentence k)
    : prior_(std::move(prior)), log_(std::move(log)), k_(std::move(k)) {}

double BeliefState::bel(const Sentence& x) const {
    return prior_.conditional(x, k_);
}

double BeliefState::bel_conditional(const Sentence& x, const Sentence& y) const {
    double py = bel(y);
    if (py == 0.0)
        fail(ErrorCode::zero_condition,
             "conditioning sentence '" + y.text() + "' has belief zero");
    return bel(x & y) / py;
}

BeliefState BeliefState::conditionalize(const Sentence& a) const {
    if (bel(a) == 0.0)
        fail(ErrorCode::zero_condition,
             "cannot accept '" + a.text() + "': its belief is zero");
    std::vector<Sentence> log = log_;
    log.push_back(a);
    Sentence k = log_.empty() ? a : (k_ & a);
    return BeliefState(prior_, std::move(log), std::move(k));
}

Distribution BeliefState::posterior() const {
    const Space& sp = prior_.space();
    std::vector<double> w(sp.world_count(), 0.0);
    double total = 0.0;
    for (World world = 0; world < sp.world_count(); ++world)
        if (k_.evaluate(sp, world)) {
            w[world] = prior_.weight(world);
            total += w[world];
        }
    // The class invariant keeps prob(prior, k_conj) > 0.
    for (double& x : w) x /= total;
    return Distribution::adopt_normalized(prior_.space_ptr(), std::move(w));
}

PreconditionReport BeliefState::check_preconditions(const Sentence& a, double m) const {
    PreconditionReport rep;
    if (m != 0.0 && m != 1.0) {
        rep.binary_ok = false;
        rep.binary_reason = "certainty " + shortest(m) +
                            " is not 0 or 1; conditioning needs fully decided evidence";
    }
    const Space& sp = prior_.space();
    std::string foreign;
    for (const std::string& name : a.atom_names())
        if (!sp.atom_index(name)) {
            foreign = name;
            break;
        }
    if (!foreign.empty()) {
        rep.in_space_ok = false;
        rep.in_space_reason =
            "atom '" + foreign + "' is outside the declared proposition space";
        rep.positive_prob_ok = false;
        rep.positive_prob_reason = "cannot evaluate a sentence outside the space";
        return rep;
    }
    // For m = 0 the claim being accepted is the negation.
    Sentence claim = (m == 0.0) ? !a : a;
    if (bel(claim) == 0.0) {
        rep.positive_prob_ok = false;
        rep.positive_prob_reason =
            "'" + claim.text() + "' has belief zero, so it cannot serve as a condition";
    }
    return rep;
}

namespace {

// Longest chain from a given support set of worlds.  Conditioning on any
// sentence class maps support S to S ∩ M, and the step is informative
// exactly when that intersection is a non-empty proper subset, so the
// search walks proper non-empty submasks.
std::size_t longest_chain(std::uint32_t support, std::vector<int>& memo) {
    int& slot = memo[support];
    if (slot >= 0) return static_cast<std::size_t>(slot);
    std::size_t best = 0;
    for (std::uint32_t sub = (support - 1) & support; sub; sub = (sub - 1) & support) {
        std::size_t len = 1 + longest_chain(sub, memo);
        if (len > best) best = len;
    }
    slot = static_cast<int>(best);
    return best;
}

}  // namespace

CapacityReport max_conditioning_chain(const Distribution& d) {
    const Space& sp = d.space();
    if (sp.atom_count() > 4)
        fail(ErrorCode::space_too_large,
             "exhaustive chain search supports at most 4 atoms, got " +
                 std::to_string(sp.atom_count()));
    std::uint32_t support = 0;
    for (World w = 0; w < sp.world_count(); ++w)
        if (d.weight(w) > 0.0) support |= (1u << w);
    std::vector<int> memo(std::size_t{1} << sp.world_count(), -1);
    CapacityReport rep;
    rep.max_length = longest_chain(support, memo);
    rep.sentence_classes = std::uint64_t{1} << sp.world_count();
    return rep;
}

}  // namespace belrev
