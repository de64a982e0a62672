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

#include "core/nars.hpp"

#include <algorithm>
#include <cmath>

#include "core/error.hpp"
#include "core/format.hpp"

namespace belrev::nars {

using belrev::ErrorCode;
using belrev::fail;

TruthValue::TruthValue(double f, double c) : frequency(f), confidence(c) {
    if (!std::isfinite(f) || f < 0.0 || f > 1.0)
        fail(ErrorCode::invalid_argument, "frequency must lie in [0, 1], got " + shortest(f));
    if (!std::isfinite(c) || c < 0.0)
        fail(ErrorCode::invalid_argument, "confidence must lie in [0, 1), got " + shortest(c));
    if (c >= 1.0)
        fail(ErrorCode::absolute_confidence,
             "confidence 1 means infinite evidence and is not representable");
}

EvidenceCount::EvidenceCount(long positive_, long total_, int horizon_)
    : positive(positive_), total(total_), horizon(horizon_) {
    if (total < 1) fail(ErrorCode::undefined_frequency, "no checked cases, frequency undefined");
    if (positive < 0 || positive > total)
        fail(ErrorCode::invalid_argument, "positive count must lie in [0, total]");
    if (horizon < 1) fail(ErrorCode::invalid_argument, "evidential horizon must be at least 1");
}

Term::Term(std::string n) : name(std::move(n)) {
    if (name.empty()) fail(ErrorCode::invalid_argument, "a term needs a non-empty name");
}

Judgment::Judgment(Term subject_, Term predicate_, TruthValue tv_, std::set<std::string> base_)
    : subject(std::move(subject_)),
      predicate(std::move(predicate_)),
      tv(tv_),
      base(std::move(base_)) {
    if (base.empty())
        fail(ErrorCode::invalid_argument, "a judgment needs at least one evidence source");
}

TruthValue truth_from_counts(const EvidenceCount& ec) {
    double n = static_cast<double>(ec.total);
    return TruthValue(static_cast<double>(ec.positive) / n, n / (n + ec.horizon));
}

double weight(double confidence) {
    if (!std::isfinite(confidence) || confidence < 0.0)
        fail(ErrorCode::invalid_argument, "confidence must lie in [0, 1)");
    if (confidence >= 1.0)
        fail(ErrorCode::absolute_confidence, "confidence 1 has no finite evidence weight");
    return confidence / (1.0 - confidence);
}

namespace {

std::set<std::string> base_union(const Judgment& a, const Judgment& b) {
    std::set<std::string> out = a.base;
    out.insert(b.base.begin(), b.base.end());
    return out;
}

bool bases_overlap(const Judgment& a, const Judgment& b) {
    return std::any_of(a.base.begin(), a.base.end(),
                       [&b](const std::string& s) { return b.base.count(s) > 0; });
}

}  // namespace

Judgment induction(const Judgment& j1, const Judgment& j2, int horizon) {
    if (horizon < 1)
        fail(ErrorCode::invalid_argument, "evidential horizon must be at least 1");
    if (j1.subject != j2.subject)
        fail(ErrorCode::rule_inapplicable,
             "induction needs a shared subject term, got '" + j1.subject.name + "' and '" +
                 j2.subject.name + "'");
    // Pooled evidence for the hypothesis; it can never reach the weight of
    // even one full observation, which keeps the conclusion tentative.
    double pooled = j2.tv.frequency * j1.tv.confidence * j2.tv.confidence;
    TruthValue tv(j1.tv.frequency, pooled / (pooled + horizon));
    return Judgment(j2.predicate, j1.predicate, tv, base_union(j1, j2));
}

Judgment revise(const Judgment& j1, const Judgment& j2) {
    if (!j1.same_statement(j2))
        fail(ErrorCode::not_combinable,
             "revision needs two opinions on the same statement");
    if (bases_overlap(j1, j2))
        fail(ErrorCode::correlative_sources,
             "premises share evidence sources; pooling would double-count them");
    double w1 = weight(j1.tv.confidence);
    double w2 = weight(j2.tv.confidence);
    double w = w1 + w2;
    if (w == 0.0)
        fail(ErrorCode::no_evidence, "both premises carry zero evidence weight");
    TruthValue tv((w1 * j1.tv.frequency + w2 * j2.tv.frequency) / w, w / (w + 1.0));
    return Judgment(j1.subject, j1.predicate, tv, base_union(j1, j2));
}

Judgment update_choice(const Judgment& j1, const Judgment& j2) {
    if (!j1.same_statement(j2))
        fail(ErrorCode::not_combinable,
             "choice needs two opinions on the same statement");
    if (!bases_overlap(j1, j2))
        fail(ErrorCode::disjoint_sources,
             "premises have disjoint sources; revision applies, not choice");
    const Judgment& winner = (j2.tv.confidence > j1.tv.confidence) ? j2 : j1;
    return Judgment(winner.subject, winner.predicate, winner.tv, base_union(j1, j2));
}

CombineResult combine(const Judgment& j1, const Judgment& j2) {
    if (!j1.same_statement(j2))
        fail(ErrorCode::not_combinable,
             "cannot combine judgments about different statements");
    if (bases_overlap(j1, j2)) return {update_choice(j1, j2), CombineRoute::choice};
    return {revise(j1, j2), CombineRoute::revision};
}

}  // namespace belrev::nars
