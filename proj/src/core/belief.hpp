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

#ifndef BELREV_CORE_BELIEF_HPP
#define BELREV_CORE_BELIEF_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "core/distribution.hpp"
#include "core/sentence.hpp"

namespace belrev {

// Outcome of screening a piece of evidence before conditioning.  This is a
// classification, never a failure: each flag is false only for evidence the
// conditioning rule cannot absorb, with the reason spelled out.
struct PreconditionReport {
    bool binary_ok = true;         // the evidence is fully true or fully false
    bool in_space_ok = true;       // every atom it mentions is declared
    bool positive_prob_ok = true;  // what it asserts has positive probability now
    std::string binary_reason;
    std::string in_space_reason;
    std::string positive_prob_reason;

    bool admissible() const noexcept { return binary_ok && in_space_ok && positive_prob_ok; }
};

struct CapacityReport {
    std::size_t max_length = 0;         // longest non-redundant conditioning chain
    std::uint64_t sentence_classes = 0; // 2^(2^n) equivalence classes of sentences
};

// A prior plus the ordered log of sentences accepted as true.  Current
// belief in x is the prior conditioned on the conjunction of the log.
// Immutable: conditionalize returns a fresh state.
class BeliefState {
  public:
    explicit BeliefState(Distribution prior);

    const Distribution& prior() const noexcept { return prior_; }
    const std::vector<Sentence>& evidence_log() const noexcept { return log_; }
    const Sentence& k_conj() const noexcept { return k_; }
    std::size_t t() const noexcept { return log_.size(); }

    double bel(const Sentence& x) const;
    // bel(x ∧ y) / bel(y); throws zero_condition when bel(y) = 0.
    double bel_conditional(const Sentence& x, const Sentence& y) const;

    // Accepts a as true.  Throws zero_condition when bel(a) = 0.
    BeliefState conditionalize(const Sentence& a) const;

    // The distribution realizing the current bel function.
    Distribution posterior() const;

    // Screens evidence "a holds with certainty m" against the three
    // admissibility conditions.  Never throws; a may mention undeclared
    // atoms, which fails the in-space check.
    PreconditionReport check_preconditions(const Sentence& a, double m) const;

  private:
    BeliefState(Distribution prior, std::vector<Sentence> log, Sentence k);

    Distribution prior_;
    std::vector<Sentence> log_;
    Sentence k_;
};

// Longest chain of conditionalizations from d where each accepted sentence
// is informative at its step (belief strictly between 0 and 1), found by
// exhaustive search over sentence equivalence classes.  Limited to spaces
// of at most 4 atoms; throws space_too_large beyond that.
CapacityReport max_conditioning_chain(const Distribution& d);

}  // namespace belrev

#endif  // BELREV_CORE_BELIEF_HPP
