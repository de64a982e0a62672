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

#ifndef BELREV_CORE_SCENARIO_HPP
#define BELREV_CORE_SCENARIO_HPP

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "core/belief.hpp"
#include "core/jeffrey.hpp"
#include "core/nars.hpp"
#include "core/sentence.hpp"

namespace belrev {

// Scenario directives, one per non-comment source line.
//
//   atoms <name>...
//   prior uniform
//   prior world <name>=<t|f> ... weight <number>   (unlisted worlds get 0)
//   condition <sentence> [certainty]               (certainty defaults to 1)
//   jeffrey <sentence> <m>
//   virtual <sentence> <m>
//   likelihood <sentence> <ratio>
//   query <sentence>
//   nars judgment <id> <subject> <predicate> <f> <c> base <source>...
//   nars induct <id> <id> as <id>
//   nars combine <id> <id> as <id>
//   nars show <id>
//
// `#` starts a comment; blank lines are ignored.

struct AtomsDirective {
    std::vector<std::string> names;
    bool operator==(const AtomsDirective&) const = default;
};
struct PriorUniformDirective {
    bool operator==(const PriorUniformDirective&) const = default;
};
struct PriorWorldDirective {
    // name=value pairs, normalized to declared atom order at parse time
    std::vector<std::pair<std::string, bool>> assignment;
    double weight = 0.0;
    bool operator==(const PriorWorldDirective&) const = default;
};
struct ConditionDirective {
    Sentence sentence;
    double certainty = 1.0;  // 0 conditions on the negation; anything else is refused
    bool operator==(const ConditionDirective&) const = default;
};
struct JeffreyDirective {
    Sentence sentence;
    double m = 0.0;
    bool operator==(const JeffreyDirective&) const = default;
};
struct VirtualDirective {
    Sentence sentence;
    double m = 0.0;
    bool operator==(const VirtualDirective&) const = default;
};
struct LikelihoodDirective {
    Sentence sentence;
    double ratio = 1.0;
    bool operator==(const LikelihoodDirective&) const = default;
};
struct QueryDirective {
    Sentence sentence;
    bool operator==(const QueryDirective&) const = default;
};
struct NarsJudgmentDirective {
    std::string id;
    std::string subject;
    std::string predicate;
    double frequency = 0.0;
    double confidence = 0.0;
    std::set<std::string> base;
    bool operator==(const NarsJudgmentDirective&) const = default;
};
struct NarsInductDirective {
    std::string premise1, premise2, result;
    bool operator==(const NarsInductDirective&) const = default;
};
struct NarsCombineDirective {
    std::string premise1, premise2, result;
    bool operator==(const NarsCombineDirective&) const = default;
};
struct NarsShowDirective {
    std::string id;
    bool operator==(const NarsShowDirective&) const = default;
};

using Directive =
    std::variant<AtomsDirective, PriorUniformDirective, PriorWorldDirective,
                 ConditionDirective, JeffreyDirective, VirtualDirective,
                 LikelihoodDirective, QueryDirective, NarsJudgmentDirective,
                 NarsInductDirective, NarsCombineDirective, NarsShowDirective>;

// Canonical one-line source text of a directive.
std::string render_directive(const Directive& d);

// A validated, ordered directive list.  Guarantees established at parse
// time: atoms are declared once and before any probabilistic directive, a
// prior is present before its first use and stays fixed, sentences are
// well-formed, sentence atoms are declared (except in `condition`, whose
// admissibility is a runtime classification), judgment ids are unique and
// premises refer to existing ids.
class Scenario {
  public:
    const std::vector<Directive>& directives() const noexcept { return directives_; }
    std::string render() const;

    friend bool operator==(const Scenario& a, const Scenario& b) {
        return a.directives_ == b.directives_;
    }
    friend bool operator!=(const Scenario& a, const Scenario& b) { return !(a == b); }

  private:
    friend Scenario parse_scenario(const std::string& text);
    std::vector<Directive> directives_;
};

// Throws parse_error with a "line N:" prefix on the first problem.
Scenario parse_scenario(const std::string& text);

// One executed directive.  `notes` are the human-readable detail lines of
// the rendered trace; the typed fields carry the same data for callers
// that do not want to parse text.
struct TraceEvent {
    std::size_t step = 0;   // 1-based directive index
    std::string directive;  // canonical echo
    std::vector<std::string> notes;
    std::optional<PreconditionReport> precheck;
    std::optional<double> value;  // query result or posterior opinion
    std::optional<nars::TruthValue> truth;
    std::string judgment_id;
    std::optional<DominanceReport> dominance;
    bool refused = false;  // condition screened out; execution continued
    bool failed = false;   // hard error; execution halted here
};

struct RunOptions {
    int horizon = nars::kDefaultHorizon;
    double tolerance = 1e-9;
};

struct RunResult {
    std::vector<TraceEvent> events;
    bool completed = true;
};

RunResult run_scenario(const Scenario& sc, const RunOptions& opts = {});

std::string render_trace(const std::vector<TraceEvent>& events);

// Side-by-side outcome of the same conflict pushed through both engines,
// plus the probe showing that priors with different origins leave
// identical probabilistic traces.
struct ComparisonReport {
    std::string soft_sentence;
    double prior_opinion = 0.0;
    double incoming_m = 0.0;
    double posterior_opinion = 0.0;
    std::string nars_statement;
    nars::TruthValue nars_prior;
    nars::TruthValue nars_incoming;
    nars::TruthValue nars_revised;
    std::string backstory_a;
    std::string backstory_b;
    bool traces_identical = false;
    std::string render() const;
};

// Requires the scenario to stage the conflict: a prior, at least one soft
// evidence directive, and at least one combine that pools disjoint
// sources.  Throws unusable_scenario otherwise.
ComparisonReport compare_engines(const Scenario& sc, const RunOptions& opts = {});

}  // namespace belrev

#endif  // BELREV_CORE_SCENARIO_HPP
