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

#include "belrev/belrev.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "core/belief.hpp"
#include "core/distribution.hpp"
#include "core/error.hpp"
#include "core/jeffrey.hpp"
#include "core/nars.hpp"
#include "core/scenario.hpp"
#include "core/sentence.hpp"
#include "core/space.hpp"

struct belrev_space {
    std::shared_ptr<const belrev::Space> value;
};
struct belrev_sentence {
    belrev::Sentence value;
};
struct belrev_distribution {
    belrev::Distribution value;
};
struct belrev_belief {
    belrev::BeliefState value;
};
struct belrev_scenario {
    belrev::Scenario value;
};

namespace {

thread_local std::string g_last_error;

belrev_status status_of(belrev::ErrorCode code) {
    using belrev::ErrorCode;
    switch (code) {
        case ErrorCode::invalid_argument: return BELREV_ERR_INVALID_ARGUMENT;
        case ErrorCode::parse_error: return BELREV_ERR_PARSE;
        case ErrorCode::unknown_atom: return BELREV_ERR_UNKNOWN_ATOM;
        case ErrorCode::space_too_large: return BELREV_ERR_SPACE_TOO_LARGE;
        case ErrorCode::invalid_prior: return BELREV_ERR_INVALID_PRIOR;
        case ErrorCode::zero_condition: return BELREV_ERR_ZERO_CONDITION;
        case ErrorCode::undefined_conditional: return BELREV_ERR_UNDEFINED_CONDITIONAL;
        case ErrorCode::absolute_confidence: return BELREV_ERR_ABSOLUTE_CONFIDENCE;
        case ErrorCode::undefined_frequency: return BELREV_ERR_UNDEFINED_FREQUENCY;
        case ErrorCode::rule_inapplicable: return BELREV_ERR_RULE_INAPPLICABLE;
        case ErrorCode::correlative_sources: return BELREV_ERR_CORRELATIVE_SOURCES;
        case ErrorCode::disjoint_sources: return BELREV_ERR_DISJOINT_SOURCES;
        case ErrorCode::not_combinable: return BELREV_ERR_NOT_COMBINABLE;
        case ErrorCode::no_evidence: return BELREV_ERR_NO_EVIDENCE;
        case ErrorCode::unusable_scenario: return BELREV_ERR_UNUSABLE_SCENARIO;
    }
    return BELREV_ERR_INTERNAL;
}

belrev_status fail_status(belrev_status status, const char* message) {
    g_last_error = message;
    return status;
}

// Runs the body, translating exceptions to statuses.  The body only
// writes its out-parameters after every fallible step has succeeded.
template <typename Fn>
belrev_status guarded(Fn&& body) {
    try {
        body();
        g_last_error.clear();
        return BELREV_OK;
    } catch (const belrev::Error& e) {
        g_last_error = e.what();
        return status_of(e.code());
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return BELREV_ERR_INTERNAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return BELREV_ERR_INTERNAL;
    }
}

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

belrev_truth_value to_c(const belrev::nars::TruthValue& tv) {
    return belrev_truth_value{tv.frequency, tv.confidence};
}

belrev::nars::TruthValue from_c(const belrev_truth_value& tv) {
    return belrev::nars::TruthValue(tv.frequency, tv.confidence);
}

}  // namespace

extern "C" {

const char* belrev_version(void) { return "1.0.0"; }

const char* belrev_status_name(belrev_status status) {
    switch (status) {
        case BELREV_OK: return "ok";
        case BELREV_ERR_INVALID_ARGUMENT: return "invalid argument";
        case BELREV_ERR_PARSE: return "parse error";
        case BELREV_ERR_UNKNOWN_ATOM: return "unknown atom";
        case BELREV_ERR_SPACE_TOO_LARGE: return "space too large";
        case BELREV_ERR_INVALID_PRIOR: return "invalid prior";
        case BELREV_ERR_ZERO_CONDITION: return "zero-probability condition";
        case BELREV_ERR_UNDEFINED_CONDITIONAL: return "undefined conditional";
        case BELREV_ERR_ABSOLUTE_CONFIDENCE: return "absolute confidence";
        case BELREV_ERR_UNDEFINED_FREQUENCY: return "undefined frequency";
        case BELREV_ERR_RULE_INAPPLICABLE: return "rule inapplicable";
        case BELREV_ERR_CORRELATIVE_SOURCES: return "correlative sources";
        case BELREV_ERR_DISJOINT_SOURCES: return "disjoint sources";
        case BELREV_ERR_NOT_COMBINABLE: return "not combinable";
        case BELREV_ERR_NO_EVIDENCE: return "no evidence";
        case BELREV_ERR_UNUSABLE_SCENARIO: return "unusable scenario";
        case BELREV_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* belrev_last_error(void) { return g_last_error.c_str(); }

void belrev_string_free(char* str) { std::free(str); }

/* --- proposition space -------------------------------------------------- */

belrev_status belrev_space_create(const char* const* atom_names, size_t atom_count,
                                  belrev_space** out) {
    if (!atom_names || !out)
        return fail_status(BELREV_ERR_INVALID_ARGUMENT, "null pointer argument");
    return guarded([&] {
        std::vector<std::string> names;
        names.reserve(atom_count);
        for (size_t i = 0; i < atom_count; ++i) {
            if (!atom_names[i])
                belrev::fail(belrev::ErrorCode::invalid_argument, "null atom name");
            names.emplace_back(atom_names[i]);
        }
        *out = new belrev_space{std::make_shared<const belrev::Space>(std::move(names))};
    });
}

void belrev_space_destroy(belrev_space* space) { delete space; }

size_t belrev_space_atom_count(const belrev_space* space) {
    return space ? space->value->atom_count() : 0;
}

uint32_t belrev_space_world_count(const belrev_space* space) {
    return space ? space->value->world_count() : 0;
}

/* --- sentences ----------------------------------------------------------- */

belrev_status belrev_sentence_parse(const char* text, belrev_sentence** out) {
    if (!text || !out)
        return fail_status(BELREV_ERR_INVALID_ARGUMENT, "null pointer argument");
    return guarded([&] { *out = new belrev_sentence{belrev::Sentence::parse(text)}; });
}

void belrev_sentence_destroy(belrev_sentence* sentence) { delete sentence; }

belrev_status belrev_sentence_text(const belrev_sentence* sentence, char** out) {
    if (!sentence || !out)
        return fail_status(BELREV_ERR_INVALID_ARGUMENT, "null pointer argument");
    return guarded([&] { *out = copy_string(sentence->value.text()); });
}

/* --- distributions ------------------------------------------------------- */

belrev_status belrev_distribution_uniform(const belrev_space* space,
                                          belrev_distribution** out) {
    if (!space || !out)
        return fail_status(BELREV_ERR_INVALID_ARGUMENT, "null pointer argument");
    return guarded([&] {
        *out = new belrev_distribution{belrev::Distribution::uniform(space->value)};
    });
}

belrev_status belrev_distribution_from_weights(const belrev_space* space,
                                               const double* weights, size_t weight_count,
                                               belrev_distribution** out) {
    if (!space || !weights || !out)
        return fail_status(BELREV_ERR_INVALID_ARGUMENT, "null pointer argument");
    return guarded([&] {
        std::vector<double> w(weights, weights + weight_count);
        *out = new belrev_distribution{
            belrev::Distribution::from_weights(space->value, std::move(w))};
    });
}

void belrev_distribution_destroy(belrev_distribution* dist) { delete dist; }

belrev_status belrev_distribution_weights(const belrev_distribution* dist, double* out,
                                          size_t capacity) {
    if (!dist || !out)
        return fail_status(BELREV_ERR_INVALID_ARGUMENT, "null pointer argument");
    const std::vector<double>& w = dist->value.weights();
    if (capacity < w.size())
        return fail_status(BELREV_ERR_INVALID_ARGUMENT,
                           "weight buffer smaller than the world count");
    std::memcpy(out, w.data(), w.size() * sizeof(double));
    g_last_error.clear();
    return BELREV_OK;
}

belrev_status belrev_distribution_probability(const belrev_distribution* dist,
                                              const belrev_sentence* s, double* out) {
    if (!dist || !s || !out)
        return fail_status(BELREV_ERR_INVALID_ARGUMENT, "null pointer argument");
    return guarded([&] { *out = dist->value.prob(s->value); });
}

belrev_status belrev_distribution_conditional(const belrev_distribution* dist,
                                              const belrev_sentence* x,
                                              const belrev_sentence* y, double* out) {
    if (!dist || !x || !y || !out)
        return fail_status(BELREV_ERR_INVALID_ARGUMENT, "null pointer argument");
    return guarded([&] { *out = dist->value.conditional(x->value, y->value); });
}

belrev_status belrev_distribution_jeffrey(const belrev_distribution* dist,
                                          const belrev_sentence* sentence, double m,
                                          belrev_distribution** out) {
    if (!dist || !sentence || !out)
        return fail_status(BELREV_ERR_INVALID_ARGUMENT, "null pointer argument");
    return guarded([&] {
        *out = new belrev_distribution{
            belrev::jeffrey_update(dist->value, belrev::SoftEvidence{sentence->value, m})};
    });
}

belrev_status belrev_distribution_virtual(const belrev_distribution* dist,
                                          const belrev_sentence* sentence, double m,
                                          belrev_distribution** out) {
    if (!dist || !sentence || !out)
        return fail_status(BELREV_ERR_INVALID_ARGUMENT, "null pointer argument");
    return guarded([&] {
        *out = new belrev_distribution{
            belrev::virtual_update(dist->value, belrev::SoftEvidence{sentence->value, m})};
    });
}

belrev_status belrev_distribution_likelihood(const belrev_distribution* dist,
                                             const belrev_sentence* sentence,
                                             double ratio, belrev_distribution** out) {
    if (!dist || !sentence || !out)
        return fail_status(BELREV_ERR_INVALID_ARGUMENT, "null pointer argument");
    return guarded([&] {
        *out = new belrev_distribution{
            belrev::likelihood_update(dist->value, sentence->value, ratio)};
    });
}

/* --- belief states -------------------------------------------------------- */

belrev_status belrev_belief_create(const belrev_distribution* prior, belrev_belief** out) {
    if (!prior || !out)
        return fail_status(BELREV_ERR_INVALID_ARGUMENT, "null pointer argument");
    return guarded([&] { *out = new belrev_belief{belrev::BeliefState(prior->value)}; });
}

void belrev_belief_destroy(belrev_belief* belief) { delete belief; }

size_t belrev_belief_time(const belrev_belief* belief) {
    return belief ? belief->value.t() : 0;
}

belrev_status belrev_belief_bel(const belrev_belief* belief, const belrev_sentence* x,
                                double* out) {
    if (!belief || !x || !out)
        return fail_status(BELREV_ERR_INVALID_ARGUMENT, "null pointer argument");
    return guarded([&] { *out = belief->value.bel(x->value); });
}

belrev_status belrev_belief_bel_conditional(const belrev_belief* belief,
                                            const belrev_sentence* x,
                                            const belrev_sentence* y, double* out) {
    if (!belief || !x || !y || !out)
        return fail_status(BELREV_ERR_INVALID_ARGUMENT, "null pointer argument");
    return guarded([&] { *out = belief->value.bel_conditional(x->value, y->value); });
}

belrev_status belrev_belief_conditionalize(const belrev_belief* belief,
                                           const belrev_sentence* a, belrev_belief** out) {
    if (!belief || !a || !out)
        return fail_status(BELREV_ERR_INVALID_ARGUMENT, "null pointer argument");
    return guarded([&] {
        *out = new belrev_belief{belief->value.conditionalize(a->value)};
    });
}

belrev_status belrev_belief_check(const belrev_belief* belief, const belrev_sentence* a,
                                  double m, belrev_precheck* out) {
    if (!belief || !a || !out)
        return fail_status(BELREV_ERR_INVALID_ARGUMENT, "null pointer argument");
    return guarded([&] {
        belrev::PreconditionReport rep = belief->value.check_preconditions(a->value, m);
        out->binary_ok = rep.binary_ok ? 1 : 0;
        out->in_space_ok = rep.in_space_ok ? 1 : 0;
        out->positive_prob_ok = rep.positive_prob_ok ? 1 : 0;
    });
}

belrev_status belrev_capacity(const belrev_distribution* dist, size_t* out_max_length,
                              uint64_t* out_sentence_classes) {
    if (!dist || !out_max_length || !out_sentence_classes)
        return fail_status(BELREV_ERR_INVALID_ARGUMENT, "null pointer argument");
    return guarded([&] {
        belrev::CapacityReport rep = belrev::max_conditioning_chain(dist->value);
        *out_max_length = rep.max_length;
        *out_sentence_classes = rep.sentence_classes;
    });
}

/* --- evidence calculus ----------------------------------------------------- */

belrev_status belrev_truth_from_counts(long positive, long total, int horizon,
                                       belrev_truth_value* out) {
    if (!out) return fail_status(BELREV_ERR_INVALID_ARGUMENT, "null pointer argument");
    return guarded([&] {
        *out = to_c(belrev::nars::truth_from_counts(
            belrev::nars::EvidenceCount(positive, total, horizon)));
    });
}

belrev_status belrev_evidence_weight(double confidence, double* out) {
    if (!out) return fail_status(BELREV_ERR_INVALID_ARGUMENT, "null pointer argument");
    return guarded([&] { *out = belrev::nars::weight(confidence); });
}

belrev_status belrev_nars_induction(belrev_truth_value j1, belrev_truth_value j2,
                                    int horizon, belrev_truth_value* out) {
    if (!out) return fail_status(BELREV_ERR_INVALID_ARGUMENT, "null pointer argument");
    return guarded([&] {
        using belrev::nars::Judgment;
        using belrev::nars::Term;
        Judgment a(Term("M"), Term("P"), from_c(j1), {"a"});
        Judgment b(Term("M"), Term("S"), from_c(j2), {"b"});
        *out = to_c(belrev::nars::induction(a, b, horizon).tv);
    });
}

belrev_status belrev_nars_revision(belrev_truth_value j1, belrev_truth_value j2,
                                   belrev_truth_value* out) {
    if (!out) return fail_status(BELREV_ERR_INVALID_ARGUMENT, "null pointer argument");
    return guarded([&] {
        using belrev::nars::Judgment;
        using belrev::nars::Term;
        Judgment a(Term("S"), Term("P"), from_c(j1), {"a"});
        Judgment b(Term("S"), Term("P"), from_c(j2), {"b"});
        *out = to_c(belrev::nars::revise(a, b).tv);
    });
}

belrev_status belrev_nars_choice(belrev_truth_value j1, belrev_truth_value j2,
                                 belrev_truth_value* out) {
    if (!out) return fail_status(BELREV_ERR_INVALID_ARGUMENT, "null pointer argument");
    return guarded([&] {
        using belrev::nars::Judgment;
        using belrev::nars::Term;
        Judgment a(Term("S"), Term("P"), from_c(j1), {"shared"});
        Judgment b(Term("S"), Term("P"), from_c(j2), {"shared"});
        *out = to_c(belrev::nars::update_choice(a, b).tv);
    });
}

/* --- scenarios -------------------------------------------------------------- */

belrev_status belrev_scenario_parse(const char* text, belrev_scenario** out) {
    if (!text || !out)
        return fail_status(BELREV_ERR_INVALID_ARGUMENT, "null pointer argument");
    return guarded([&] { *out = new belrev_scenario{belrev::parse_scenario(text)}; });
}

void belrev_scenario_destroy(belrev_scenario* scenario) { delete scenario; }

size_t belrev_scenario_directive_count(const belrev_scenario* scenario) {
    return scenario ? scenario->value.directives().size() : 0;
}

belrev_status belrev_scenario_render(const belrev_scenario* scenario, char** out) {
    if (!scenario || !out)
        return fail_status(BELREV_ERR_INVALID_ARGUMENT, "null pointer argument");
    return guarded([&] { *out = copy_string(scenario->value.render()); });
}

belrev_status belrev_scenario_run(const belrev_scenario* scenario, int horizon,
                                  double tolerance, char** out_trace,
                                  int* out_completed) {
    if (!scenario || !out_trace || !out_completed)
        return fail_status(BELREV_ERR_INVALID_ARGUMENT, "null pointer argument");
    return guarded([&] {
        belrev::RunResult res =
            belrev::run_scenario(scenario->value, belrev::RunOptions{horizon, tolerance});
        char* trace = copy_string(belrev::render_trace(res.events));
        *out_trace = trace;
        *out_completed = res.completed ? 1 : 0;
    });
}

belrev_status belrev_scenario_compare(const belrev_scenario* scenario, int horizon,
                                      double tolerance, char** out_report) {
    if (!scenario || !out_report)
        return fail_status(BELREV_ERR_INVALID_ARGUMENT, "null pointer argument");
    return guarded([&] {
        belrev::ComparisonReport rep = belrev::compare_engines(
            scenario->value, belrev::RunOptions{horizon, tolerance});
        *out_report = copy_string(rep.render());
    });
}

} /* extern "C" */
