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

#include <cmath>
#include <limits>
#include <random>
#include <set>

#include "doctest.h"

#include "core/error.hpp"
#include "core/nars.hpp"
#include "support.hpp"

using namespace belrev::nars;
using belrev::ErrorCode;
using support::error_code_of;

namespace {

Judgment make(const char* s, const char* p, double f, double c,
              std::set<std::string> base) {
    return Judgment(Term(s), Term(p), TruthValue(f, c), std::move(base));
}

}  // namespace

TEST_CASE("truth values come from positive and total counts") {
    TruthValue tv = truth_from_counts(EvidenceCount(9, 10, 2));
    CHECK(tv.frequency == 0.9);
    CHECK(tv.confidence == doctest::Approx(10.0 / 12.0).epsilon(1e-15));

    TruthValue one = truth_from_counts(EvidenceCount(1, 1, 2));
    CHECK(one.frequency == 1.0);
    CHECK(one.confidence == doctest::Approx(1.0 / 3.0).epsilon(1e-15));

    TruthValue none = truth_from_counts(EvidenceCount(0, 2, 2));
    CHECK(none.frequency == 0.0);
    CHECK(none.confidence == 0.5);

    // a wider horizon discounts the same observations harder
    CHECK(truth_from_counts(EvidenceCount(9, 10, 5)).confidence ==
          doctest::Approx(10.0 / 15.0).epsilon(1e-15));

    CHECK(error_code_of([] { EvidenceCount(0, 0, 2); }) ==
          ErrorCode::undefined_frequency);
    CHECK(error_code_of([] { EvidenceCount(-1, 2, 2); }) ==
          ErrorCode::invalid_argument);
    CHECK(error_code_of([] { EvidenceCount(3, 2, 2); }) ==
          ErrorCode::invalid_argument);
    CHECK(error_code_of([] { EvidenceCount(1, 2, 0); }) ==
          ErrorCode::invalid_argument);
}

TEST_CASE("truth values are validated on construction") {
    CHECK_NOTHROW(TruthValue(0.0, 0.0));
    CHECK_NOTHROW(TruthValue(1.0, 0.999999));
    CHECK(error_code_of([] { TruthValue(1.2, 0.5); }) == ErrorCode::invalid_argument);
    CHECK(error_code_of([] { TruthValue(-0.1, 0.5); }) == ErrorCode::invalid_argument);
    CHECK(error_code_of([] {
              TruthValue(std::numeric_limits<double>::quiet_NaN(), 0.5);
          }) == ErrorCode::invalid_argument);
    CHECK(error_code_of([] { TruthValue(0.5, -0.1); }) == ErrorCode::invalid_argument);
    CHECK(error_code_of([] { TruthValue(0.5, 1.0); }) == ErrorCode::absolute_confidence);
    CHECK(error_code_of([] { TruthValue(0.5, 1.5); }) == ErrorCode::absolute_confidence);

    CHECK(error_code_of([] { Term(""); }) == ErrorCode::invalid_argument);
    CHECK(error_code_of([] {
              Judgment(Term("a"), Term("b"), TruthValue(1, 0.5), {});
          }) == ErrorCode::invalid_argument);
}

TEST_CASE("evidence weight is confidence odds") {
    CHECK(weight(0.0) == 0.0);
    CHECK(weight(0.5) == 1.0);
    CHECK(weight(0.81 / 2.81) == doctest::Approx(0.405).epsilon(1e-12));
    CHECK(weight(0.81 / 1.81) == doctest::Approx(0.81).epsilon(1e-12));
    CHECK(error_code_of([] { weight(1.0); }) == ErrorCode::absolute_confidence);
    CHECK(error_code_of([] { weight(-0.5); }) == ErrorCode::invalid_argument);
    CHECK(error_code_of([] {
              weight(std::numeric_limits<double>::infinity());
          }) == ErrorCode::invalid_argument);

    // weight and confidence invert each other
    std::mt19937 rng(101);
    std::uniform_real_distribution<double> wdist(0.0, 20.0);
    for (int i = 0; i < 100; ++i) {
        double w = wdist(rng);
        double c = w / (w + 1.0);
        CHECK(weight(c) == doctest::Approx(w).epsilon(1e-9));
    }
}

TEST_CASE("induction hypothesizes a general statement from one instance") {
    // a dove flies and a dove is a bird, so maybe birds fly
    Judgment flies = make("dove", "flyer", 0.9, 0.9, {"dove_obs"});
    Judgment is_bird = make("dove", "bird", 1.0, 0.9, {"dove_obs"});
    Judgment hyp = induction(flies, is_bird);

    CHECK(hyp.subject.name == "bird");
    CHECK(hyp.predicate.name == "flyer");
    CHECK(hyp.tv.frequency == 0.9);
    CHECK(hyp.tv.confidence == doctest::Approx(0.81 / 2.81).epsilon(1e-12));
    CHECK(hyp.base == std::set<std::string>{"dove_obs"});

    // the counterexample instance: a penguin is a bird but does not fly
    Judgment no_fly = make("penguin", "flyer", 0.0, 0.9, {"penguin_obs"});
    Judgment penguin_bird = make("penguin", "bird", 1.0, 0.9, {"penguin_obs"});
    Judgment counter = induction(no_fly, penguin_bird);
    CHECK(counter.tv.frequency == 0.0);
    CHECK(counter.tv.confidence == doctest::Approx(0.81 / 2.81).epsilon(1e-12));

    // weaker premises pool less evidence
    Judgment faint = induction(make("swan", "flyer", 1.0, 0.5, {"s"}),
                               make("swan", "bird", 0.8, 0.5, {"t"}));
    CHECK(faint.tv.frequency == 1.0);
    CHECK(faint.tv.confidence == doctest::Approx(0.2 / 2.2).epsilon(1e-12));
    CHECK(faint.base == std::set<std::string>{"s", "t"});

    // the horizon scales the discount
    Judgment wide = induction(flies, is_bird, 5);
    CHECK(wide.tv.confidence == doctest::Approx(0.81 / 5.81).epsilon(1e-12));

    CHECK(error_code_of([&] { induction(flies, penguin_bird); }) ==
          ErrorCode::rule_inapplicable);
    CHECK(error_code_of([&] { induction(flies, is_bird, 0); }) ==
          ErrorCode::invalid_argument);
}

TEST_CASE("induction keeps frequency and never reaches one observation's confidence") {
    std::mt19937 rng(102);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> conf(0.0, 0.999);
    for (int i = 0; i < 500; ++i) {
        Judgment j1 = make("m", "p", unit(rng), conf(rng), {"a"});
        Judgment j2 = make("m", "s", unit(rng), conf(rng), {"b"});
        Judgment hyp = induction(j1, j2);
        CHECK(hyp.tv.frequency == j1.tv.frequency);
        // below the confidence of a single full observation, 1/(1+k)
        CHECK(hyp.tv.confidence < 1.0 / 3.0);
    }
}

TEST_CASE("revision pools disjoint evidence exactly") {
    double c_one = 0.81 / 2.81;
    Judgment from_dove = make("bird", "flyer", 0.9, c_one, {"dove_obs"});
    Judgment from_swan = make("bird", "flyer", 0.9, c_one, {"swan_obs"});

    Judgment both = revise(from_dove, from_swan);
    CHECK(both.tv.frequency == doctest::Approx(0.9).epsilon(1e-12));
    CHECK(both.tv.confidence == doctest::Approx(0.81 / 1.81).epsilon(1e-12));
    CHECK(both.base == std::set<std::string>{"dove_obs", "swan_obs"});

    Judgment from_penguin = make("bird", "flyer", 0.0, c_one, {"penguin_obs"});
    Judgment all = revise(both, from_penguin);
    CHECK(all.tv.frequency == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(all.tv.confidence == doctest::Approx(1.215 / 2.215).epsilon(1e-12));
    CHECK(all.base ==
          std::set<std::string>{"dove_obs", "penguin_obs", "swan_obs"});
}

TEST_CASE("revision is symmetric and guarded") {
    Judgment a = make("bird", "flyer", 0.9, 0.4, {"x"});
    Judgment b = make("bird", "flyer", 0.2, 0.7, {"y"});
    Judgment ab = revise(a, b);
    Judgment ba = revise(b, a);
    CHECK(ab.tv.frequency == ba.tv.frequency);
    CHECK(ab.tv.confidence == ba.tv.confidence);
    CHECK(ab.base == ba.base);

    Judgment other = make("bird", "swimmer", 0.9, 0.4, {"y"});
    CHECK(error_code_of([&] { revise(a, other); }) == ErrorCode::not_combinable);

    Judgment shared = make("bird", "flyer", 0.2, 0.7, {"x", "z"});
    CHECK(error_code_of([&] { revise(a, shared); }) ==
          ErrorCode::correlative_sources);

    Judgment empty1 = make("bird", "flyer", 0.9, 0.0, {"x"});
    Judgment empty2 = make("bird", "flyer", 0.2, 0.0, {"y"});
    CHECK(error_code_of([&] { revise(empty1, empty2); }) == ErrorCode::no_evidence);

    // one empty premise is fine: the informed one decides the frequency
    Judgment mixed = revise(a, empty2);
    CHECK(mixed.tv.frequency == doctest::Approx(0.9).epsilon(1e-12));
    CHECK(mixed.tv.confidence == doctest::Approx(0.4).epsilon(1e-12));
}

TEST_CASE("revision grows confidence and pulls frequency between the premises") {
    std::mt19937 rng(103);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> conf(0.05, 0.95);
    for (int i = 0; i < 500; ++i) {
        Judgment j1 = make("s", "p", unit(rng), conf(rng), {"a"});
        Judgment j2 = make("s", "p", unit(rng), conf(rng), {"b"});
        Judgment r = revise(j1, j2);

        CHECK(r.tv.confidence > j1.tv.confidence);
        CHECK(r.tv.confidence > j2.tv.confidence);

        double lo = std::min(j1.tv.frequency, j2.tv.frequency);
        double hi = std::max(j1.tv.frequency, j2.tv.frequency);
        CHECK(r.tv.frequency >= lo - 1e-12);
        CHECK(r.tv.frequency <= hi + 1e-12);

        // the more confident premise pulls harder
        const Judgment& strong =
            j1.tv.confidence >= j2.tv.confidence ? j1 : j2;
        const Judgment& weak = &strong == &j1 ? j2 : j1;
        CHECK(std::abs(r.tv.frequency - strong.tv.frequency) <=
              std::abs(r.tv.frequency - weak.tv.frequency) + 1e-12);
    }
}

TEST_CASE("revising judgments built from counts is pooling the counts") {
    for (int k : {1, 2, 5}) {
        for (long n1 = 1; n1 <= 6; ++n1)
            for (long m1 = 0; m1 <= n1; ++m1)
                for (long n2 = 1; n2 <= 6; ++n2)
                    for (long m2 = 0; m2 <= n2; ++m2) {
                        Judgment j1 = Judgment(Term("s"), Term("p"),
                                               truth_from_counts({m1, n1, k}), {"a"});
                        Judgment j2 = Judgment(Term("s"), Term("p"),
                                               truth_from_counts({m2, n2, k}), {"b"});
                        TruthValue pooled =
                            truth_from_counts({m1 + m2, n1 + n2, k});
                        Judgment r = revise(j1, j2);
                        CHECK(r.tv.frequency ==
                              doctest::Approx(pooled.frequency).epsilon(1e-9));
                        CHECK(r.tv.confidence ==
                              doctest::Approx(pooled.confidence).epsilon(1e-9));
                    }
    }
}

TEST_CASE("choice keeps the more confident opinion when sources overlap") {
    Judgment settled = make("bird", "flyer", 0.9, 0.8, {"x", "y"});
    Judgment rumor = make("bird", "flyer", 0.1, 0.3, {"y"});

    Judgment kept = update_choice(settled, rumor);
    CHECK(kept.tv.frequency == 0.9);
    CHECK(kept.tv.confidence == 0.8);
    CHECK(kept.base == std::set<std::string>{"x", "y"});

    Judgment stronger = make("bird", "flyer", 0.1, 0.95, {"y"});
    Judgment replaced = update_choice(settled, stronger);
    CHECK(replaced.tv.frequency == 0.1);
    CHECK(replaced.tv.confidence == 0.95);

    // a tie keeps the first premise
    Judgment tie = make("bird", "flyer", 0.2, 0.8, {"x"});
    Judgment first = update_choice(settled, tie);
    CHECK(first.tv.frequency == 0.9);

    Judgment foreign = make("bird", "flyer", 0.5, 0.5, {"z"});
    CHECK(error_code_of([&] { update_choice(settled, foreign); }) ==
          ErrorCode::disjoint_sources);
    Judgment other = make("bird", "swimmer", 0.5, 0.5, {"x"});
    CHECK(error_code_of([&] { update_choice(settled, other); }) ==
          ErrorCode::not_combinable);
}

TEST_CASE("combine dispatches on whether the bases overlap") {
    Judgment a = make("bird", "flyer", 0.9, 0.4, {"x"});
    Judgment b = make("bird", "flyer", 0.2, 0.7, {"y"});
    CombineResult pooled = combine(a, b);
    CHECK(pooled.route == CombineRoute::revision);
    CHECK(pooled.judgment.tv.confidence > 0.7);

    Judgment c = make("bird", "flyer", 0.2, 0.7, {"x", "z"});
    CombineResult chosen = combine(a, c);
    CHECK(chosen.route == CombineRoute::choice);
    CHECK(chosen.judgment.tv.frequency == 0.2);
    CHECK(chosen.judgment.base == std::set<std::string>{"x", "z"});

    // identical bases: nothing new to pool, the first opinion stands
    Judgment d1 = make("bird", "flyer", 0.9, 0.4, {"x"});
    Judgment d2 = make("bird", "flyer", 0.3, 0.4, {"x"});
    CombineResult same = combine(d1, d2);
    CHECK(same.route == CombineRoute::choice);
    CHECK(same.judgment.tv.frequency == 0.9);
    CHECK(same.judgment.tv.confidence == 0.4);

    Judgment off = make("fish", "flyer", 0.9, 0.4, {"y"});
    CHECK(error_code_of([&] { combine(a, off); }) == ErrorCode::not_combinable);
}
