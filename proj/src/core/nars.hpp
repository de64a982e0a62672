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

#ifndef BELREV_CORE_NARS_HPP
#define BELREV_CORE_NARS_HPP

#include <set>
#include <string>

namespace belrev::nars {

// How much unchecked future evidence weighs against what has been seen;
// confidence from n observations is n/(n+k).
inline constexpr int kDefaultHorizon = 2;

// Two-number certainty: f is the observed success proportion, c how stable
// f is against future evidence.  c = 1 (infinite evidence) is rejected so
// evidence weights stay finite.
struct TruthValue {
    double frequency;
    double confidence;

    TruthValue() : frequency(0.0), confidence(0.0) {}
    TruthValue(double f, double c);
};

// Positive/total observation counts under horizon k.
struct EvidenceCount {
    long positive;
    long total;
    int horizon;

    EvidenceCount(long positive, long total, int horizon);
};

struct Term {
    std::string name;

    explicit Term(std::string n);

    friend bool operator==(const Term& a, const Term& b) { return a.name == b.name; }
    friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }
};

// An inheritance statement "subject is a kind of predicate" with a truth
// value and the set of evidence sources it rests on.  The base decides
// which combination rule applies: sources shared with the other premise
// make the premises correlated.
struct Judgment {
    Term subject;
    Term predicate;
    TruthValue tv;
    std::set<std::string> base;

    Judgment(Term subject, Term predicate, TruthValue tv, std::set<std::string> base);

    bool same_statement(const Judgment& other) const {
        return subject == other.subject && predicate == other.predicate;
    }
};

// f = positive/total, c = total/(total + horizon).
TruthValue truth_from_counts(const EvidenceCount& ec);

// Evidence weight w = c/(1-c); inverse of c = w/(w+1).
double weight(double confidence);

// From "M is a kind of P" and "M is a kind of S", hypothesizes
// "S is a kind of P" with f carried from the first premise and low
// confidence.  Premises must share the subject term.
Judgment induction(const Judgment& j1, const Judgment& j2, int horizon = kDefaultHorizon);

// Weighted pooling of two opinions on the same statement from disjoint
// sources.  Symmetric; the result is more confident than either premise.
Judgment revise(const Judgment& j1, const Judgment& j2);

// For correlated sources (overlapping bases) pooling would double-count,
// so the more confident premise wins outright; ties keep the first.
Judgment update_choice(const Judgment& j1, const Judgment& j2);

enum class CombineRoute { revision, choice };

struct CombineResult {
    Judgment judgment;
    CombineRoute route;
};

// Dispatches on the evidential bases: disjoint premises are revised,
// overlapping ones resolved by choice.
CombineResult combine(const Judgment& j1, const Judgment& j2);

}  // namespace belrev::nars

#endif  // BELREV_CORE_NARS_HPP
