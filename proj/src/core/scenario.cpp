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

#include "core/scenario.hpp"

#include <charconv>
#include <cmath>
#include <map>
#include <memory>

#include "core/error.hpp"
#include "core/format.hpp"

namespace belrev {

namespace {

template <class... Ts>
struct Overload : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overload(Ts...) -> Overload<Ts...>;

std::string join(const std::vector<std::string>& parts, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

std::string count_noun(std::size_t n, const char* noun) {
    std::string out = std::to_string(n) + " " + noun;
    if (n != 1) out += 's';
    return out;
}

}  // namespace

std::string render_directive(const Directive& d) {
    return std::visit(
        Overload{
            [](const AtomsDirective& a) { return "atoms " + join(a.names, " "); },
            [](const PriorUniformDirective&) { return std::string("prior uniform"); },
            [](const PriorWorldDirective& p) {
                std::string out = "prior world";
                for (const auto& [name, value] : p.assignment)
                    out += " " + name + (value ? "=t" : "=f");
                return out + " weight " + shortest(p.weight);
            },
            [](const ConditionDirective& c) {
                std::string out = "condition " + c.sentence.text();
                if (c.certainty != 1.0) out += " " + shortest(c.certainty);
                return out;
            },
            [](const JeffreyDirective& j) {
                return "jeffrey " + j.sentence.text() + " " + shortest(j.m);
            },
            [](const VirtualDirective& v) {
                return "virtual " + v.sentence.text() + " " + shortest(v.m);
            },
            [](const LikelihoodDirective& l) {
                return "likelihood " + l.sentence.text() + " " + shortest(l.ratio);
            },
            [](const QueryDirective& q) { return "query " + q.sentence.text(); },
            [](const NarsJudgmentDirective& j) {
                std::string out = "nars judgment " + j.id + " " + j.subject + " " +
                                  j.predicate + " " + shortest(j.frequency) + " " +
                                  shortest(j.confidence) + " base";
                for (const std::string& src : j.base) out += " " + src;
                return out;
            },
            [](const NarsInductDirective& n) {
                return "nars induct " + n.premise1 + " " + n.premise2 + " as " + n.result;
            },
            [](const NarsCombineDirective& n) {
                return "nars combine " + n.premise1 + " " + n.premise2 + " as " + n.result;
            },
            [](const NarsShowDirective& n) { return "nars show " + n.id; },
        },
        d);
}

std::string Scenario::render() const {
    std::string out;
    for (const Directive& d : directives_) {
        out += render_directive(d);
        out += '\n';
    }
    return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

[[noreturn]] void parse_fail(std::size_t line, const std::string& msg) {
    fail(ErrorCode::parse_error, "line " + std::to_string(line) + ": " + msg);
}

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
}

bool read_double(const std::string& token, double& out) {
    const char* begin = token.data();
    const char* end = begin + token.size();
    auto res = std::from_chars(begin, end, out);
    return res.ec == std::errc{} && res.ptr == end && std::isfinite(out);
}

struct ParseState {
    std::vector<std::string> atoms;
    std::shared_ptr<const Space> space;
    bool prior_uniform = false;
    bool prior_worlds = false;
    std::vector<bool> world_listed;
    bool any_positive_weight = false;
    std::size_t last_prior_line = 0;
    bool prior_in_use = false;
    std::set<std::string> judgment_ids;

    bool has_atoms() const { return !atoms.empty(); }
    bool has_prior() const { return prior_uniform || prior_worlds; }
};

Sentence parse_sentence_token(std::size_t line, const std::string& text) {
    try {
        return Sentence::parse(text);
    } catch (const Error& e) {
        parse_fail(line, std::string("bad sentence '") + text + "': " + e.what());
    }
}

void require_known_atoms(std::size_t line, const ParseState& st, const Sentence& s) {
    for (const std::string& name : s.atom_names())
        if (!st.space->atom_index(name))
            parse_fail(line, "atom '" + name + "' is not declared");
}

void require_usable(std::size_t line, ParseState& st, const std::string& what) {
    if (!st.has_atoms()) parse_fail(line, "no atoms declared before '" + what + "'");
    if (!st.has_prior()) parse_fail(line, "no prior specified before '" + what + "'");
    if (st.prior_worlds && !st.prior_in_use && !st.any_positive_weight)
        parse_fail(line, "declared prior weights are all zero");
    st.prior_in_use = true;
}

double read_unit_interval(std::size_t line, const std::string& token, const char* what) {
    double v;
    if (!read_double(token, v)) parse_fail(line, std::string("expected a number for ") + what);
    if (v < 0.0 || v > 1.0)
        parse_fail(line, std::string(what) + " must lie in [0, 1], got " + token);
    return v;
}

// Directive-specific parsers.  `tokens` includes the keyword(s).

Directive parse_atoms(std::size_t line, ParseState& st, const std::vector<std::string>& tokens) {
    if (st.has_atoms()) parse_fail(line, "atoms are already declared");
    if (tokens.size() < 2) parse_fail(line, "atoms needs at least one name");
    std::vector<std::string> names(tokens.begin() + 1, tokens.end());
    try {
        st.space = std::make_shared<const Space>(names);
    } catch (const Error& e) {
        parse_fail(line, e.what());
    }
    st.atoms = names;
    st.world_listed.assign(st.space->world_count(), false);
    return AtomsDirective{std::move(names)};
}

Directive parse_prior(std::size_t line, ParseState& st, const std::vector<std::string>& tokens) {
    if (tokens.size() < 2) parse_fail(line, "prior needs 'uniform' or 'world ...'");
    if (!st.has_atoms()) parse_fail(line, "no atoms declared before 'prior'");
    if (st.prior_in_use) parse_fail(line, "the prior is already in use and cannot change");
    if (tokens[1] == "uniform") {
        if (tokens.size() != 2) parse_fail(line, "prior uniform takes no arguments");
        if (st.has_prior()) parse_fail(line, "the prior is already declared");
        st.prior_uniform = true;
        st.last_prior_line = line;
        return PriorUniformDirective{};
    }
    if (tokens[1] != "world")
        parse_fail(line, "prior needs 'uniform' or 'world ...', got '" + tokens[1] + "'");
    if (st.prior_uniform) parse_fail(line, "the prior is already declared as uniform");

    std::vector<std::optional<bool>> values(st.atoms.size());
    std::size_t i = 2;
    for (; i < tokens.size() && tokens[i] != "weight"; ++i) {
        const std::string& tok = tokens[i];
        std::size_t eq = tok.find('=');
        if (eq == std::string::npos)
            parse_fail(line, "expected <atom>=<t|f>, got '" + tok + "'");
        std::string name = tok.substr(0, eq);
        std::string value = tok.substr(eq + 1);
        auto idx = st.space->atom_index(name);
        if (!idx) parse_fail(line, "atom '" + name + "' is not declared");
        if (value != "t" && value != "f")
            parse_fail(line, "atom value must be t or f, got '" + value + "'");
        if (values[*idx].has_value()) parse_fail(line, "atom '" + name + "' assigned twice");
        values[*idx] = (value == "t");
    }
    if (i == tokens.size()) parse_fail(line, "missing 'weight' in prior world line");
    if (i + 2 != tokens.size()) parse_fail(line, "expected exactly one number after 'weight'");
    double weight;
    if (!read_double(tokens[i + 1], weight) || weight < 0.0)
        parse_fail(line, "weight must be a non-negative number, got '" + tokens[i + 1] + "'");

    PriorWorldDirective dir;
    World world = 0;
    for (std::size_t a = 0; a < st.atoms.size(); ++a) {
        if (!values[a].has_value())
            parse_fail(line, "atom '" + st.atoms[a] + "' has no value in this world");
        dir.assignment.emplace_back(st.atoms[a], *values[a]);
        if (*values[a]) world |= World{1} << (st.atoms.size() - 1 - a);
    }
    if (st.world_listed[world]) parse_fail(line, "this world already has a weight");
    st.world_listed[world] = true;
    dir.weight = weight;
    if (weight > 0.0) st.any_positive_weight = true;
    st.prior_worlds = true;
    st.last_prior_line = line;
    return dir;
}

// For directives ending in "<sentence> <number>", the final token is the
// number and everything before it is sentence text.  Atoms cannot start
// with a digit, so a trailing number is never part of the sentence.
std::pair<std::string, std::string> split_sentence_number(
    std::size_t line, const std::vector<std::string>& tokens, const char* what) {
    if (tokens.size() < 3)
        parse_fail(line, std::string(what) + " needs a sentence and a number");
    std::vector<std::string> sentence(tokens.begin() + 1, tokens.end() - 1);
    return {join(sentence, " "), tokens.back()};
}

Directive parse_condition(std::size_t line, ParseState& st,
                          const std::vector<std::string>& tokens) {
    require_usable(line, st, "condition");
    std::string sentence_text;
    double certainty = 1.0;
    double maybe_number;
    if (tokens.size() >= 3 && read_double(tokens.back(), maybe_number)) {
        if (maybe_number < 0.0 || maybe_number > 1.0)
            parse_fail(line, "certainty must lie in [0, 1], got " + tokens.back());
        certainty = maybe_number;
        sentence_text = join({tokens.begin() + 1, tokens.end() - 1}, " ");
    } else {
        if (tokens.size() < 2) parse_fail(line, "condition needs a sentence");
        sentence_text = join({tokens.begin() + 1, tokens.end()}, " ");
    }
    // Atom names are deliberately not checked here: whether the sentence
    // lies inside the declared space is part of the runtime screening.
    Sentence s = parse_sentence_token(line, sentence_text);
    return ConditionDirective{std::move(s), certainty};
}

Directive parse_soft(std::size_t line, ParseState& st, const std::vector<std::string>& tokens,
                     const char* keyword) {
    require_usable(line, st, keyword);
    auto [sentence_text, number_text] = split_sentence_number(line, tokens, keyword);
    Sentence s = parse_sentence_token(line, sentence_text);
    require_known_atoms(line, st, s);
    if (std::string(keyword) == "likelihood") {
        double ratio;
        if (!read_double(number_text, ratio) || ratio <= 0.0)
            parse_fail(line, "likelihood ratio must be a positive number, got '" +
                                 number_text + "'");
        return LikelihoodDirective{std::move(s), ratio};
    }
    double m = read_unit_interval(line, number_text, "the target probability");
    if (std::string(keyword) == "jeffrey") return JeffreyDirective{std::move(s), m};
    return VirtualDirective{std::move(s), m};
}

Directive parse_query(std::size_t line, ParseState& st, const std::vector<std::string>& tokens) {
    require_usable(line, st, "query");
    if (tokens.size() < 2) parse_fail(line, "query needs a sentence");
    Sentence s = parse_sentence_token(line, join({tokens.begin() + 1, tokens.end()}, " "));
    require_known_atoms(line, st, s);
    return QueryDirective{std::move(s)};
}

Directive parse_nars(std::size_t line, ParseState& st, const std::vector<std::string>& tokens) {
    if (tokens.size() < 2) parse_fail(line, "nars needs a subcommand");
    const std::string& sub = tokens[1];
    if (sub == "judgment") {
        if (tokens.size() < 9 || tokens[7] != "base")
            parse_fail(line,
                       "expected: nars judgment <id> <subject> <predicate> <f> <c> base "
                       "<source>...");
        NarsJudgmentDirective dir;
        dir.id = tokens[2];
        dir.subject = tokens[3];
        dir.predicate = tokens[4];
        dir.frequency = read_unit_interval(line, tokens[5], "the frequency");
        double c;
        if (!read_double(tokens[6], c)) parse_fail(line, "expected a number for the confidence");
        if (c < 0.0 || c >= 1.0)
            parse_fail(line, "confidence must lie in [0, 1), got " + tokens[6]);
        dir.confidence = c;
        dir.base.insert(tokens.begin() + 8, tokens.end());
        if (st.judgment_ids.count(dir.id))
            parse_fail(line, "judgment id '" + dir.id + "' is already defined");
        st.judgment_ids.insert(dir.id);
        return dir;
    }
    if (sub == "induct" || sub == "combine") {
        if (tokens.size() != 6 || tokens[4] != "as")
            parse_fail(line, "expected: nars " + sub + " <id> <id> as <id>");
        for (std::size_t i : {std::size_t{2}, std::size_t{3}})
            if (!st.judgment_ids.count(tokens[i]))
                parse_fail(line, "judgment id '" + tokens[i] + "' is not defined");
        if (st.judgment_ids.count(tokens[5]))
            parse_fail(line, "judgment id '" + tokens[5] + "' is already defined");
        st.judgment_ids.insert(tokens[5]);
        if (sub == "induct") return NarsInductDirective{tokens[2], tokens[3], tokens[5]};
        return NarsCombineDirective{tokens[2], tokens[3], tokens[5]};
    }
    if (sub == "show") {
        if (tokens.size() != 3) parse_fail(line, "expected: nars show <id>");
        if (!st.judgment_ids.count(tokens[2]))
            parse_fail(line, "judgment id '" + tokens[2] + "' is not defined");
        return NarsShowDirective{tokens[2]};
    }
    parse_fail(line, "unknown nars subcommand '" + sub + "'");
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
    Scenario sc;
    ParseState st;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string line = text.substr(pos, nl == std::string::npos ? nl : nl - pos);
        pos = (nl == std::string::npos) ? text.size() + 1 : nl + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::vector<std::string> tokens = tokenize(line);
        if (tokens.empty()) continue;

        const std::string& kw = tokens[0];
        if (kw == "atoms")
            sc.directives_.push_back(parse_atoms(line_no, st, tokens));
        else if (kw == "prior")
            sc.directives_.push_back(parse_prior(line_no, st, tokens));
        else if (kw == "condition")
            sc.directives_.push_back(parse_condition(line_no, st, tokens));
        else if (kw == "jeffrey" || kw == "virtual" || kw == "likelihood")
            sc.directives_.push_back(parse_soft(line_no, st, tokens, kw.c_str()));
        else if (kw == "query")
            sc.directives_.push_back(parse_query(line_no, st, tokens));
        else if (kw == "nars")
            sc.directives_.push_back(parse_nars(line_no, st, tokens));
        else
            parse_fail(line_no, "unknown directive '" + kw + "'");
    }
    if (st.prior_worlds && !st.prior_in_use && !st.any_positive_weight)
        parse_fail(st.last_prior_line, "declared prior weights are all zero");
    return sc;
}

// ---------------------------------------------------------------------------
// Execution

namespace {

std::string ok_or_fail(bool ok) { return ok ? "ok" : "FAIL"; }

std::string tv_text(const nars::TruthValue& tv) {
    return "<" + fixed6(tv.frequency) + ", " + fixed6(tv.confidence) + ">";
}

std::string judgment_line(const std::string& id, const nars::Judgment& j) {
    std::string out = id + ": " + j.subject.name + " -> " + j.predicate.name + " " +
                      tv_text(j.tv) + " base={";
    bool first = true;
    for (const std::string& src : j.base) {
        if (!first) out += ", ";
        out += src;
        first = false;
    }
    return out + "}";
}

std::string dominance_line(const DominanceReport& rep) {
    return "dominance: prior=" + fixed6(rep.prior_opinion) +
           " target=" + fixed6(rep.target) +
           " posterior=" + fixed6(rep.posterior_opinion) +
           " dominated=" + (rep.dominated ? "yes" : "no");
}

class Runner {
  public:
    Runner(const Scenario& sc, const RunOptions& opts) : sc_(sc), opts_(opts) {
        if (opts_.horizon < 1)
            fail(ErrorCode::invalid_argument, "evidential horizon must be at least 1");
        if (!(opts_.tolerance > 0.0))
            fail(ErrorCode::invalid_argument, "tolerance must be positive");
    }

    RunResult run() {
        RunResult result;
        for (std::size_t i = 0; i < sc_.directives().size(); ++i) {
            const Directive& d = sc_.directives()[i];
            TraceEvent ev;
            ev.step = i + 1;
            ev.directive = render_directive(d);
            bool ok = true;
            try {
                std::visit([this, &ev](const auto& dir) { execute(dir, ev); }, d);
            } catch (const Error& e) {
                ev.notes.push_back(std::string("error: ") + e.what());
                ev.failed = true;
                ok = false;
            }
            result.events.push_back(std::move(ev));
            if (!ok) {
                result.completed = false;
                break;
            }
        }
        return result;
    }

    // Observations for the engine comparison.
    struct SoftSeen {
        std::string sentence;
        double prior = 0.0, target = 0.0, posterior = 0.0;
    };
    struct RevisionSeen {
        std::string statement;
        nars::TruthValue prior, incoming, revised;
    };
    std::optional<SoftSeen> first_soft;
    std::optional<RevisionSeen> first_revision;

  private:
    void execute(const AtomsDirective& d, TraceEvent& ev) {
        space_ = std::make_shared<const Space>(d.names);
        ev.notes.push_back("space: " + count_noun(space_->atom_count(), "atom") + ", " +
                           count_noun(space_->world_count(), "world"));
    }

    void execute(const PriorUniformDirective&, TraceEvent&) { prior_uniform_ = true; }

    void execute(const PriorWorldDirective& d, TraceEvent&) {
        if (raw_weights_.empty()) raw_weights_.assign(space_->world_count(), 0.0);
        World world = 0;
        for (std::size_t a = 0; a < d.assignment.size(); ++a)
            if (d.assignment[a].second)
                world |= World{1} << (d.assignment.size() - 1 - a);
        raw_weights_[world] = d.weight;
    }

    void execute(const ConditionDirective& d, TraceEvent& ev) {
        ensure_state();
        PreconditionReport rep = state_->check_preconditions(d.sentence, d.certainty);
        ev.precheck = rep;
        ev.notes.push_back("preconditions: binary=" + ok_or_fail(rep.binary_ok) +
                           " in_space=" + ok_or_fail(rep.in_space_ok) +
                           " positive_prob=" + ok_or_fail(rep.positive_prob_ok));
        if (!rep.binary_ok) ev.notes.push_back("  binary: " + rep.binary_reason);
        if (!rep.in_space_ok) ev.notes.push_back("  in_space: " + rep.in_space_reason);
        if (!rep.positive_prob_ok)
            ev.notes.push_back("  positive_prob: " + rep.positive_prob_reason);
        if (!rep.admissible()) {
            ev.notes.push_back("refused: evidence not absorbed; state unchanged");
            ev.refused = true;
            return;
        }
        Sentence claim = (d.certainty == 0.0) ? !d.sentence : d.sentence;
        state_ = state_->conditionalize(claim);
        if (d.certainty == 0.0) ev.notes.push_back("accepted: " + claim.text());
        ev.notes.push_back("conditioned: t=" + std::to_string(state_->t()));
    }

    void execute(const JeffreyDirective& d, TraceEvent& ev) {
        ensure_state();
        Distribution cur = state_->posterior();
        SoftEvidence evd{d.sentence, d.m};
        DominanceReport rep = dominance_probe(cur, evd, opts_.tolerance);
        Distribution next = jeffrey_update(cur, evd);
        finish_soft(ev, d.sentence, rep, std::move(next));
    }

    void execute(const VirtualDirective& d, TraceEvent& ev) {
        ensure_state();
        Distribution cur = state_->posterior();
        SoftEvidence evd{d.sentence, d.m};
        Distribution next = virtual_update(cur, evd);
        DominanceReport rep = probe_of(cur, next, evd);
        finish_soft(ev, d.sentence, rep, std::move(next));
    }

    void execute(const LikelihoodDirective& d, TraceEvent& ev) {
        ensure_state();
        Distribution cur = state_->posterior();
        double m = likelihood_target(cur, d.sentence, d.ratio);
        ev.notes.push_back("target: m=" + fixed6(m));
        SoftEvidence evd{d.sentence, m};
        Distribution next = virtual_update(cur, evd);
        DominanceReport rep = probe_of(cur, next, evd);
        finish_soft(ev, d.sentence, rep, std::move(next));
    }

    void execute(const QueryDirective& d, TraceEvent& ev) {
        ensure_state();
        double v = state_->bel(d.sentence);
        ev.value = v;
        ev.notes.push_back("bel(" + d.sentence.text() + ") = " + fixed6(v));
    }

    void execute(const NarsJudgmentDirective& d, TraceEvent& ev) {
        nars::Judgment j(nars::Term(d.subject), nars::Term(d.predicate),
                         nars::TruthValue(d.frequency, d.confidence), d.base);
        note_judgment(ev, d.id, store(d.id, std::move(j)));
    }

    void execute(const NarsInductDirective& d, TraceEvent& ev) {
        nars::Judgment j = nars::induction(at(d.premise1), at(d.premise2), opts_.horizon);
        note_judgment(ev, d.result, store(d.result, std::move(j)));
    }

    void execute(const NarsCombineDirective& d, TraceEvent& ev) {
        const nars::Judgment& j1 = at(d.premise1);
        const nars::Judgment& j2 = at(d.premise2);
        nars::CombineResult res = nars::combine(j1, j2);
        if (res.route == nars::CombineRoute::revision && !first_revision)
            first_revision = RevisionSeen{j1.subject.name + " -> " + j1.predicate.name,
                                          j1.tv, j2.tv, res.judgment.tv};
        const nars::Judgment& stored = store(d.result, std::move(res.judgment));
        note_judgment(ev, d.result, stored);
        ev.notes.back() +=
            (res.route == nars::CombineRoute::revision) ? " (revision)" : " (choice)";
    }

    void execute(const NarsShowDirective& d, TraceEvent& ev) {
        note_judgment(ev, d.id, at(d.id));
    }

    // Builds the belief state on first probabilistic use; the parser has
    // already guaranteed a usable prior exists by then.
    void ensure_state() {
        if (state_) return;
        Distribution prior = prior_uniform_
                                 ? Distribution::uniform(space_)
                                 : Distribution::from_weights(space_, raw_weights_);
        state_.emplace(std::move(prior));
    }

    DominanceReport probe_of(const Distribution& before, const Distribution& after,
                             const SoftEvidence& evd) const {
        DominanceReport rep;
        rep.prior_opinion = before.prob(evd.a);
        rep.target = evd.m;
        rep.posterior_opinion = after.prob(evd.a);
        rep.dominated = std::abs(rep.posterior_opinion - rep.target) < opts_.tolerance;
        return rep;
    }

    // Soft evidence replaces the belief state wholesale: the updated
    // distribution becomes a fresh prior and the evidence log restarts,
    // because the update is not a conditionalization that could extend it.
    void finish_soft(TraceEvent& ev, const Sentence& sentence, const DominanceReport& rep,
                     Distribution next) {
        ev.dominance = rep;
        ev.value = rep.posterior_opinion;
        ev.notes.push_back(dominance_line(rep));
        state_.emplace(std::move(next));
        ev.notes.push_back("state: rebuilt on the updated distribution, t=0");
        if (!first_soft)
            first_soft = SoftSeen{sentence.text(), rep.prior_opinion, rep.target,
                                  rep.posterior_opinion};
    }

    const nars::Judgment& at(const std::string& id) const { return judgments_.at(id); }

    const nars::Judgment& store(const std::string& id, nars::Judgment j) {
        return judgments_.emplace(id, std::move(j)).first->second;
    }

    void note_judgment(TraceEvent& ev, const std::string& id, const nars::Judgment& j) {
        ev.truth = j.tv;
        ev.judgment_id = id;
        ev.notes.push_back(judgment_line(id, j));
    }

    const Scenario& sc_;
    RunOptions opts_;
    std::shared_ptr<const Space> space_;
    bool prior_uniform_ = false;
    std::vector<double> raw_weights_;
    std::optional<BeliefState> state_;
    std::map<std::string, nars::Judgment> judgments_;
};

}  // namespace

RunResult run_scenario(const Scenario& sc, const RunOptions& opts) {
    return Runner(sc, opts).run();
}

std::string render_trace(const std::vector<TraceEvent>& events) {
    std::string out;
    for (const TraceEvent& ev : events) {
        out += "[" + std::to_string(ev.step) + "] " + ev.directive + "\n";
        for (const std::string& note : ev.notes) {
            out += "    ";
            out += note;
            out += '\n';
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Engine comparison

std::string ComparisonReport::render() const {
    std::string out;
    out += "== updating vs revision ==\n";
    out += "soft evidence: '" + soft_sentence + "' target " + fixed6(incoming_m) + "\n";
    out += "  probabilistic engine: prior opinion " + fixed6(prior_opinion) +
           ", posterior " + fixed6(posterior_opinion) + " (dominated by the target)\n";
    out += "  pooling engine on '" + nars_statement + "':\n";
    out += "    prior    " + tv_text(nars_prior) + "\n";
    out += "    incoming " + tv_text(nars_incoming) + "\n";
    out += "    revised  " + tv_text(nars_revised) +
           " (frequency between premises, confidence above both)\n";
    out += "== implicit condition probe ==\n";
    out += "backstory A: " + backstory_a + "\n";
    out += "backstory B: " + backstory_b + "\n";
    out += std::string("probabilistic traces byte-identical: ") +
           (traces_identical ? "yes" : "no") + "\n";
    return out;
}

ComparisonReport compare_engines(const Scenario& sc, const RunOptions& opts) {
    Runner runner(sc, opts);
    RunResult res = runner.run();
    if (!res.completed)
        fail(ErrorCode::unusable_scenario,
             "scenario fails to execute, so the engines cannot be compared");
    if (!runner.first_soft)
        fail(ErrorCode::unusable_scenario,
             "scenario stages no soft evidence, so there is no conflict to compare");
    if (!runner.first_revision)
        fail(ErrorCode::unusable_scenario,
             "scenario never pools disjoint sources, so there is no revision to compare");

    ComparisonReport rep;
    rep.soft_sentence = runner.first_soft->sentence;
    rep.prior_opinion = runner.first_soft->prior;
    rep.incoming_m = runner.first_soft->target;
    rep.posterior_opinion = runner.first_soft->posterior;
    rep.nars_statement = runner.first_revision->statement;
    rep.nars_prior = runner.first_revision->prior;
    rep.nars_incoming = runner.first_revision->incoming;
    rep.nars_revised = runner.first_revision->revised;
    rep.backstory_a = "frequencies observed in a long census of the domain";
    rep.backstory_b = "subjective estimates elicited from one expert";

    // Two sources that differ only in where the prior is said to come
    // from; the probabilistic side of the trace cannot tell them apart.
    std::string body = sc.render();
    auto probabilistic_trace = [&](const std::string& backstory) {
        Scenario variant = parse_scenario("# backstory: " + backstory + "\n" + body);
        RunResult run = run_scenario(variant, opts);
        std::vector<TraceEvent> kept;
        for (TraceEvent& ev : run.events)
            if (!ev.directive.starts_with("nars ")) kept.push_back(std::move(ev));
        return render_trace(kept);
    };
    rep.traces_identical =
        probabilistic_trace(rep.backstory_a) == probabilistic_trace(rep.backstory_b);
    return rep;
}

}  // namespace belrev
