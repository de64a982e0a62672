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

#include "core/sentence.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "core/error.hpp"

namespace belrev {

Sentence Sentence::top() {
    static const auto node = std::make_shared<const Node>(Node{Kind::top, {}, {}, {}});
    return Sentence(node);
}

Sentence Sentence::bottom() {
    static const auto node = std::make_shared<const Node>(Node{Kind::bottom, {}, {}, {}});
    return Sentence(node);
}

Sentence Sentence::atom(std::string name) {
    if (!is_valid_atom_name(name) || name == "true" || name == "false")
        fail(ErrorCode::invalid_argument, "invalid atom name '" + name + "'");
    return Sentence(std::make_shared<const Node>(Node{Kind::atom, std::move(name), {}, {}}));
}

const std::string& Sentence::atom_name() const {
    if (node_->kind != Kind::atom)
        fail(ErrorCode::invalid_argument, "atom_name() called on a non-atom sentence");
    return node_->name;
}

Sentence Sentence::lhs() const {
    if (!node_->a) fail(ErrorCode::invalid_argument, "sentence has no operand");
    return Sentence(node_->a);
}

Sentence Sentence::rhs() const {
    if (!node_->b) fail(ErrorCode::invalid_argument, "sentence has no right operand");
    return Sentence(node_->b);
}

Sentence operator!(const Sentence& s) {
    return Sentence(std::make_shared<const Sentence::Node>(
        Sentence::Node{Sentence::Kind::negation, {}, s.node_, {}}));
}

Sentence operator&(const Sentence& a, const Sentence& b) {
    return Sentence(std::make_shared<const Sentence::Node>(
        Sentence::Node{Sentence::Kind::conjunction, {}, a.node_, b.node_}));
}

Sentence operator|(const Sentence& a, const Sentence& b) {
    return Sentence(std::make_shared<const Sentence::Node>(
        Sentence::Node{Sentence::Kind::disjunction, {}, a.node_, b.node_}));
}

bool operator==(const Sentence& a, const Sentence& b) {
    if (a.node_ == b.node_) return true;
    if (a.node_->kind != b.node_->kind) return false;
    switch (a.node_->kind) {
        case Sentence::Kind::top:
        case Sentence::Kind::bottom:
            return true;
        case Sentence::Kind::atom:
            return a.node_->name == b.node_->name;
        case Sentence::Kind::negation:
            return a.lhs() == b.lhs();
        case Sentence::Kind::conjunction:
        case Sentence::Kind::disjunction:
            return a.lhs() == b.lhs() && a.rhs() == b.rhs();
    }
    return false;
}

bool Sentence::evaluate(const Space& space, World world) const {
    switch (node_->kind) {
        case Kind::top:
            return true;
        case Kind::bottom:
            return false;
        case Kind::atom: {
            auto idx = space.atom_index(node_->name);
            if (!idx)
                fail(ErrorCode::unknown_atom,
                     "atom '" + node_->name + "' is not declared in this space");
            return space.holds(world, *idx);
        }
        case Kind::negation:
            return !lhs().evaluate(space, world);
        case Kind::conjunction:
            return lhs().evaluate(space, world) && rhs().evaluate(space, world);
        case Kind::disjunction:
            return lhs().evaluate(space, world) || rhs().evaluate(space, world);
    }
    fail(ErrorCode::invalid_argument, "corrupt sentence node");
}

std::vector<World> Sentence::models(const Space& space) const {
    std::vector<World> out;
    for (World w = 0; w < space.world_count(); ++w)
        if (evaluate(space, w)) out.push_back(w);
    return out;
}

bool Sentence::equivalent(const Sentence& other, const Space& space) const {
    for (World w = 0; w < space.world_count(); ++w)
        if (evaluate(space, w) != other.evaluate(space, w)) return false;
    return true;
}

std::vector<std::string> Sentence::atom_names() const {
    std::set<std::string> names;
    std::vector<const Node*> stack{node_.get()};
    while (!stack.empty()) {
        const Node* n = stack.back();
        stack.pop_back();
        if (n->kind == Kind::atom) names.insert(n->name);
        if (n->a) stack.push_back(n->a.get());
        if (n->b) stack.push_back(n->b.get());
    }
    return {names.begin(), names.end()};
}

namespace {

// Binding strength used to decide where text() needs parentheses.
int precedence(Sentence::Kind kind) {
    switch (kind) {
        case Sentence::Kind::disjunction:
            return 1;
        case Sentence::Kind::conjunction:
            return 2;
        default:
            return 3;  // negation and leaves never need wrapping
    }
}

void render(const Sentence& s, std::string& out) {
    auto child = [&out](const Sentence& c, int parent_prec, bool is_right) {
        int cp = precedence(c.kind());
        // A right-hand child of equal precedence must be wrapped to keep
        // the reparse left-associated.
        bool wrap = cp < parent_prec || (is_right && cp == parent_prec);
        if (wrap) out += '(';
        render(c, out);
        if (wrap) out += ')';
    };
    switch (s.kind()) {
        case Sentence::Kind::top:
            out += "true";
            break;
        case Sentence::Kind::bottom:
            out += "false";
            break;
        case Sentence::Kind::atom:
            out += s.atom_name();
            break;
        case Sentence::Kind::negation: {
            out += '!';
            Sentence operand = s.lhs();
            int cp = precedence(operand.kind());
            bool wrap = cp < precedence(Sentence::Kind::negation);
            if (wrap) out += '(';
            render(operand, out);
            if (wrap) out += ')';
            break;
        }
        case Sentence::Kind::conjunction:
            child(s.lhs(), 2, false);
            out += " & ";
            child(s.rhs(), 2, true);
            break;
        case Sentence::Kind::disjunction:
            child(s.lhs(), 1, false);
            out += " | ";
            child(s.rhs(), 1, true);
            break;
    }
}

}  // namespace

std::string Sentence::text() const {
    std::string out;
    render(*this, out);
    return out;
}

namespace {

class Parser {
  public:
    explicit Parser(std::string_view text) : text_(text) {}

    Sentence run() {
        skip_space();
        Sentence s = parse_disjunction();
        skip_space();
        if (pos_ != text_.size())
            fail(ErrorCode::parse_error,
                 "unexpected character '" + std::string(1, text_[pos_]) + "' at position " +
                     std::to_string(pos_));
        return s;
    }

  private:
    Sentence parse_disjunction() {
        Sentence s = parse_conjunction();
        while (peek() == '|') {
            ++pos_;
            s = s | parse_conjunction();
        }
        return s;
    }

    Sentence parse_conjunction() {
        Sentence s = parse_unary();
        while (peek() == '&') {
            ++pos_;
            s = s & parse_unary();
        }
        return s;
    }

    Sentence parse_unary() {
        if (peek() == '!') {
            ++pos_;
            return !parse_unary();
        }
        return parse_primary();
    }

    Sentence parse_primary() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Sentence s = parse_disjunction();
            if (peek() != ')')
                fail(ErrorCode::parse_error,
                     "missing ')' at position " + std::to_string(pos_));
            ++pos_;
            return s;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size()) {
                unsigned char u = static_cast<unsigned char>(text_[pos_]);
                if (!std::isalnum(u) && text_[pos_] != '_') break;
                ++pos_;
            }
            std::string word(text_.substr(start, pos_ - start));
            if (word == "true") return Sentence::top();
            if (word == "false") return Sentence::bottom();
            return Sentence::atom(std::move(word));
        }
        if (c == '\0')
            fail(ErrorCode::parse_error, "unexpected end of sentence");
        fail(ErrorCode::parse_error,
             "unexpected character '" + std::string(1, c) + "' at position " +
                 std::to_string(pos_));
    }

    // Returns the next significant character without consuming it, or '\0'
    // at end of input.  Consumes any whitespace before it.
    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void skip_space() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Sentence Sentence::parse(std::string_view text) { return Parser(text).run(); }

}  // namespace belrev
