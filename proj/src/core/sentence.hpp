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

#ifndef BELREV_CORE_SENTENCE_HPP
#define BELREV_CORE_SENTENCE_HPP

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "core/space.hpp"

namespace belrev {

// Immutable propositional sentence over named atoms.  Sentences are built
// without reference to a Space; atom names are resolved only when a sentence
// is evaluated against one, so a sentence may mention atoms a given space
// does not know about.
class Sentence {
  public:
    enum class Kind { top, bottom, atom, negation, conjunction, disjunction };

    static Sentence top();
    static Sentence bottom();
    static Sentence atom(std::string name);

    // Parses the concrete syntax: `!` binds tighter than `&`, which binds
    // tighter than `|`; both binary operators associate left.  `true` and
    // `false` are the constants.  Throws parse_error with a position.
    static Sentence parse(std::string_view text);

    Kind kind() const noexcept { return node_->kind; }
    // Valid only for kind()==atom.
    const std::string& atom_name() const;
    // lhs() is the negation operand or the left operand of a binary node;
    // rhs() is the right operand of a binary node.
    Sentence lhs() const;
    Sentence rhs() const;

    // Truth of this sentence at one world.  Throws unknown_atom if the
    // sentence mentions an atom the space does not declare.
    bool evaluate(const Space& space, World world) const;

    // All worlds of the space where the sentence holds, in ascending order.
    std::vector<World> models(const Space& space) const;

    bool equivalent(const Sentence& other, const Space& space) const;

    // Every atom name the sentence mentions, sorted, deduplicated.
    std::vector<std::string> atom_names() const;

    // Concrete-syntax text with the fewest parentheses that reparse to an
    // equal sentence.
    std::string text() const;

    // Structural equality (same tree, not logical equivalence).
    friend bool operator==(const Sentence& a, const Sentence& b);
    friend bool operator!=(const Sentence& a, const Sentence& b) { return !(a == b); }

    friend Sentence operator!(const Sentence& s);
    friend Sentence operator&(const Sentence& a, const Sentence& b);
    friend Sentence operator|(const Sentence& a, const Sentence& b);

  private:
    struct Node {
        Kind kind;
        std::string name;               // atom
        std::shared_ptr<const Node> a;  // negation operand, binary lhs
        std::shared_ptr<const Node> b;  // binary rhs
    };

    explicit Sentence(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

}  // namespace belrev

#endif  // BELREV_CORE_SENTENCE_HPP
