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

#include "core/space.hpp"

#include <algorithm>
#include <cctype>

#include "core/error.hpp"

namespace belrev {

bool is_valid_atom_name(std::string_view name) noexcept {
    if (name.empty()) return false;
    if (std::isdigit(static_cast<unsigned char>(name.front()))) return false;
    return std::all_of(name.begin(), name.end(), [](char ch) {
        unsigned char c = static_cast<unsigned char>(ch);
        return std::isalnum(c) || ch == '_';
    });
}

Space::Space(std::vector<std::string> atom_names) : atoms_(std::move(atom_names)) {
    if (atoms_.empty())
        fail(ErrorCode::invalid_argument, "a space needs at least one atom");
    if (atoms_.size() > kMaxAtoms)
        fail(ErrorCode::space_too_large,
             "a space supports at most " + std::to_string(kMaxAtoms) + " atoms, got " +
                 std::to_string(atoms_.size()));
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
        if (!is_valid_atom_name(atoms_[i]))
            fail(ErrorCode::invalid_argument, "invalid atom name '" + atoms_[i] + "'");
        if (atoms_[i] == "true" || atoms_[i] == "false")
            fail(ErrorCode::invalid_argument,
                 "'" + atoms_[i] + "' is reserved and cannot name an atom");
        for (std::size_t j = 0; j < i; ++j)
            if (atoms_[j] == atoms_[i])
                fail(ErrorCode::invalid_argument, "duplicate atom name '" + atoms_[i] + "'");
    }
}

std::optional<std::size_t> Space::atom_index(std::string_view name) const noexcept {
    for (std::size_t i = 0; i < atoms_.size(); ++i)
        if (atoms_[i] == name) return i;
    return std::nullopt;
}

bool Space::holds(World world, std::size_t atom) const {
    if (world >= world_count())
        fail(ErrorCode::invalid_argument, "world index out of range");
    if (atom >= atoms_.size())
        fail(ErrorCode::invalid_argument, "atom index out of range");
    return (world >> (atoms_.size() - 1 - atom)) & 1u;
}

std::string Space::world_label(World world) const {
    std::string out;
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
        if (i) out += ' ';
        out += atoms_[i];
        out += holds(world, i) ? "=t" : "=f";
    }
    return out;
}

}  // namespace belrev
