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

#ifndef BELREV_CORE_SPACE_HPP_
#define BELREV_CORE_SPACE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace belrev {

/// Index of a possible world. Worlds are enumerated by binary counting over
/// the ordered atom list with the first atom as the most significant bit, so
/// world 0 is all-false and world 2^n - 1 is all-true.
using World = std::uint32_t;

bool is_valid_atom_name(std::string_view name) noexcept;

/// A finite propositional space: an ordered list of named atoms together with
/// the 2^n possible worlds over them. Immutable after construction; safe to
/// share across threads.
///
/// The engine enumerates worlds exhaustively, so spaces are capped at
/// kMaxAtoms atoms (65,536 worlds).
class Space {
  public:
    static constexpr std::size_t kMaxAtoms = 16;

    explicit Space(std::vector<std::string> atom_names);

    std::size_t atom_count() const noexcept { return atoms_.size(); }
    World world_count() const noexcept {
        return World{1} << atoms_.size();
    }
    const std::vector<std::string>& atoms() const noexcept { return atoms_; }

    std::optional<std::size_t> atom_index(std::string_view name) const noexcept;

    /// Truth of the atom at `atom` in world `world`.
    bool holds(World world, std::size_t atom) const;

    /// Rendering like "p=t q=f", atoms in declared order.
    std::string world_label(World world) const;

  private:
    std::vector<std::string> atoms_;
};

}  // namespace belrev

#endif  // BELREV_CORE_SPACE_HPP_
