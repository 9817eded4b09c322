// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "twocell/channel.hpp"

namespace twocell {

/// perm[i] is the sub-channel given to user i.
using Permutation = std::vector<std::size_t>;

/// True iff perm is a bijection on {0, .., perm.size()-1}.
bool is_bijection(std::span<const std::size_t> perm);

/// identity permutation of size n.
Permutation identity_permutation(std::size_t n);

/// inv[n] is the user holding sub-channel n. perm must be a bijection.
Permutation inverse(std::span<const std::size_t> perm);

/// One user/sub-channel bijection per cell.
struct Assignment {
    std::array<Permutation, kNumCells> cells;

    [[nodiscard]] std::size_t size() const noexcept { return cells[0].size(); }

    /// Throws DimensionError unless both cells hold bijections of equal size.
    void validate() const;

    /// The user of the given cell transmitting on sub-channel n.
    [[nodiscard]] std::size_t user_on(std::size_t cell, std::size_t n) const;

    friend bool operator==(const Assignment&, const Assignment&) = default;
};

} // namespace twocell
