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

#include "twocell/assignment.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "twocell/errors.hpp"

namespace twocell {

bool is_bijection(std::span<const std::size_t> perm)
{
    std::vector<bool> seen(perm.size(), false);
    for (std::size_t v : perm) {
        if (v >= perm.size() || seen[v])
            return false;
        seen[v] = true;
    }
    return true;
}

Permutation identity_permutation(std::size_t n)
{
    Permutation p(n);
    std::iota(p.begin(), p.end(), std::size_t{0});
    return p;
}

Permutation inverse(std::span<const std::size_t> perm)
{
    Permutation inv(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i)
        inv[perm[i]] = i;
    return inv;
}

void Assignment::validate() const
{
    if (cells[0].size() != cells[1].size())
        throw DimensionError("assignment cells differ in size");
    for (const auto& p : cells)
        if (!is_bijection(p))
            throw DimensionError("assignment is not a bijection");
}

std::size_t Assignment::user_on(std::size_t cell, std::size_t n) const
{
    const auto& p = cells.at(cell);
    const auto it = std::find(p.begin(), p.end(), n);
    if (it == p.end())
        throw std::out_of_range("sub-channel not assigned");
    return static_cast<std::size_t>(it - p.begin());
}

} // namespace twocell
