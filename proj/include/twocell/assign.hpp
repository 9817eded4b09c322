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

#include <cstddef>
#include <vector>

#include "twocell/assignment.hpp"
#include "twocell/channel.hpp"
#include "twocell/power.hpp"
#include "twocell/random.hpp"
#include "twocell/rate.hpp"

namespace twocell {

/// Square benefit matrix: at(i, n) is the value of giving sub-channel n to user i.
class CostMatrix {
public:
    explicit CostMatrix(std::size_t n, double fill = 0.0) : n_(n), entries_(n * n, fill) {}
    /// Throws std::invalid_argument if rows are not all of length rows.size().
    explicit CostMatrix(const std::vector<std::vector<double>>& rows);

    [[nodiscard]] std::size_t size() const noexcept { return n_; }
    [[nodiscard]] double at(std::size_t i, std::size_t n) const { return entries_[i * n_ + n]; }
    double& at(std::size_t i, std::size_t n) { return entries_[i * n_ + n]; }

    /// Sum of at(i, perm[i]) accumulated in row order.
    [[nodiscard]] double value(std::span<const std::size_t> perm) const;

private:
    std::size_t n_;
    std::vector<double> entries_;
};

struct AssignmentSolution {
    Permutation perm;
    double value = 0.0;
};

/// Low-SNR benefit of each (user, sub-channel) within one cell:
/// p_max * direct gain / noise. Interference is ignored.
CostMatrix build_cost_matrix(const ChannelRealization& r, std::size_t cell, double p_max,
                             double noise);

/// Maximum-weight perfect matching, O(n^3) Hungarian method run on
/// (max entry - c). Among optimal permutations the lexicographically smallest
/// is returned. Throws std::invalid_argument on non-finite entries.
AssignmentSolution hungarian_max(const CostMatrix& cm);

/// Hungarian assignment, solved independently in each cell.
/// Throws DimensionError if users_per_cell != num_subchannels.
Assignment assign_hungarian(const ChannelRealization& r, double p_max, double noise);

enum class PowerPolicy { optimal, full };

inline constexpr std::size_t kExhaustiveMaxSubchannels = 6;

/// Powers for an assignment: per-pair Dinkelbach optimum or full power.
PowerAllocation allocate_power(const ChannelRealization& r, const Assignment& asg, double noise,
                               double p_max, PowerPolicy policy,
                               double tolerance = kDefaultDinkelbachTolerance);

struct JointSolution {
    Assignment assignment;
    PowerAllocation powers;
    double sum_rate = 0.0;
};

/// Exhaustive search over every joint assignment (perm1, perm2) with powers
/// from the given policy; returns the best exact sum rate. Ties go to the
/// lexicographically smallest (perm1, perm2). Throws ConfigError above
/// kExhaustiveMaxSubchannels sub-channels.
JointSolution assign_exhaustive(const ChannelRealization& r, double noise, double p_max,
                                PowerPolicy policy,
                                double tolerance = kDefaultDinkelbachTolerance);

/// Independent uniform permutation per cell (Fisher-Yates), cell 1 first.
Assignment assign_random(std::size_t n, Stream& stream);

} // namespace twocell
