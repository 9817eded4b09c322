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
#include <vector>

#include "twocell/assignment.hpp"
#include "twocell/channel.hpp"

namespace twocell {

/// Transmit powers, one per (sub-channel, cell): the power of the user of
/// that cell holding that sub-channel.
class PowerAllocation {
public:
    explicit PowerAllocation(std::size_t num_subchannels, double fill = 0.0)
        : powers_(num_subchannels, {fill, fill})
    {
    }

    [[nodiscard]] std::size_t size() const noexcept { return powers_.size(); }

    [[nodiscard]] double at(std::size_t n, std::size_t cell) const { return powers_.at(n).at(cell); }
    void set(std::size_t n, std::size_t cell, double p) { powers_.at(n).at(cell) = p; }

    /// Every power in [0, p_max].
    [[nodiscard]] bool within(double p_max) const;

    friend bool operator==(const PowerAllocation&, const PowerAllocation&) = default;

private:
    std::vector<std::array<double, kNumCells>> powers_;
};

/// log2(1 + power * direct_gain / (noise + interference)), in bits/s/Hz.
double user_rate(double power, double direct_gain, double interference, double noise);

/// Sum of both users' rates on one shared sub-channel.
double pair_sum_rate(const PairChannel& pc, double p1, double p2);

/// Network sum rate. Pairs on distinct sub-channels do not interfere, so this
/// is the sum over sub-channels (in index order) of pair_sum_rate.
/// Throws DimensionError on mismatched shapes or negative/non-finite powers.
double sum_rate(const ChannelRealization& r, const Assignment& asg, const PowerAllocation& pw,
                double noise);

} // namespace twocell
