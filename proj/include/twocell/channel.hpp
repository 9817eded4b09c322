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
#include <cstdint>
#include <vector>

namespace twocell {

inline constexpr std::size_t kNumCells = 2;

/// Simulation parameters shared by the channel generator and the sweep.
struct SimConfig {
    std::size_t num_subchannels = 3;
    std::size_t users_per_cell = 3;
    double path_loss_exponent = 3.0;
    double own_cell_distance = 100.0;   // meters
    double cross_cell_distance = 500.0; // meters
    double noise_power = 1.0;           // linear
    std::vector<double> snr_grid = {-10, -5, 0, 5, 10, 15, 20, 25, 30}; // dB
    std::size_t trials = 2000;
    std::uint64_t master_seed = 42;
    double dinkelbach_tolerance = 1e-8;
    std::size_t grid_resolution = 1001;

    /// Per-user power budget for an SNR point: noise_power * 10^(snr_db/10).
    [[nodiscard]] double p_max(double snr_db) const;

    /// Throws ConfigError if any invariant is violated.
    void validate() const;
};

/// Power gains of one channel draw.
///
/// gain(n, j, i, k) is the gain on sub-channel n from user i of cell j to the
/// base station of cell k. All indices are zero-based.
class ChannelRealization {
public:
    ChannelRealization(std::size_t num_subchannels, std::size_t users_per_cell,
                       double fill = 1.0);

    [[nodiscard]] std::size_t num_subchannels() const noexcept { return num_subchannels_; }
    [[nodiscard]] std::size_t users_per_cell() const noexcept { return users_per_cell_; }

    [[nodiscard]] double gain(std::size_t n, std::size_t cell, std::size_t user,
                              std::size_t bs) const;
    double& gain(std::size_t n, std::size_t cell, std::size_t user, std::size_t bs);

    [[nodiscard]] const std::vector<double>& raw() const& noexcept { return gains_; }
    const std::vector<double>& raw() const&& = delete;

    friend bool operator==(const ChannelRealization&, const ChannelRealization&) = default;

private:
    [[nodiscard]] std::size_t index(std::size_t n, std::size_t cell, std::size_t user,
                                    std::size_t bs) const;

    std::size_t num_subchannels_;
    std::size_t users_per_cell_;
    std::vector<double> gains_;
};

/// Coefficients of one co-channel user pair.
///   a: cell-1 user at BS 1 (direct)     b: cell-2 user at BS 1 (cross)
///   c: cell-2 user at BS 2 (direct)     d: cell-1 user at BS 2 (cross)
struct PairChannel {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double d = 0.0;
    double noise = 1.0;

    friend bool operator==(const PairChannel&, const PairChannel&) = default;
};

/// Draws the channel for one trial. Rayleigh power fading (unit-mean
/// exponential) times path loss normalized to the own-cell distance, so direct
/// gains have mean 1 and cross gains mean (cross/own)^-alpha. Depends only on
/// (config.master_seed, trial_index).
ChannelRealization generate_realization(const SimConfig& config, std::uint64_t trial_index);

/// Extracts the pair formed by user1 of cell 1 and user2 of cell 2 sharing
/// sub-channel n. Throws std::out_of_range on a bad index.
PairChannel pair_channel(const ChannelRealization& r, std::size_t n, std::size_t user1,
                         std::size_t user2, double noise);

} // namespace twocell
