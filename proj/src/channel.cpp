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

#include "twocell/channel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "twocell/errors.hpp"
#include "twocell/random.hpp"

namespace twocell {

namespace {

bool positive_finite(double v)
{
    return std::isfinite(v) && v > 0.0;
}

} // namespace

double SimConfig::p_max(double snr_db) const
{
    return noise_power * std::pow(10.0, snr_db / 10.0);
}

void SimConfig::validate() const
{
    if (num_subchannels == 0)
        throw ConfigError("num_subchannels must be positive");
    if (users_per_cell == 0)
        throw ConfigError("users_per_cell must be positive");
    if (users_per_cell != num_subchannels)
        throw ConfigError("users_per_cell must equal num_subchannels (square assignment)");
    if (!positive_finite(path_loss_exponent))
        throw ConfigError("path_loss_exponent must be positive");
    if (!positive_finite(own_cell_distance) || !positive_finite(cross_cell_distance))
        throw ConfigError("distances must be positive");
    if (!positive_finite(noise_power))
        throw ConfigError("noise_power must be positive");
    if (snr_grid.empty())
        throw ConfigError("snr_grid must not be empty");
    for (double s : snr_grid)
        if (!std::isfinite(s))
            throw ConfigError("snr_grid entries must be finite");
    if (trials == 0)
        throw ConfigError("trials must be positive");
    if (!positive_finite(dinkelbach_tolerance))
        throw ConfigError("dinkelbach_tolerance must be positive");
    if (grid_resolution < 2)
        throw ConfigError("grid_resolution must be at least 2");
}

ChannelRealization::ChannelRealization(std::size_t num_subchannels, std::size_t users_per_cell,
                                       double fill)
    : num_subchannels_(num_subchannels)
    , users_per_cell_(users_per_cell)
    , gains_(num_subchannels * kNumCells * users_per_cell * kNumCells, fill)
{
}

std::size_t ChannelRealization::index(std::size_t n, std::size_t cell, std::size_t user,
                                      std::size_t bs) const
{
    if (n >= num_subchannels_ || cell >= kNumCells || user >= users_per_cell_ || bs >= kNumCells)
        throw std::out_of_range("ChannelRealization index out of range");
    return ((n * kNumCells + cell) * users_per_cell_ + user) * kNumCells + bs;
}

double ChannelRealization::gain(std::size_t n, std::size_t cell, std::size_t user,
                                std::size_t bs) const
{
    return gains_[index(n, cell, user, bs)];
}

double& ChannelRealization::gain(std::size_t n, std::size_t cell, std::size_t user, std::size_t bs)
{
    return gains_[index(n, cell, user, bs)];
}

ChannelRealization generate_realization(const SimConfig& config, std::uint64_t trial_index)
{
    const double cross_scale =
        std::pow(config.cross_cell_distance / config.own_cell_distance, -config.path_loss_exponent);

    ChannelRealization r(config.num_subchannels, config.users_per_cell);
    Stream stream(config.master_seed, trial_index, StreamTag::channel);

    // Fixed draw order (n, j, i, k) so the tensor is a pure function of the seed.
    for (std::size_t n = 0; n < r.num_subchannels(); ++n)
        for (std::size_t j = 0; j < kNumCells; ++j)
            for (std::size_t i = 0; i < r.users_per_cell(); ++i)
                for (std::size_t k = 0; k < kNumCells; ++k) {
                    const double fading = stream.exponential();
                    r.gain(n, j, i, k) = fading * (j == k ? 1.0 : cross_scale);
                }
    return r;
}

PairChannel pair_channel(const ChannelRealization& r, std::size_t n, std::size_t user1,
                         std::size_t user2, double noise)
{
    return PairChannel{
        .a = r.gain(n, 0, user1, 0),
        .b = r.gain(n, 1, user2, 0),
        .c = r.gain(n, 1, user2, 1),
        .d = r.gain(n, 0, user1, 1),
        .noise = noise,
    };
}

} // namespace twocell
