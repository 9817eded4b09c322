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

#include <cstdint>
#include <random>

namespace twocell {

/// Independent sub-streams used per trial. Each tag selects a distinct stream
/// for the same (master_seed, trial_index).
enum class StreamTag : std::uint64_t {
    channel = 0,
    random_assignment = 1,
};

/// SplitMix64 finalizer; bijective on 64-bit words.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Seed for the stream keyed by (master_seed, trial_index, tag). Pure function,
/// so trials can be generated in any order or in parallel.
std::uint64_t derive_stream_seed(std::uint64_t master_seed, std::uint64_t trial_index,
                                 StreamTag tag) noexcept;

/// Thin wrapper around mt19937_64 with portable real/integer draws (the
/// std distributions are implementation-defined, these are not).
class Stream {
public:
    explicit Stream(std::uint64_t seed) : engine_(seed) {}
    Stream(std::uint64_t master_seed, std::uint64_t trial_index, StreamTag tag)
        : engine_(derive_stream_seed(master_seed, trial_index, tag)) {}

    /// Uniform on the open interval (0, 1).
    double uniform_open();
    /// Uniform on [0, 1).
    double uniform();
    /// Uniform integer in [0, bound). bound must be > 0.
    std::uint64_t below(std::uint64_t bound);
    /// Unit-mean exponential draw, strictly positive.
    double exponential();

private:
    std::mt19937_64 engine_;
};

} // namespace twocell
