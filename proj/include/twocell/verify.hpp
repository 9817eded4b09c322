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
#include <cstdint>
#include <string>
#include <vector>

#include "twocell/assign.hpp"
#include "twocell/power.hpp"

namespace twocell {

/// Reference maximum over all n! permutations, enumerated in lexicographic
/// order; the first maximum wins. Exponential cost, for validation only.
AssignmentSolution brute_force_max(const CostMatrix& cm);

struct CheckReport {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    double worst = 0.0; // largest observed error measure
    std::string first_failure;

    [[nodiscard]] bool passed() const noexcept { return failures == 0; }
};

struct HungarianCheckOptions {
    std::size_t cases = 500;
    std::size_t min_size = 2;
    std::size_t max_size = 7;
    std::uint64_t seed = 1;
};

/// hungarian_max against brute_force_max on random matrices with entries
/// uniform in [0, 1). Values must agree exactly.
CheckReport check_hungarian(const HungarianCheckOptions& opts = {});

struct DinkelbachCheckOptions {
    std::size_t cases = 500;
    std::vector<double> p_max_values = {0.1, 1.0, 10.0};
    std::size_t grid_resolution = 1001;
    double tolerance = kDefaultDinkelbachTolerance;
    double max_relative_gap = 1e-3;
    std::size_t max_iterations = 50;
    std::uint64_t seed = 2;
};

/// Random pair with gains log-uniform on [1e-3, 1e1] and unit noise.
PairChannel random_pair_channel(Stream& stream);

/// Dinkelbach against the grid oracle: relative gap, lambda monotonicity,
/// iteration budget and the fixed-point condition on every case.
CheckReport check_dinkelbach(const DinkelbachCheckOptions& opts = {});

} // namespace twocell
