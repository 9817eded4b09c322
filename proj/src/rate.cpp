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

#include "twocell/rate.hpp"

#include <cmath>

#include "twocell/errors.hpp"

namespace twocell {

bool PowerAllocation::within(double p_max) const
{
    for (const auto& row : powers_)
        for (double p : row)
            if (!(p >= 0.0 && p <= p_max))
                return false;
    return true;
}

double user_rate(double power, double direct_gain, double interference, double noise)
{
    return std::log2(1.0 + power * direct_gain / (noise + interference));
}

double pair_sum_rate(const PairChannel& pc, double p1, double p2)
{
    return user_rate(p1, pc.a, p2 * pc.b, pc.noise) + user_rate(p2, pc.c, p1 * pc.d, pc.noise);
}

double sum_rate(const ChannelRealization& r, const Assignment& asg, const PowerAllocation& pw,
                double noise)
{
    asg.validate();
    const std::size_t n_sub = r.num_subchannels();
    if (asg.size() != r.users_per_cell() || n_sub != r.users_per_cell() || pw.size() != n_sub)
        throw DimensionError("sum_rate: realization, assignment and powers disagree in size");

    const Permutation holder1 = inverse(asg.cells[0]);
    const Permutation holder2 = inverse(asg.cells[1]);

    double total = 0.0;
    for (std::size_t n = 0; n < n_sub; ++n) {
        const double p1 = pw.at(n, 0);
        const double p2 = pw.at(n, 1);
        if (!(std::isfinite(p1) && std::isfinite(p2) && p1 >= 0.0 && p2 >= 0.0))
            throw DimensionError("sum_rate: powers must be finite and non-negative");
        total += pair_sum_rate(pair_channel(r, n, holder1[n], holder2[n], noise), p1, p2);
    }
    return total;
}

} // namespace twocell
