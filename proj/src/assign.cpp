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

#include "twocell/assign.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "twocell/errors.hpp"

namespace twocell {

namespace {

// Minimum-cost perfect matching on a dense n x n matrix (row-major).
// Shortest augmenting path with potentials; returns row -> column.
Permutation solve_min_cost(const std::vector<double>& cost, std::size_t n)
{
    constexpr double inf = std::numeric_limits<double>::infinity();
    // 1-based internally; index 0 is the virtual source column.
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
    std::vector<std::size_t> row_of(n + 1, 0), way(n + 1, 0);

    for (std::size_t i = 1; i <= n; ++i) {
        row_of[0] = i;
        std::size_t j0 = 0;
        std::vector<double> minv(n + 1, inf);
        std::vector<bool> used(n + 1, false);
        do {
            used[j0] = true;
            const std::size_t i0 = row_of[j0];
            double delta = inf;
            std::size_t j1 = 0;
            for (std::size_t j = 1; j <= n; ++j) {
                if (used[j])
                    continue;
                const double cur = cost[(i0 - 1) * n + (j - 1)] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (std::size_t j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[row_of[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (row_of[j0] != 0);
        do {
            const std::size_t j1 = way[j0];
            row_of[j0] = row_of[j1];
            j0 = j1;
        } while (j0 != 0);
    }

    Permutation perm(n);
    for (std::size_t j = 1; j <= n; ++j)
        perm[row_of[j] - 1] = j - 1;
    return perm;
}

// Best completion of rows [first_row, n) over the columns not in `taken`.
Permutation complete_max(const CostMatrix& cm, std::size_t first_row, const Permutation& prefix,
                         const std::vector<bool>& taken)
{
    const std::size_t n = cm.size();
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < n; ++c)
        if (!taken[c])
            free_cols.push_back(c);
    const std::size_t m = free_cols.size();

    double top = -std::numeric_limits<double>::infinity();
    for (std::size_t r = first_row; r < n; ++r)
        for (std::size_t c : free_cols)
            top = std::max(top, cm.at(r, c));

    std::vector<double> cost(m * m);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < m; ++c)
            cost[r * m + c] = top - cm.at(first_row + r, free_cols[c]);

    Permutation full = prefix;
    const Permutation sub = m > 0 ? solve_min_cost(cost, m) : Permutation{};
    for (std::size_t r = 0; r < m; ++r)
        full.push_back(free_cols[sub[r]]);
    return full;
}

} // namespace

CostMatrix::CostMatrix(const std::vector<std::vector<double>>& rows)
    : n_(rows.size())
    , entries_()
{
    entries_.reserve(n_ * n_);
    for (const auto& row : rows) {
        if (row.size() != n_)
            throw std::invalid_argument("CostMatrix: matrix must be square");
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

double CostMatrix::value(std::span<const std::size_t> perm) const
{
    double total = 0.0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        total += at(i, perm[i]);
    return total;
}

CostMatrix build_cost_matrix(const ChannelRealization& r, std::size_t cell, double p_max,
                             double noise)
{
    if (cell >= kNumCells)
        throw std::out_of_range("build_cost_matrix: cell index out of range");
    if (r.users_per_cell() != r.num_subchannels())
        throw DimensionError("build_cost_matrix: users_per_cell must equal num_subchannels");
    CostMatrix cm(r.num_subchannels());
    for (std::size_t i = 0; i < r.users_per_cell(); ++i)
        for (std::size_t n = 0; n < r.num_subchannels(); ++n)
            cm.at(i, n) = p_max * r.gain(n, cell, i, cell) / noise;
    return cm;
}

AssignmentSolution hungarian_max(const CostMatrix& cm)
{
    const std::size_t n = cm.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t c = 0; c < n; ++c)
            if (!std::isfinite(cm.at(i, c)))
                throw std::invalid_argument("hungarian_max: entries must be finite");

    AssignmentSolution best;
    best.perm = complete_max(cm, 0, {}, std::vector<bool>(n, false));
    best.value = cm.value(best.perm);
    const double tie = 1e-12 * std::max(1.0, std::abs(best.value));

    // Fix rows one at a time to the smallest column that still admits an
    // optimal completion.
    Permutation prefix;
    std::vector<bool> taken(n, false);
    for (std::size_t row = 0; row + 1 < n; ++row) {
        for (std::size_t col = 0; col < n; ++col) {
            if (taken[col])
                continue;
            if (col == best.perm[row])
                break;
            Permutation trial = prefix;
            trial.push_back(col);
            std::vector<bool> trial_taken = taken;
            trial_taken[col] = true;
            Permutation candidate = complete_max(cm, row + 1, trial, trial_taken);
            const double value = cm.value(candidate);
            if (value >= best.value - tie) {
                best = {std::move(candidate), value};
                break;
            }
        }
        prefix.push_back(best.perm[row]);
        taken[best.perm[row]] = true;
    }
    return best;
}

Assignment assign_hungarian(const ChannelRealization& r, double p_max, double noise)
{
    if (r.users_per_cell() != r.num_subchannels())
        throw DimensionError("assign_hungarian: users_per_cell must equal num_subchannels");
    Assignment asg;
    for (std::size_t cell = 0; cell < kNumCells; ++cell)
        asg.cells[cell] = hungarian_max(build_cost_matrix(r, cell, p_max, noise)).perm;
    return asg;
}

PowerAllocation allocate_power(const ChannelRealization& r, const Assignment& asg, double noise,
                               double p_max, PowerPolicy policy, double tolerance)
{
    asg.validate();
    if (asg.size() != r.num_subchannels())
        throw DimensionError("allocate_power: assignment does not match realization");
    const Permutation holder1 = inverse(asg.cells[0]);
    const Permutation holder2 = inverse(asg.cells[1]);

    PowerAllocation pw(r.num_subchannels());
    for (std::size_t n = 0; n < r.num_subchannels(); ++n) {
        const PowerPoint p =
            policy == PowerPolicy::full
                ? full_power(p_max)
                : optimal_pair_power(pair_channel(r, n, holder1[n], holder2[n], noise), p_max,
                                     tolerance);
        pw.set(n, 0, p[0]);
        pw.set(n, 1, p[1]);
    }
    return pw;
}

JointSolution assign_exhaustive(const ChannelRealization& r, double noise, double p_max,
                                PowerPolicy policy, double tolerance)
{
    const std::size_t n = r.num_subchannels();
    if (r.users_per_cell() != n)
        throw DimensionError("assign_exhaustive: users_per_cell must equal num_subchannels");
    if (n > kExhaustiveMaxSubchannels)
        throw ConfigError("assign_exhaustive: at most 6 sub-channels supported");

    // Every joint assignment is built from the n^3 (sub-channel, user1, user2)
    // pairs, so solve each pair once.
    struct PairSolution {
        PowerPoint power;
        double rate;
    };
    std::vector<PairSolution> pairs(n * n * n);
    const auto pair_index = [n](std::size_t sub, std::size_t u1, std::size_t u2) {
        return (sub * n + u1) * n + u2;
    };
    for (std::size_t sub = 0; sub < n; ++sub)
        for (std::size_t u1 = 0; u1 < n; ++u1)
            for (std::size_t u2 = 0; u2 < n; ++u2) {
                const PairChannel pc = pair_channel(r, sub, u1, u2, noise);
                const PowerPoint p = policy == PowerPolicy::full
                                         ? full_power(p_max)
                                         : optimal_pair_power(pc, p_max, tolerance);
                pairs[pair_index(sub, u1, u2)] = {p, pair_sum_rate(pc, p[0], p[1])};
            }

    Permutation first = identity_permutation(n);
    Permutation best_first, best_second;
    double best = -std::numeric_limits<double>::infinity();
    do {
        const Permutation holder1 = inverse(first);
        Permutation second = identity_permutation(n);
        do {
            const Permutation holder2 = inverse(second);
            // Same accumulation order as sum_rate.
            double total = 0.0;
            for (std::size_t sub = 0; sub < n; ++sub)
                total += pairs[pair_index(sub, holder1[sub], holder2[sub])].rate;
            if (total > best) {
                best = total;
                best_first = first;
                best_second = second;
            }
        } while (std::next_permutation(second.begin(), second.end()));
    } while (std::next_permutation(first.begin(), first.end()));

    JointSolution out{Assignment{{best_first, best_second}}, PowerAllocation(n), best};
    const Permutation holder1 = inverse(best_first);
    const Permutation holder2 = inverse(best_second);
    for (std::size_t sub = 0; sub < n; ++sub) {
        const PowerPoint& p = pairs[pair_index(sub, holder1[sub], holder2[sub])].power;
        out.powers.set(sub, 0, p[0]);
        out.powers.set(sub, 1, p[1]);
    }
    return out;
}

Assignment assign_random(std::size_t n, Stream& stream)
{
    Assignment asg;
    for (auto& perm : asg.cells) {
        perm = identity_permutation(n);
        for (std::size_t k = n; k > 1; --k)
            std::swap(perm[k - 1], perm[stream.below(k)]);
    }
    return asg;
}

} // namespace twocell
