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

#include "doctest.h"

#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#include "twocell/assign.hpp"
#include "twocell/errors.hpp"
#include "twocell/verify.hpp"

using namespace twocell;

namespace {

CostMatrix random_matrix(std::size_t n, Stream& s)
{
    CostMatrix cm(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            cm.at(i, j) = s.uniform();
    return cm;
}

} // namespace

TEST_CASE("build_cost_matrix")
{
    ChannelRealization r(2, 2, 0.25);
    r.gain(1, 0, 0, 0) = 0.5; // sub-channel 1, cell 1, user 0
    const CostMatrix cm = build_cost_matrix(r, 0, 2.0, 1.0);
    CHECK(cm.at(0, 1) == 1.0);
    CHECK(cm.at(1, 0) == 0.5);

    const CostMatrix scaled = build_cost_matrix(r, 0, 6.0, 1.0);
    const CostMatrix noisy = build_cost_matrix(r, 0, 2.0, 2.0);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t n = 0; n < 2; ++n) {
            CHECK(scaled.at(i, n) == doctest::Approx(3.0 * cm.at(i, n)));
            CHECK(noisy.at(i, n) == doctest::Approx(0.5 * cm.at(i, n)));
        }
    // Only the serving base station's gain matters.
    r.gain(1, 0, 0, 1) = 99.0;
    CHECK(build_cost_matrix(r, 0, 2.0, 1.0).at(0, 1) == 1.0);
    CHECK_THROWS_AS(build_cost_matrix(r, 2, 1.0, 1.0), std::out_of_range);
}

TEST_CASE("hungarian_max small cases")
{
    const auto diag = hungarian_max(CostMatrix({{10, 1}, {1, 10}}));
    CHECK(diag.perm == Permutation{0, 1});
    CHECK(diag.value == 20.0);

    const auto anti = hungarian_max(CostMatrix({{1, 5}, {2, 1}}));
    CHECK(anti.perm == Permutation{1, 0});
    CHECK(anti.value == 7.0);

    CHECK(hungarian_max(CostMatrix(std::vector<std::vector<double>>{{4.5}})).perm == Permutation{0});
    CHECK(hungarian_max(CostMatrix(0)).perm.empty());
}

TEST_CASE("hungarian_max picks the lexicographically smallest optimum")
{
    CHECK(hungarian_max(CostMatrix(4, 7.0)).perm == Permutation{0, 1, 2, 3});
    // Both derangements are optimal with value 3.
    const CostMatrix cyc({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
    CHECK(hungarian_max(cyc).perm == Permutation{1, 2, 0});
    CHECK(hungarian_max(cyc).perm == brute_force_max(cyc).perm);

    Stream s(77);
    for (int k = 0; k < 200; ++k) {
        const std::size_t n = 2 + s.below(5);
        CostMatrix cm(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                cm.at(i, j) = static_cast<double>(s.below(3)); // many ties
        const auto fast = hungarian_max(cm);
        const auto slow = brute_force_max(cm);
        CHECK(fast.value == slow.value);
        CHECK(fast.perm == slow.perm);
    }
}

TEST_CASE("hungarian_max equals permutation enumeration")
{
    Stream s(3);
    for (int k = 0; k < 20; ++k) {
        const CostMatrix cm = random_matrix(6, s);
        CHECK(hungarian_max(cm).value == brute_force_max(cm).value);
    }
    const CheckReport report = check_hungarian({.cases = 500, .seed = 9});
    CHECK(report.cases == 500);
    CHECK_MESSAGE(report.passed(), report.first_failure);
}

TEST_CASE("hungarian_max argmax is invariant to positive scaling")
{
    Stream s(4);
    for (int k = 0; k < 100; ++k) {
        const std::size_t n = 2 + s.below(6);
        const CostMatrix cm = random_matrix(n, s);
        const double factor = std::pow(10.0, -3.0 + 6.0 * s.uniform());
        CostMatrix scaled(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                scaled.at(i, j) = factor * cm.at(i, j);
        CHECK(hungarian_max(scaled).perm == hungarian_max(cm).perm);
    }
}

TEST_CASE("hungarian_max input checks")
{
    CHECK_THROWS_AS(CostMatrix({{1, 2}, {3}}), std::invalid_argument);
    CostMatrix cm(2, 1.0);
    cm.at(1, 1) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(hungarian_max(cm), std::invalid_argument);
    cm.at(1, 1) = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(hungarian_max(cm), std::invalid_argument);
}

TEST_CASE("assign_hungarian")
{
    SimConfig cfg;
    SUBCASE("single sub-channel")
    {
        cfg.num_subchannels = cfg.users_per_cell = 1;
        const auto asg = assign_hungarian(generate_realization(cfg, 0), 1.0, 1.0);
        CHECK(asg.cells[0] == Permutation{0});
        CHECK(asg.cells[1] == Permutation{0});
    }
    SUBCASE("per-cell optimum over all permutations")
    {
        Stream s(8);
        for (std::uint64_t t = 0; t < 100; ++t) {
            const auto r = generate_realization(cfg, t);
            const auto asg = assign_hungarian(r, 1.0, 1.0);
            CHECK_NOTHROW(asg.validate());
            for (std::size_t cell = 0; cell < 2; ++cell) {
                const CostMatrix cm = build_cost_matrix(r, cell, 1.0, 1.0);
                CHECK(cm.value(asg.cells[cell]) == brute_force_max(cm).value);
                const Assignment other = assign_random(3, s);
                CHECK(cm.value(asg.cells[cell]) >= cm.value(other.cells[cell]));
            }
        }
    }
    SUBCASE("non-square instance")
    {
        CHECK_THROWS_AS(assign_hungarian(ChannelRealization(3, 2), 1.0, 1.0), DimensionError);
    }
}

TEST_CASE("assign_exhaustive on a two sub-channel hand instance")
{
    // Strong interference on sub-channel 0 for most pairings so that both the
    // assignment and the power decision matter.
    ChannelRealization r(2, 2);
    const double g[2][2][2][2] = {
        // n = 0: [cell][user][bs]
        {{{1.0, 2.0}, {0.4, 0.05}}, {{3.0, 0.8}, {0.2, 1.5}}},
        // n = 1
        {{{0.3, 0.1}, {2.5, 1.2}}, {{0.6, 0.01}, {2.0, 0.4}}},
    };
    for (std::size_t n = 0; n < 2; ++n)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t k = 0; k < 2; ++k)
                    r.gain(n, j, i, k) = g[n][j][i][k];
    const double p_max = 10.0;

    // Reference: the four joint assignments, each pair rated by the grid oracle.
    double best = -1.0;
    Assignment best_asg;
    for (const Permutation& p1 : {Permutation{0, 1}, Permutation{1, 0}})
        for (const Permutation& p2 : {Permutation{0, 1}, Permutation{1, 0}}) {
            const Permutation h1 = inverse(p1), h2 = inverse(p2);
            double total = 0.0;
            for (std::size_t n = 0; n < 2; ++n)
                total += std::log2(1.0 + grid_oracle(pair_channel(r, n, h1[n], h2[n], 1.0), p_max,
                                                     1001)
                                             .ratio);
            if (total > best) {
                best = total;
                best_asg = Assignment{{p1, p2}};
            }
        }

    const JointSolution js = assign_exhaustive(r, 1.0, p_max, PowerPolicy::optimal);
    CHECK(js.assignment == best_asg);
    CHECK(js.sum_rate == doctest::Approx(best).epsilon(1e-6));
    CHECK(js.sum_rate == sum_rate(r, js.assignment, js.powers, 1.0));
    CHECK(js.powers.within(p_max));
}

TEST_CASE("assign_exhaustive dominates hungarian")
{
    SimConfig cfg;
    for (std::uint64_t t = 0; t < 100; ++t) {
        const auto r = generate_realization(cfg, t);
        for (double p_max : {0.1, 1.0, 100.0})
            for (PowerPolicy policy : {PowerPolicy::optimal, PowerPolicy::full}) {
                const auto js = assign_exhaustive(r, 1.0, p_max, policy);
                const auto asg = assign_hungarian(r, p_max, 1.0);
                const double h = sum_rate(r, asg, allocate_power(r, asg, 1.0, p_max, policy), 1.0);
                CHECK(js.sum_rate >= h);
            }
    }
}

TEST_CASE("assign_exhaustive edge cases")
{
    ChannelRealization one(1, 1, 0.5);
    const auto js = assign_exhaustive(one, 1.0, 1.0, PowerPolicy::full);
    CHECK(js.assignment == Assignment{{Permutation{0}, Permutation{0}}});
    CHECK(js.powers.at(0, 0) == 1.0);

    CHECK_THROWS_AS(assign_exhaustive(ChannelRealization(7, 7), 1.0, 1.0, PowerPolicy::full),
                    ConfigError);
    CHECK_THROWS_AS(assign_exhaustive(ChannelRealization(3, 2), 1.0, 1.0, PowerPolicy::full),
                    DimensionError);
}

TEST_CASE("assign_exhaustive breaks ties lexicographically")
{
    // Identical gains everywhere: every joint assignment has the same rate.
    const auto js = assign_exhaustive(ChannelRealization(3, 3, 0.5), 1.0, 1.0, PowerPolicy::full);
    CHECK(js.assignment.cells[0] == Permutation{0, 1, 2});
    CHECK(js.assignment.cells[1] == Permutation{0, 1, 2});
}

TEST_CASE("assign_random")
{
    Stream s(123);
    CHECK(assign_random(1, s).cells[0] == Permutation{0});

    std::map<Permutation, int> counts;
    const int draws = 10000;
    for (int k = 0; k < draws; ++k) {
        const Assignment asg = assign_random(3, s);
        REQUIRE(is_bijection(asg.cells[0]));
        REQUIRE(is_bijection(asg.cells[1]));
        ++counts[asg.cells[0]];
    }
    CHECK(counts.size() == 6);
    for (const auto& [perm, c] : counts)
        CHECK(std::abs(static_cast<double>(c) / draws - 1.0 / 6.0) <= 0.02);

    Stream a(5), b(5);
    CHECK(assign_random(5, a) == assign_random(5, b));
}

TEST_CASE("bijection helpers")
{
    CHECK(is_bijection(Permutation{2, 0, 1}));
    CHECK_FALSE(is_bijection(Permutation{0, 0, 1}));
    CHECK_FALSE(is_bijection(Permutation{0, 3, 1}));
    CHECK(inverse(Permutation{2, 0, 1}) == Permutation{1, 2, 0});
    const Assignment asg{{Permutation{2, 0, 1}, Permutation{0, 1, 2}}};
    CHECK(asg.user_on(0, 0) == 1);
    CHECK(asg.user_on(1, 2) == 2);
}
