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

#include "twocell/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

namespace twocell {

AssignmentSolution brute_force_max(const CostMatrix& cm)
{
    Permutation perm = identity_permutation(cm.size());
    AssignmentSolution best{perm, -std::numeric_limits<double>::infinity()};
    do {
        const double v = cm.value(perm);
        if (v > best.value)
            best = {perm, v};
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

CheckReport check_hungarian(const HungarianCheckOptions& opts)
{
    CheckReport report;
    report.name = "hungarian_vs_brute_force";
    Stream stream(opts.seed);
    const std::size_t span = opts.max_size - opts.min_size + 1;
    for (std::size_t k = 0; k < opts.cases; ++k) {
        const std::size_t n = opts.min_size + stream.below(span);
        CostMatrix cm(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                cm.at(i, j) = stream.uniform();
        const double fast = hungarian_max(cm).value;
        const double slow = brute_force_max(cm).value;
        ++report.cases;
        report.worst = std::max(report.worst, std::abs(fast - slow));
        if (fast != slow) {
            if (report.failures++ == 0)
                report.first_failure =
                    fmt::format("case {} (n={}): hungarian {} vs brute force {}", k, n, fast, slow);
        }
    }
    return report;
}

PairChannel random_pair_channel(Stream& stream)
{
    const auto log_uniform = [&] { return std::pow(10.0, -3.0 + 4.0 * stream.uniform()); };
    PairChannel pc;
    pc.a = log_uniform();
    pc.b = log_uniform();
    pc.c = log_uniform();
    pc.d = log_uniform();
    pc.noise = 1.0;
    return pc;
}

CheckReport check_dinkelbach(const DinkelbachCheckOptions& opts)
{
    CheckReport report;
    report.name = "dinkelbach_vs_grid";
    Stream stream(opts.seed);
    for (std::size_t k = 0; k < opts.cases; ++k) {
        const PairChannel pc = random_pair_channel(stream);
        const QuadraticFractional qf = fractional_form(pc);
        for (double p_max : opts.p_max_values) {
            ++report.cases;
            std::string problem;
            try {
                const DinkelbachResult res = dinkelbach(qf, p_max, opts.tolerance, 100);
                const GridOptimum grid = grid_oracle(pc, p_max, opts.grid_resolution);
                const double gap =
                    std::abs(res.lambda - grid.ratio) / std::max(grid.ratio, 1e-12);
                report.worst = std::max(report.worst, gap);

                const auto& ls = res.trace.lambdas;
                const bool monotone = std::is_sorted(ls.begin(), ls.end());
                const bool residuals_ok =
                    std::all_of(res.trace.residuals.begin(), res.trace.residuals.end() - 1,
                                [](double r) { return r >= 0.0; });
                const double fixed_point = maximize_parametric(qf, res.lambda, p_max).value;

                if (gap > opts.max_relative_gap)
                    problem = fmt::format("gap {:.3e}", gap);
                else if (!monotone)
                    problem = "lambda sequence decreased";
                else if (!residuals_ok)
                    problem = "negative residual before termination";
                else if (res.trace.iterations() > opts.max_iterations)
                    problem = fmt::format("{} iterations", res.trace.iterations());
                else if (fixed_point > opts.tolerance)
                    problem = fmt::format("max F(p; lambda*) = {:.3e}", fixed_point);
            } catch (const std::exception& e) {
                problem = e.what();
            }
            if (!problem.empty() && report.failures++ == 0)
                report.first_failure =
                    fmt::format("case {} p_max={} (a={},b={},c={},d={}): {}", k, p_max, pc.a,
                                pc.b, pc.c, pc.d, problem);
        }
    }
    return report;
}

} // namespace twocell
