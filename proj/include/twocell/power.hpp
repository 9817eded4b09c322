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

#include "twocell/channel.hpp"

namespace twocell {

/// Transmit powers (p1, p2) of a co-channel pair.
using PowerPoint = std::array<double, 2>;
using Matrix2 = std::array<std::array<double, 2>, 2>;
using Vector2 = std::array<double, 2>;

/// Ratio of two bivariate quadratics,
///   f(p) = p'Mp + linear_num'p + constant_num
///   g(p) = p'Qp + linear_den'p + constant_den.
struct QuadraticFractional {
    Matrix2 num_quadratic{};
    Vector2 num_linear{};
    double num_constant = 0.0;
    Matrix2 den_quadratic{};
    Vector2 den_linear{};
    double den_constant = 1.0;

    [[nodiscard]] double numerator(const PowerPoint& p) const;
    [[nodiscard]] double denominator(const PowerPoint& p) const;
    [[nodiscard]] double ratio(const PowerPoint& p) const { return numerator(p) / denominator(p); }
    /// f(p) - lambda * g(p).
    [[nodiscard]] double parametric(const PowerPoint& p, double lambda) const;
};

/// Expands the pair sum rate into a single fraction: with A, B the two SINRs,
/// (1 + A)(1 + B) = 1 + f/g where
///   f = ad p1^2 + bc p2^2 + ac p1 p2 + s^2 (a p1 + c p2)
///   g = s^4 + s^2 (d p1 + b p2) + bd p1 p2.
/// The numerator has no constant term and the denominator's quadratic part is
/// the indefinite off-diagonal bd/2.
QuadraticFractional fractional_form(const PairChannel& pc);

struct ParametricMax {
    PowerPoint point{};
    double value = 0.0;
};

/// Global maximum of f - lambda*g over the box [0, p_max]^2.
///
/// The maximum of a bivariate quadratic over a box is attained at a vertex, at
/// the critical point of the restriction to an edge, or at an interior critical
/// point, so the candidate set is finite and enumerated directly. This does not
/// need M - lambda*Q to be definite. Candidates whose value is within a relative
/// 1e-12 of the best count as ties; the lexicographically smallest point wins.
ParametricMax maximize_parametric(const QuadraticFractional& qf, double lambda, double p_max);

struct DinkelbachTrace {
    std::vector<double> lambdas;       // lambda used at each iteration, starting at 0
    std::vector<PowerPoint> iterates;  // maximizer found at each iteration
    std::vector<double> residuals;     // f(p*) - lambda g(p*) at each iteration
    [[nodiscard]] std::size_t iterations() const noexcept { return lambdas.size(); }
};

struct DinkelbachResult {
    PowerPoint point{};
    double lambda = 0.0; // f(point) / g(point)
    DinkelbachTrace trace;
};

inline constexpr double kDefaultDinkelbachTolerance = 1e-8;
inline constexpr std::size_t kDefaultDinkelbachIterations = 100;

/// Dinkelbach iteration for max f/g over [0, p_max]^2. Starts from lambda = 0,
/// stops once max_p f - lambda g <= tolerance. Throws ConvergenceError past
/// max_iterations and std::invalid_argument for a non-positive tolerance.
/// p_max <= 0 returns (0, 0) with lambda 0 without iterating.
DinkelbachResult dinkelbach(const QuadraticFractional& qf, double p_max,
                            double tolerance = kDefaultDinkelbachTolerance,
                            std::size_t max_iterations = kDefaultDinkelbachIterations);

/// Sum-rate optimal powers for one pair.
PowerPoint optimal_pair_power(const PairChannel& pc, double p_max,
                              double tolerance = kDefaultDinkelbachTolerance);

struct GridOptimum {
    PowerPoint point{};
    double ratio = 0.0;
};

/// Brute-force reference: best (1+A)(1+B) - 1 over a resolution x resolution
/// uniform grid on [0, p_max]^2, evaluated from the SINRs directly. First
/// maximum in (p1, p2) lexicographic order wins. resolution must be >= 2.
GridOptimum grid_oracle(const PairChannel& pc, double p_max, std::size_t resolution);

/// Both users at p_max.
constexpr PowerPoint full_power(double p_max) noexcept
{
    return {p_max, p_max};
}

} // namespace twocell
