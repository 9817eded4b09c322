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

#include "twocell/power.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "twocell/errors.hpp"

namespace twocell {

namespace {

double quadratic_form(const Matrix2& m, const PowerPoint& p)
{
    return m[0][0] * p[0] * p[0] + 2.0 * m[0][1] * p[0] * p[1] + m[1][1] * p[1] * p[1];
}

double dot(const Vector2& v, const PowerPoint& p)
{
    return v[0] * p[0] + v[1] * p[1];
}

// Critical point of h*t^2 + s*t on (0, hi), if any.
bool edge_critical(double h, double s, double hi, double& t)
{
    if (h == 0.0)
        return false;
    t = -s / (2.0 * h);
    return t > 0.0 && t < hi;
}

} // namespace

double QuadraticFractional::numerator(const PowerPoint& p) const
{
    return quadratic_form(num_quadratic, p) + dot(num_linear, p) + num_constant;
}

double QuadraticFractional::denominator(const PowerPoint& p) const
{
    return quadratic_form(den_quadratic, p) + dot(den_linear, p) + den_constant;
}

double QuadraticFractional::parametric(const PowerPoint& p, double lambda) const
{
    return numerator(p) - lambda * denominator(p);
}

QuadraticFractional fractional_form(const PairChannel& pc)
{
    const double s2 = pc.noise;
    QuadraticFractional qf;
    qf.num_quadratic = {{{pc.a * pc.d, 0.5 * pc.a * pc.c}, {0.5 * pc.a * pc.c, pc.b * pc.c}}};
    qf.num_linear = {s2 * pc.a, s2 * pc.c};
    qf.num_constant = 0.0;
    qf.den_quadratic = {{{0.0, 0.5 * pc.b * pc.d}, {0.5 * pc.b * pc.d, 0.0}}};
    qf.den_linear = {s2 * pc.d, s2 * pc.b};
    qf.den_constant = s2 * s2;
    return qf;
}

ParametricMax maximize_parametric(const QuadraticFractional& qf, double lambda, double p_max)
{
    Matrix2 h;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            h[i][j] = qf.num_quadratic[i][j] - lambda * qf.den_quadratic[i][j];
    const Vector2 l = {qf.num_linear[0] - lambda * qf.den_linear[0],
                       qf.num_linear[1] - lambda * qf.den_linear[1]};

    std::vector<PowerPoint> candidates = {{0.0, 0.0}, {0.0, p_max}, {p_max, 0.0}, {p_max, p_max}};
    for (double fixed : {0.0, p_max}) {
        double t = 0.0;
        // p1 fixed, p2 free: h11 p2^2 + (2 h01 p1 + l1) p2
        if (edge_critical(h[1][1], 2.0 * h[0][1] * fixed + l[1], p_max, t))
            candidates.push_back({fixed, t});
        // p2 fixed, p1 free
        if (edge_critical(h[0][0], 2.0 * h[0][1] * fixed + l[0], p_max, t))
            candidates.push_back({t, fixed});
    }
    const double det = h[0][0] * h[1][1] - h[0][1] * h[0][1];
    if (det != 0.0) {
        // 2 H p = -l
        const PowerPoint p = {(-l[0] * h[1][1] + l[1] * h[0][1]) / (2.0 * det),
                              (-l[1] * h[0][0] + l[0] * h[0][1]) / (2.0 * det)};
        if (p[0] > 0.0 && p[0] < p_max && p[1] > 0.0 && p[1] < p_max)
            candidates.push_back(p);
    }

    std::vector<double> values(candidates.size());
    for (std::size_t k = 0; k < candidates.size(); ++k)
        values[k] = qf.parametric(candidates[k], lambda);
    const double best = *std::max_element(values.begin(), values.end());
    const double tie = 1e-12 * std::max(1.0, std::abs(best));

    ParametricMax out{candidates[0], values[0]};
    bool found = false;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
        if (values[k] < best - tie)
            continue;
        if (!found || candidates[k] < out.point) {
            out = {candidates[k], values[k]};
            found = true;
        }
    }
    return out;
}

DinkelbachResult dinkelbach(const QuadraticFractional& qf, double p_max, double tolerance,
                            std::size_t max_iterations)
{
    if (!(tolerance > 0.0))
        throw std::invalid_argument("dinkelbach: tolerance must be positive");

    DinkelbachResult result;
    if (!(p_max > 0.0))
        return result;

    double lambda = 0.0;
    for (std::size_t it = 0; it < max_iterations; ++it) {
        const ParametricMax step = maximize_parametric(qf, lambda, p_max);
        result.trace.lambdas.push_back(lambda);
        result.trace.iterates.push_back(step.point);
        result.trace.residuals.push_back(step.value);
        if (step.value <= tolerance) {
            result.point = step.point;
            result.lambda = qf.ratio(step.point);
            return result;
        }
        lambda = qf.ratio(step.point);
    }
    throw ConvergenceError("dinkelbach: no convergence after " + std::to_string(max_iterations) +
                           " iterations");
}

PowerPoint optimal_pair_power(const PairChannel& pc, double p_max, double tolerance)
{
    return dinkelbach(fractional_form(pc), p_max, tolerance).point;
}

GridOptimum grid_oracle(const PairChannel& pc, double p_max, std::size_t resolution)
{
    if (resolution < 2)
        throw std::invalid_argument("grid_oracle: resolution must be >= 2");

    const double step = p_max / static_cast<double>(resolution - 1);
    const auto node = [&](std::size_t k) {
        return k + 1 == resolution ? p_max : step * static_cast<double>(k);
    };
    GridOptimum best{{0.0, 0.0}, -1.0};
    for (std::size_t i = 0; i < resolution; ++i) {
        const double p1 = node(i);
        for (std::size_t j = 0; j < resolution; ++j) {
            const double p2 = node(j);
            const double sinr1 = p1 * pc.a / (pc.noise + p2 * pc.b);
            const double sinr2 = p2 * pc.c / (pc.noise + p1 * pc.d);
            const double ratio = (1.0 + sinr1) * (1.0 + sinr2) - 1.0;
            if (ratio > best.ratio)
                best = {{p1, p2}, ratio};
        }
    }
    return best;
}

} // namespace twocell
