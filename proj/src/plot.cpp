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

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include <fmt/format.h>

#include "twocell/harness.hpp"

namespace twocell {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 190.0;
constexpr double kTop = 30.0;
constexpr double kBottom = 60.0;

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                    "#9467bd", "#8c564b", "#e377c2"};

double quantize(double v)
{
    return std::stod(format_fixed6(v));
}

std::string px(double v)
{
    return fmt::format("{:.2f}", v);
}

} // namespace

std::string to_svg(const SweepResult& sr)
{
    // Series keyed by method in row order (rows are already sorted).
    std::vector<Method> order;
    std::map<Method, std::vector<std::pair<double, double>>> series;
    double x_min = 0.0, x_max = 1.0, y_max = 0.0;
    bool first = true;
    for (const auto& row : sr.rows) {
        if (!series.contains(row.method))
            order.push_back(row.method);
        const double x = quantize(row.snr_db);
        const double y = quantize(row.mean_sum_rate);
        series[row.method].emplace_back(x, y);
        x_min = first ? x : std::min(x_min, x);
        x_max = first ? x : std::max(x_max, x);
        y_max = std::max(y_max, y);
        first = false;
    }
    if (x_max <= x_min)
        x_max = x_min + 1.0;
    // y-axis: whole bits/s/Hz, at most ~10 ticks, top on a tick.
    const double y_step = std::max(1.0, std::ceil(std::ceil(y_max) / 10.0));
    const double y_top = std::max(1.0, std::ceil(y_max / y_step)) * y_step;

    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    const auto sx = [&](double x) { return kLeft + (x - x_min) / (x_max - x_min) * plot_w; };
    const auto sy = [&](double y) { return kTop + plot_h - y / y_top * plot_h; };

    std::string svg;
    svg += fmt::format("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" "
                       "viewBox=\"0 0 {} {}\" font-family=\"sans-serif\" font-size=\"12\">\n",
                       kWidth, kHeight, kWidth, kHeight);
    svg += fmt::format("<rect x=\"0\" y=\"0\" width=\"{}\" height=\"{}\" fill=\"white\"/>\n",
                       kWidth, kHeight);
    svg += fmt::format("<g class=\"axes\" stroke=\"black\" fill=\"none\">"
                       "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\"/></g>\n",
                       px(kLeft), px(kTop), px(plot_w), px(plot_h));

    // x ticks at every distinct SNR, y ticks at up to 10 steps.
    std::vector<double> xs;
    for (const auto& [m, pts] : series)
        for (const auto& [x, y] : pts)
            xs.push_back(x);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    svg += "<g class=\"xticks\" text-anchor=\"middle\">\n";
    for (double x : xs)
        svg += fmt::format("<line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\" stroke=\"black\"/>"
                           "<text x=\"{0}\" y=\"{3}\">{4}</text>\n",
                           px(sx(x)), px(kTop + plot_h), px(kTop + plot_h + 5),
                           px(kTop + plot_h + 20), fmt::format("{:g}", x));
    svg += "</g>\n";
    svg += "<g class=\"yticks\" text-anchor=\"end\">\n";
    for (double y = 0.0; y <= y_top + 1e-9; y += y_step)
        svg += fmt::format("<line x1=\"{0}\" y1=\"{1}\" x2=\"{2}\" y2=\"{1}\" stroke=\"#dddddd\"/>"
                           "<text x=\"{3}\" y=\"{4}\">{5}</text>\n",
                           px(kLeft), px(sy(y)), px(kLeft + plot_w), px(kLeft - 6),
                           px(sy(y) + 4), fmt::format("{:g}", y));
    svg += "</g>\n";
    svg += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">SNR (dB)</text>\n",
                       px(kLeft + plot_w / 2), px(kHeight - 15));
    svg += fmt::format("<text x=\"18\" y=\"{0}\" text-anchor=\"middle\" "
                       "transform=\"rotate(-90 18 {0})\">Average sum rate (bits/s/Hz)</text>\n",
                       px(kTop + plot_h / 2));

    for (std::size_t k = 0; k < order.size(); ++k) {
        const Method m = order[k];
        const char* colour = kPalette[k % std::size(kPalette)];
        auto pts = series[m];
        std::sort(pts.begin(), pts.end());
        std::string points, data;
        for (const auto& [x, y] : pts) {
            points += fmt::format("{}{},{}", points.empty() ? "" : " ", px(sx(x)), px(sy(y)));
            data += fmt::format("{}{}:{}", data.empty() ? "" : ";", format_fixed6(x),
                                format_fixed6(y));
        }
        svg += fmt::format("<g class=\"series\" data-method=\"{}\" data-values=\"{}\">\n",
                           method_name(m), data);
        svg += fmt::format("<polyline fill=\"none\" stroke=\"{}\" stroke-width=\"2\" "
                           "points=\"{}\"/>\n",
                           colour, points);
        for (const auto& [x, y] : pts)
            svg += fmt::format("<circle cx=\"{}\" cy=\"{}\" r=\"3\" fill=\"{}\"/>\n", px(sx(x)),
                               px(sy(y)), colour);
        const double ly = kTop + 10 + 20.0 * static_cast<double>(k);
        svg += fmt::format("<line x1=\"{0}\" y1=\"{1}\" x2=\"{2}\" y2=\"{1}\" stroke=\"{3}\" "
                           "stroke-width=\"2\"/><text x=\"{4}\" y=\"{5}\">{6}</text>\n",
                           px(kLeft + plot_w + 15), px(ly), px(kLeft + plot_w + 40), colour,
                           px(kLeft + plot_w + 46), px(ly + 4), method_name(m));
        svg += "</g>\n";
    }
    svg += "</svg>\n";
    return svg;
}

} // namespace twocell
