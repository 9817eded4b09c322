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

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "twocell/harness.hpp"

using namespace twocell;

namespace {

std::filesystem::path temp_path(const std::string& name)
{
    return std::filesystem::temp_directory_path() / ("twocell_test_" + name);
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

SimConfig small_config()
{
    SimConfig cfg;
    cfg.trials = 40;
    cfg.snr_grid = {-10, 0, 10, 20};
    return cfg;
}

} // namespace

TEST_CASE("method names")
{
    for (Method m : kAllMethods)
        CHECK(parse_method(method_name(m)) == m);
    CHECK(parse_method("A") == Method::exhaustive_opt);
    CHECK(parse_method("B") == Method::hungarian_opt);
    CHECK_THROWS_AS(parse_method("C"), UnimplementedMethod);
    CHECK_THROWS_AS(parse_method("dc"), ConfigError);
    CHECK(parse_methods("B,A,B") == std::vector<Method>{Method::hungarian_opt,
                                                         Method::exhaustive_opt});
    CHECK_THROWS_AS(parse_methods(","), ConfigError);
}

TEST_CASE("evaluate_method per-instance ordering")
{
    SimConfig cfg;
    for (std::uint64_t t = 0; t < 60; ++t) {
        const auto r = generate_realization(cfg, t);
        for (double snr : {-10.0, 0.0, 10.0, 20.0, 30.0}) {
            const double a = evaluate_method(Method::exhaustive_opt, r, cfg, snr, t);
            const double b = evaluate_method(Method::hungarian_opt, r, cfg, snr, t);
            const double hf = evaluate_method(Method::hungarian_full, r, cfg, snr, t);
            const double ef = evaluate_method(Method::exhaustive_full, r, cfg, snr, t);
            CHECK(a >= b);
            CHECK(b >= hf);
            CHECK(a >= ef);
            CHECK(ef >= hf);
        }
    }
}

TEST_CASE("single sub-channel: deterministic methods coincide")
{
    SimConfig cfg;
    cfg.num_subchannels = cfg.users_per_cell = 1;
    const auto r = generate_realization(cfg, 2);
    for (double snr : {-10.0, 10.0, 30.0}) {
        const double a = evaluate_method(Method::exhaustive_opt, r, cfg, snr, 2);
        CHECK(evaluate_method(Method::hungarian_opt, r, cfg, snr, 2) == a);
        const double f = evaluate_method(Method::exhaustive_full, r, cfg, snr, 2);
        CHECK(evaluate_method(Method::hungarian_full, r, cfg, snr, 2) == f);
        CHECK(evaluate_method(Method::random_full, r, cfg, snr, 2) == f);
    }
}

TEST_CASE("run_sweep with one trial reproduces evaluate_method")
{
    SimConfig cfg;
    cfg.trials = 1;
    cfg.snr_grid = {5.0};
    const std::vector<Method> methods(std::begin(kAllMethods), std::end(kAllMethods));
    const SweepResult sr = run_sweep(cfg, methods, 1);
    REQUIRE(sr.rows.size() == methods.size());
    const auto r = generate_realization(cfg, 0);
    for (Method m : methods) {
        const SweepRow& row = sr.at(m, 5.0);
        CHECK(row.trials == 1);
        CHECK(row.mean_sum_rate == evaluate_method(m, r, cfg, 5.0, 0));
        CHECK(row.std_error == 0.0);
    }
}

TEST_CASE("run_trials is independent of trial count and thread count")
{
    SimConfig cfg = small_config();
    const std::vector<Method> methods = {Method::hungarian_opt, Method::random_full};
    const TrialTable base = run_trials(cfg, methods, 1);
    cfg.trials = 80;
    const TrialTable doubled = run_trials(cfg, methods, 3);
    for (std::size_t t = 0; t < base.size(); ++t)
        CHECK(doubled[t] == base[t]);

    cfg.trials = 40;
    CHECK(run_trials(cfg, methods, 4) == base);
    std::vector<Method> reversed(methods.rbegin(), methods.rend());
    const TrialTable swapped = run_trials(cfg, reversed, 2);
    for (std::size_t t = 0; t < base.size(); ++t)
        for (std::size_t s = 0; s < cfg.snr_grid.size(); ++s)
            CHECK(swapped[t][s][0] == base[t][s][1]);
}

TEST_CASE("run_sweep rows are sorted and complete")
{
    const SimConfig cfg = small_config();
    const SweepResult sr = run_sweep(cfg, {Method::random_full, Method::exhaustive_opt});
    REQUIRE(sr.rows.size() == 8);
    CHECK(sr.rows.front().method == Method::exhaustive_opt);
    CHECK(sr.rows.back().method == Method::random_full);
    for (std::size_t k = 1; k < 4; ++k)
        CHECK(sr.rows[k].snr_db > sr.rows[k - 1].snr_db);
    for (const auto& row : sr.rows) {
        CHECK(row.trials == cfg.trials);
        CHECK(row.mean_sum_rate >= 0.0);
        CHECK(row.std_error > 0.0);
    }
}

TEST_CASE("run_sweep rejects bad input")
{
    SimConfig cfg = small_config();
    CHECK_THROWS_AS(run_sweep(cfg, {}), ConfigError);
    cfg.num_subchannels = cfg.users_per_cell = 7;
    CHECK_THROWS_AS(run_sweep(cfg, {Method::exhaustive_full}), ConfigError);
    cfg.snr_grid.clear();
    CHECK_THROWS_AS(run_sweep(cfg, {Method::hungarian_opt}), ConfigError);
}

TEST_CASE("CSV emission")
{
    SweepResult empty;
    CHECK(to_csv(empty) == "method,snr_db,trials,mean_sum_rate,std_error\n");

    SweepResult one;
    one.rows.push_back({Method::hungarian_opt, -5.0, 10, 1.23456789, 0.5});
    CHECK(to_csv(one) == "method,snr_db,trials,mean_sum_rate,std_error\n"
                         "hungarian_opt,-5.000000,10,1.234568,0.500000\n");

    const SweepResult sr = run_sweep(small_config(), {Method::hungarian_full, Method::random_full});
    const auto p1 = temp_path("a.csv"), p2 = temp_path("b.csv");
    emit_csv(sr, p1);
    emit_csv(run_sweep(small_config(), {Method::random_full, Method::hungarian_full}), p2);
    CHECK(slurp(p1) == slurp(p2));

    const SweepResult back = read_csv(p1);
    REQUIRE(back.rows.size() == sr.rows.size());
    emit_csv(back, p2);
    CHECK(slurp(p1) == slurp(p2));

    CHECK_THROWS_AS(emit_csv(sr, "/nonexistent-dir/x.csv"), std::runtime_error);
    CHECK_THROWS_AS(parse_csv("wrong,header\n"), std::runtime_error);
    CHECK_THROWS_AS(parse_csv(std::string(kCsvHeader) + "\nhungarian_opt,1,2\n"),
                    std::runtime_error);
    std::filesystem::remove(p1);
    std::filesystem::remove(p2);
}

TEST_CASE("SVG plot is a view of the sweep result")
{
    const SimConfig cfg = small_config();
    const std::vector<Method> methods = {Method::exhaustive_opt, Method::hungarian_opt,
                                         Method::random_full};
    const SweepResult sr = run_sweep(cfg, methods);
    const std::string svg = to_svg(sr);

    CHECK(svg.rfind("<svg", 0) == 0);
    const std::regex series_re("class=\"series\" data-method=\"([a-z_]+)\"");
    const auto n_series = std::distance(std::sregex_iterator(svg.begin(), svg.end(), series_re),
                                        std::sregex_iterator());
    CHECK(n_series == static_cast<long>(methods.size()));
    CHECK(svg.find(">-10</text>") != std::string::npos);
    CHECK(svg.find(">20</text>") != std::string::npos);
    CHECK(svg.find("data-values=\"-10.000000:") != std::string::npos);

    const auto csv = temp_path("plot.csv");
    emit_csv(sr, csv);
    CHECK(to_svg(read_csv(csv)) == svg);

    const auto path = temp_path("plot.svg");
    emit_plot(sr, path);
    CHECK(slurp(path) == svg);
    CHECK_THROWS_AS(emit_plot(sr, "/nonexistent-dir/x.svg"), std::runtime_error);
    std::filesystem::remove(csv);
    std::filesystem::remove(path);
}
