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

#include "twocell/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <fmt/format.h>

#include "twocell/assign.hpp"
#include "twocell/random.hpp"
#include "twocell/rate.hpp"

namespace twocell {

std::string_view method_name(Method m) noexcept
{
    switch (m) {
    case Method::exhaustive_opt: return "exhaustive_opt";
    case Method::hungarian_opt: return "hungarian_opt";
    case Method::hungarian_full: return "hungarian_full";
    case Method::exhaustive_full: return "exhaustive_full";
    case Method::random_full: return "random_full";
    }
    return "unknown";
}

Method parse_method(std::string_view name)
{
    if (name == "A")
        return Method::exhaustive_opt;
    if (name == "B")
        return Method::hungarian_opt;
    if (name == "C")
        throw UnimplementedMethod("method C (DC programming baseline) is unimplemented");
    for (Method m : kAllMethods)
        if (method_name(m) == name)
            return m;
    throw ConfigError("unknown method '" + std::string(name) + "'");
}

std::vector<Method> parse_methods(std::string_view list)
{
    std::vector<Method> out;
    std::size_t start = 0;
    while (start <= list.size()) {
        const std::size_t comma = std::min(list.find(',', start), list.size());
        const std::string_view token = list.substr(start, comma - start);
        if (!token.empty()) {
            const Method m = parse_method(token);
            if (std::find(out.begin(), out.end(), m) == out.end())
                out.push_back(m);
        }
        start = comma + 1;
    }
    if (out.empty())
        throw ConfigError("no methods given");
    return out;
}

double evaluate_method(Method m, const ChannelRealization& r, const SimConfig& cfg, double snr_db,
                       std::uint64_t trial_index)
{
    const double p_max = cfg.p_max(snr_db);
    const double noise = cfg.noise_power;
    const double delta = cfg.dinkelbach_tolerance;

    switch (m) {
    case Method::exhaustive_opt:
    case Method::exhaustive_full: {
        const PowerPolicy policy =
            m == Method::exhaustive_opt ? PowerPolicy::optimal : PowerPolicy::full;
        const JointSolution js = assign_exhaustive(r, noise, p_max, policy, delta);
        return sum_rate(r, js.assignment, js.powers, noise);
    }
    case Method::hungarian_opt:
    case Method::hungarian_full: {
        const PowerPolicy policy =
            m == Method::hungarian_opt ? PowerPolicy::optimal : PowerPolicy::full;
        const Assignment asg = assign_hungarian(r, p_max, noise);
        return sum_rate(r, asg, allocate_power(r, asg, noise, p_max, policy, delta), noise);
    }
    case Method::random_full: {
        Stream stream(cfg.master_seed, trial_index, StreamTag::random_assignment);
        const Assignment asg = assign_random(r.num_subchannels(), stream);
        return sum_rate(r, asg, allocate_power(r, asg, noise, p_max, PowerPolicy::full), noise);
    }
    }
    throw std::logic_error("evaluate_method: bad method");
}

const SweepRow& SweepResult::at(Method m, double snr_db) const
{
    for (const auto& row : rows)
        if (row.method == m && row.snr_db == snr_db)
            return row;
    throw std::out_of_range("SweepResult: no row for " + std::string(method_name(m)));
}

TrialTable run_trials(const SimConfig& cfg, const std::vector<Method>& methods,
                      std::size_t threads)
{
    cfg.validate();
    if (methods.empty())
        throw ConfigError("run_trials: no methods given");
    for (Method m : methods)
        if ((m == Method::exhaustive_opt || m == Method::exhaustive_full) &&
            cfg.num_subchannels > kExhaustiveMaxSubchannels)
            throw ConfigError("exhaustive methods support at most 6 sub-channels");

    TrialTable table(cfg.trials);
    const auto run_one = [&](std::size_t t) {
        const ChannelRealization r = generate_realization(cfg, t);
        auto& per_snr = table[t];
        per_snr.assign(cfg.snr_grid.size(), std::vector<double>(methods.size()));
        for (std::size_t s = 0; s < cfg.snr_grid.size(); ++s)
            for (std::size_t k = 0; k < methods.size(); ++k)
                per_snr[s][k] = evaluate_method(methods[k], r, cfg, cfg.snr_grid[s], t);
    };

    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min(threads, cfg.trials);
    if (threads <= 1) {
        for (std::size_t t = 0; t < cfg.trials; ++t)
            run_one(t);
        return table;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < threads; ++w)
        pool.emplace_back([&] {
            for (std::size_t t = next++; t < cfg.trials && !failed; t = next++) {
                try {
                    run_one(t);
                } catch (...) {
                    if (!failed.exchange(true))
                        failure = std::current_exception();
                }
            }
        });
    for (auto& th : pool)
        th.join();
    if (failure)
        std::rethrow_exception(failure);
    return table;
}

SweepResult run_sweep(const SimConfig& cfg, const std::vector<Method>& methods,
                      std::size_t threads)
{
    const TrialTable table = run_trials(cfg, methods, threads);
    const double n = static_cast<double>(cfg.trials);

    SweepResult sr;
    for (std::size_t k = 0; k < methods.size(); ++k)
        for (std::size_t s = 0; s < cfg.snr_grid.size(); ++s) {
            double sum = 0.0;
            for (const auto& trial : table)
                sum += trial[s][k];
            const double mean = sum / n;
            double sq = 0.0;
            for (const auto& trial : table)
                sq += (trial[s][k] - mean) * (trial[s][k] - mean);
            const double std_error = cfg.trials > 1 ? std::sqrt(sq / (n - 1.0) / n) : 0.0;
            sr.rows.push_back({methods[k], cfg.snr_grid[s], cfg.trials, mean, std_error});
        }
    std::stable_sort(sr.rows.begin(), sr.rows.end(), [](const SweepRow& x, const SweepRow& y) {
        const auto nx = method_name(x.method), ny = method_name(y.method);
        return nx != ny ? nx < ny : x.snr_db < y.snr_db;
    });
    return sr;
}

std::string format_fixed6(double v)
{
    std::string s = fmt::format("{:.6f}", v);
    if (s == "-0.000000")
        s.erase(0, 1);
    return s;
}

std::string to_csv(const SweepResult& sr)
{
    std::string out(kCsvHeader);
    out += '\n';
    for (const auto& row : sr.rows)
        out += fmt::format("{},{},{},{},{}\n", method_name(row.method), format_fixed6(row.snr_db),
                           row.trials, format_fixed6(row.mean_sum_rate),
                           format_fixed6(row.std_error));
    return out;
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& contents)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    out << contents;
    out.flush();
    if (!out)
        throw std::runtime_error("failed writing '" + path.string() + "'");
}

double parse_double(const std::string& field)
{
    std::size_t used = 0;
    const double v = std::stod(field, &used);
    if (used != field.size())
        throw std::runtime_error("malformed number '" + field + "'");
    return v;
}

} // namespace

void emit_csv(const SweepResult& sr, const std::filesystem::path& path)
{
    write_file(path, to_csv(sr));
}

SweepResult parse_csv(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader)
        throw std::runtime_error("CSV header mismatch");

    SweepResult sr;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::vector<std::string> fields;
        std::istringstream ls(line);
        for (std::string f; std::getline(ls, f, ',');)
            fields.push_back(f);
        if (fields.size() != 5)
            throw std::runtime_error("CSV row must have 5 fields: " + line);
        try {
            sr.rows.push_back({parse_method(fields[0]), parse_double(fields[1]),
                               static_cast<std::size_t>(std::stoull(fields[2])),
                               parse_double(fields[3]), parse_double(fields[4])});
        } catch (const std::logic_error& e) {
            throw std::runtime_error("malformed CSV row '" + line + "': " + e.what());
        }
    }
    return sr;
}

SweepResult read_csv(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_csv(ss.str());
}

void emit_plot(const SweepResult& sr, const std::filesystem::path& path)
{
    write_file(path, to_svg(sr));
}

} // namespace twocell
