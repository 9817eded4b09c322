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

// Command-line front end: Monte Carlo sweeps ("run") and oracle checks ("verify").

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "twocell/errors.hpp"
#include "twocell/harness.hpp"
#include "twocell/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitVerify = 2;

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

// key=value lines become "--key value" tokens; '#' starts a comment.
std::vector<std::string> read_config_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw twocell::ConfigError("cannot read config file '" + path + "'");
    std::vector<std::string> tokens;
    std::string line;
    for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw twocell::ConfigError(path + ":" + std::to_string(lineno) +
                                       ": expected key=value");
        std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.rfind("--", 0) != 0)
            key = "--" + key;
        tokens.push_back(key);
        tokens.push_back(value);
    }
    return tokens;
}

// Arguments for CLI11 with the config file entries ahead of the explicit flags.
std::vector<std::string> expand_arguments(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    std::vector<std::string> explicit_args;
    std::string config_path;
    for (std::size_t k = 0; k < args.size(); ++k) {
        if (args[k] == "--config" && k + 1 < args.size()) {
            config_path = args[++k];
        } else if (args[k].rfind("--config=", 0) == 0) {
            config_path = args[k].substr(9);
        } else {
            explicit_args.push_back(args[k]);
        }
    }
    if (config_path.empty() || explicit_args.empty())
        return explicit_args;

    std::vector<std::string> out{explicit_args.front()};
    for (auto& t : read_config_file(config_path))
        out.push_back(std::move(t));
    out.insert(out.end(), explicit_args.begin() + 1, explicit_args.end());
    return out;
}

std::vector<double> snr_range(double start, double stop, double step)
{
    if (!(step > 0.0) || !std::isfinite(start) || !std::isfinite(stop) || stop < start)
        throw twocell::ConfigError("SNR range needs start <= stop and step > 0");
    std::vector<double> grid;
    for (std::size_t k = 0;; ++k) {
        const double v = start + static_cast<double>(k) * step;
        if (v > stop + 1e-9 * step)
            break;
        grid.push_back(v);
    }
    return grid;
}

void print_report(const twocell::CheckReport& r)
{
    std::cout << (r.passed() ? "PASS " : "FAIL ") << r.name << ": " << r.cases << " cases, "
              << r.failures << " failures, worst error " << r.worst << "\n";
    if (!r.passed())
        std::cout << "  first failure: " << r.first_failure << "\n";
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Two-cell uplink OFDMA sub-channel assignment and power control simulator"};
    app.name("twocell_sim");
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    app.require_subcommand(1);
    app.add_option("--config", "key=value file mirroring the subcommand flags");

    twocell::SimConfig cfg;
    double snr_start = -10.0, snr_stop = 30.0, snr_step = 5.0;
    std::size_t users = cfg.num_subchannels;
    std::size_t threads = 0;
    std::string methods = "exhaustive_opt,hungarian_opt,hungarian_full,exhaustive_full,random_full";
    std::string out_path, plot_path;

    auto* run = app.add_subcommand("run", "Monte Carlo SNR sweep over the selected methods");
    run->add_option("--users", users, "Users per cell; also the number of sub-channels")
        ->capture_default_str();
    run->add_option("--trials", cfg.trials, "Channel realizations per SNR")->capture_default_str();
    run->add_option("--snr-start", snr_start, "First SNR point (dB)")->capture_default_str();
    run->add_option("--snr-stop", snr_stop, "Last SNR point (dB)")->capture_default_str();
    run->add_option("--snr-step", snr_step, "SNR step (dB)")->capture_default_str();
    run->add_option("--seed", cfg.master_seed, "Master seed")->capture_default_str();
    run->add_option("--alpha", cfg.path_loss_exponent, "Path-loss exponent")
        ->capture_default_str();
    run->add_option("--delta", cfg.dinkelbach_tolerance, "Dinkelbach tolerance")
        ->capture_default_str();
    run->add_option("--noise", cfg.noise_power, "Noise power (linear)")->capture_default_str();
    run->add_option("--own-distance", cfg.own_cell_distance, "User to own BS distance (m)")
        ->capture_default_str();
    run->add_option("--cross-distance", cfg.cross_cell_distance,
                    "User to neighbouring BS distance (m)")
        ->capture_default_str();
    run->add_option("--methods", methods,
                    "Comma-separated methods (exhaustive_opt|A, hungarian_opt|B, hungarian_full, "
                    "exhaustive_full, random_full)")
        ->capture_default_str();
    run->add_option("--threads", threads, "Worker threads (0 = hardware concurrency)")
        ->capture_default_str();
    run->add_option("--grid-resolution", cfg.grid_resolution, "Grid oracle resolution")
        ->capture_default_str();
    run->add_option("--out", out_path, "Output CSV path")->required();
    run->add_option("--plot", plot_path, "Optional SVG plot path");

    twocell::HungarianCheckOptions hungarian_opts;
    twocell::DinkelbachCheckOptions dinkelbach_opts;
    auto* verify = app.add_subcommand("verify", "Run the Hungarian and Dinkelbach oracle checks");
    verify->add_option("--grid-resolution", dinkelbach_opts.grid_resolution,
                       "Grid oracle resolution per axis")
        ->capture_default_str();
    verify->add_option("--delta", dinkelbach_opts.tolerance, "Dinkelbach tolerance")
        ->capture_default_str();
    verify->add_option("--assignment-cases", hungarian_opts.cases, "Random cost matrices")
        ->capture_default_str();
    verify->add_option("--pair-cases", dinkelbach_opts.cases, "Random pair channels")
        ->capture_default_str();
    verify->add_option("--seed", hungarian_opts.seed, "Seed for the random cases")
        ->capture_default_str();

    std::vector<std::string> args;
    try {
        args = expand_arguments(argc, argv);
    } catch (const twocell::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (*run) {
            cfg.num_subchannels = users;
            cfg.users_per_cell = users;
            cfg.snr_grid = snr_range(snr_start, snr_stop, snr_step);
            cfg.validate();
            const auto method_list = twocell::parse_methods(methods);
            const twocell::SweepResult sr = twocell::run_sweep(cfg, method_list, threads);
            twocell::emit_csv(sr, out_path);
            if (!plot_path.empty())
                twocell::emit_plot(sr, plot_path);
            std::cout << "wrote " << sr.rows.size() << " rows to " << out_path << "\n";
            return kExitOk;
        }
        if (*verify) {
            dinkelbach_opts.seed = hungarian_opts.seed + 1;
            if (dinkelbach_opts.grid_resolution < 2 || !(dinkelbach_opts.tolerance > 0.0))
                throw twocell::ConfigError("grid resolution must be >= 2 and delta > 0");
            const auto h = twocell::check_hungarian(hungarian_opts);
            print_report(h);
            const auto d = twocell::check_dinkelbach(dinkelbach_opts);
            print_report(d);
            return h.passed() && d.passed() ? kExitOk : kExitVerify;
        }
    } catch (const twocell::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    return kExitOk;
}
