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

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "twocell/channel.hpp"
#include "twocell/errors.hpp"

namespace twocell {

/// Methods of the comparison. exhaustive_opt and hungarian_opt are methods
/// "A" and "B"; the remaining three are the full-power and random baselines.
enum class Method {
    exhaustive_opt,
    hungarian_opt,
    hungarian_full,
    exhaustive_full,
    random_full,
};

inline constexpr Method kAllMethods[] = {Method::exhaustive_opt, Method::hungarian_opt,
                                         Method::hungarian_full, Method::exhaustive_full,
                                         Method::random_full};

/// Thrown for method names that are reserved but not provided ("C").
class UnimplementedMethod : public ConfigError {
public:
    using ConfigError::ConfigError;
};

std::string_view method_name(Method m) noexcept;

/// Accepts the names above plus the aliases "A" and "B".
/// Throws UnimplementedMethod for "C" and ConfigError for anything else.
Method parse_method(std::string_view name);

/// Comma-separated list of methods; duplicates are dropped, order kept.
std::vector<Method> parse_methods(std::string_view list);

/// Exact sum rate of one method on one realization at one SNR. trial_index
/// keys the random-assignment stream of random_full.
double evaluate_method(Method m, const ChannelRealization& r, const SimConfig& cfg, double snr_db,
                       std::uint64_t trial_index);

struct SweepRow {
    Method method;
    double snr_db;
    std::size_t trials;
    double mean_sum_rate;
    double std_error;
};

/// Sorted by (method name, snr_db).
struct SweepResult {
    std::vector<SweepRow> rows;

    [[nodiscard]] const SweepRow& at(Method m, double snr_db) const;
};

/// values[trial][snr index][method index] for the requested methods.
using TrialTable = std::vector<std::vector<std::vector<double>>>;

/// Per-trial sum rates. Each trial draws one realization, shared by every SNR
/// and method. Results are keyed by trial index, so any thread count gives the
/// same table. threads == 0 picks the hardware concurrency.
TrialTable run_trials(const SimConfig& cfg, const std::vector<Method>& methods,
                      std::size_t threads = 0);

/// Mean and standard error of run_trials per (method, SNR).
SweepResult run_sweep(const SimConfig& cfg, const std::vector<Method>& methods,
                      std::size_t threads = 0);

inline constexpr std::string_view kCsvHeader = "method,snr_db,trials,mean_sum_rate,std_error";

/// Six-decimal fixed formatting used by the CSV and the plot.
std::string format_fixed6(double v);

std::string to_csv(const SweepResult& sr);
/// Throws std::runtime_error if the file cannot be written.
void emit_csv(const SweepResult& sr, const std::filesystem::path& path);
/// Inverse of emit_csv. Throws std::runtime_error on a malformed file.
SweepResult read_csv(const std::filesystem::path& path);
SweepResult parse_csv(std::string_view text);

/// SVG line chart, one series per method, mean sum rate against SNR. Values
/// are quantized to the CSV precision first, so a plot drawn from a re-read
/// CSV is byte-identical.
std::string to_svg(const SweepResult& sr);
void emit_plot(const SweepResult& sr, const std::filesystem::path& path);

} // namespace twocell
