// Copyright 2026 The qchansim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QCHAN_SWEEP_H_
#define QCHAN_SWEEP_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qchan/basis.h"
#include "qchan/channel.h"
#include "qchan/compiler.h"
#include "qchan/state.h"

namespace qchan {

/// Closed parameter grid start, start+step, ..., stop.
struct Grid {
    double start = 0.0;
    double stop = 1.0;
    double step = 0.05;

    /// Throws kConfig unless 0 <= start <= stop <= 1, step > 0 and the step
    /// divides the interval (within 1e-9).
    std::vector<double> points() const;
};

/// "start:stop:step".
Grid parse_grid(std::string_view text);

enum class OutputFormat { kCsv, kJson };

OutputFormat parse_output_format(std::string_view name);

struct SweepConfig {
    std::string name = "sweep";
    ChannelKind channel = ChannelKind::kPhaseDamping;
    Strategy strategy = Strategy::kAuto;
    BasisKind basis = BasisKind::kPauli;
    std::string input_name = "X";
    BlochVector input = {1.0, 0.0, 0.0};
    Grid grid;
    std::vector<std::string> columns;  // empty = all
    std::size_t verify_trials = 20;
    std::uint64_t seed = 0;
    OutputFormat format = OutputFormat::kCsv;
    std::string out_path;  // empty = stdout
};

/// Sets one field from its textual form. Keys: channel, strategy, basis, input,
/// grid, columns, verify_trials, seed, format, out. Throws kConfig.
void apply_setting(SweepConfig &cfg, std::string_view key, std::string_view value);

/// Flat key = value text with optional [section] headers, one sweep per
/// section. '#' and ';' start comments. Errors name the source, line and key.
std::vector<SweepConfig> parse_sweep_config(std::string_view text,
                                            std::string_view source = "<config>");
std::vector<SweepConfig> load_sweep_config(const std::filesystem::path &path);

struct SweepRow {
    double param = 0.0;
    double exp_x = 0.0;
    double exp_y = 0.0;
    double exp_z = 0.0;
    double fid_vs_input = 0.0;
    double fid_vs_theory = 0.0;
    double entropy = 0.0;
    double plan_deviation = 0.0;
};

inline constexpr double kPlanDeviationLimit = 1e-9;

/// One row per grid point, sorted by param. Grid points are evaluated on up to
/// `threads` workers (0 = hardware concurrency); each point draws its
/// verification states from a generator seeded by (seed, point index).
std::vector<SweepRow> run_sweep(const SweepConfig &cfg, std::size_t threads = 0);

/// CSV with header param,exp_x,exp_y,exp_z,fid_vs_input,fid_vs_theory,entropy,plan_deviation
/// (or the requested subset) and 12 significant digits.
std::string rows_to_csv(const std::vector<SweepRow> &rows,
                        const std::vector<std::string> &columns = {});
std::string rows_to_json(const std::vector<SweepRow> &rows,
                         const std::vector<std::string> &columns = {});

void emit_csv(const std::vector<SweepRow> &rows, const std::filesystem::path &path,
              const std::vector<std::string> &columns = {});
void emit_json(const std::vector<SweepRow> &rows, const std::filesystem::path &path,
               const std::vector<std::string> &columns = {});

/// Writes `content` to `path`, surfacing failures as Error(kIo) with the path.
void write_text_file(const std::filesystem::path &path, std::string_view content);

struct CostRow {
    std::size_t n = 0;
    double lcu_model = 0.0;
    double stinespring_model = 0.0;
    double ratio = 0.0;
    std::size_t ancilla_bound = 0;
    // measured[m-1] = total single + CNOT count of C_m(Z^{⊗n}); empty when m + n > 12.
    std::vector<std::optional<std::size_t>> measured;
};

inline constexpr std::size_t kCostMeasuredMaxControls = 4;

std::vector<CostRow> report_costs(std::size_t n_max);
std::string costs_to_csv(const std::vector<CostRow> &rows);
std::string costs_to_json(const std::vector<CostRow> &rows);

}  // namespace qchan

#endif  // QCHAN_SWEEP_H_
