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


// Command-line driver: sweep, verify, costs, plan-dump, decompose.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "qchan/basis.h"
#include "qchan/channel.h"
#include "qchan/compiler.h"
#include "qchan/errors.h"
#include "qchan/gates.h"
#include "qchan/serialize.h"
#include "qchan/simulator.h"
#include "qchan/sweep.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDeviation = 1;
constexpr int kExitError = 2;

using Overrides = std::vector<std::pair<std::string, std::string>>;

std::string read_text(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw qchan::Error(qchan::ErrorKind::kIo, "cannot open '" + path + "'");
    }
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void emit(const std::string &path, const std::string &text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        std::cout.flush();
    } else {
        qchan::write_text_file(path, text);
    }
}

std::string format_dev(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

/// Registers `--name` as a string override applied through apply_setting.
void add_override(CLI::App *app, Overrides &ov, const std::string &flag, const std::string &key,
                  const std::string &help) {
    app->add_option_function<std::string>(
        flag, [&ov, key](const std::string &v) { ov.emplace_back(key, v); }, help);
}

struct SweepArgs {
    std::string config;
    std::vector<std::string> sections;
    Overrides overrides;
    std::size_t threads = 0;
};

int run_sweep_command(const SweepArgs &args) {
    std::vector<qchan::SweepConfig> configs;
    if (args.config.empty()) {
        configs.emplace_back();
    } else {
        configs = qchan::load_sweep_config(args.config);
    }
    if (!args.sections.empty()) {
        std::vector<qchan::SweepConfig> chosen;
        for (const auto &name : args.sections) {
            bool found = false;
            for (const auto &c : configs) {
                if (c.name == name) {
                    chosen.push_back(c);
                    found = true;
                }
            }
            if (!found) {
                throw qchan::Error(qchan::ErrorKind::kConfig, "no section named '" + name + "'");
            }
        }
        configs = std::move(chosen);
    }
    for (auto &cfg : configs) {
        for (const auto &[key, value] : args.overrides) {
            qchan::apply_setting(cfg, key, value);
        }
    }
    // Sections sharing one output file each get "<stem>_<section><ext>".
    std::map<std::string, int> uses;
    for (const auto &cfg : configs) {
        if (!cfg.out_path.empty() && cfg.out_path != "-") ++uses[cfg.out_path];
    }
    for (auto &cfg : configs) {
        if (uses.count(cfg.out_path) && uses[cfg.out_path] > 1) {
            const std::filesystem::path p(cfg.out_path);
            cfg.out_path = (p.parent_path() /
                            (p.stem().string() + "_" + cfg.name + p.extension().string()))
                               .string();
        }
    }
    bool all_ok = true;
    for (const auto &cfg : configs) {
        const auto rows = qchan::run_sweep(cfg, args.threads);
        double worst = 0.0;
        for (const auto &r : rows) {
            worst = std::max(worst, r.plan_deviation);
            if (!(r.plan_deviation < qchan::kPlanDeviationLimit)) all_ok = false;
        }
        const std::string text = cfg.format == qchan::OutputFormat::kCsv
                                     ? qchan::rows_to_csv(rows, cfg.columns)
                                     : qchan::rows_to_json(rows, cfg.columns);
        emit(cfg.out_path, text);
        std::cerr << "sweep " << cfg.name << ": " << rows.size()
                  << " points, max plan_deviation " << format_dev(worst) << "\n";
    }
    return all_ok ? kExitOk : kExitDeviation;
}

struct VerifyArgs {
    std::string channel;
    std::optional<double> param;
    std::string grid;
    std::string strategy = "auto";
    std::string basis = "pauli";
    std::string plan_path;
    std::size_t trials = 20;
    std::uint64_t seed = 0;
};

int run_verify_command(const VerifyArgs &args) {
    const qchan::ChannelKind kind = qchan::parse_channel_kind(args.channel);
    std::vector<double> params;
    if (args.param) {
        params.push_back(*args.param);
    } else {
        params = qchan::parse_grid(args.grid.empty() ? "0:1:0.05" : args.grid).points();
    }
    std::optional<qchan::SimulationPlan> loaded;
    if (!args.plan_path.empty()) {
        if (params.size() != 1) {
            throw qchan::Error(qchan::ErrorKind::kConfig, "--plan needs a single --param");
        }
        loaded = qchan::plan_from_json(read_text(args.plan_path));
    }
    const auto strategy = qchan::parse_strategy(args.strategy);
    const auto basis = qchan::parse_basis_kind(args.basis);
    bool all_ok = true;
    std::cout << "param,plan_label,plan_deviation\n";
    for (std::size_t i = 0; i < params.size(); ++i) {
        const qchan::ChannelPreset preset{kind, params[i]};
        const qchan::KrausChannel ch = qchan::channel_preset(preset);
        const qchan::SimulationPlan plan =
            loaded ? *loaded : qchan::compile_preset(preset, strategy, basis);
        std::seed_seq seq{static_cast<std::uint32_t>(args.seed),
                          static_cast<std::uint32_t>(args.seed >> 32),
                          static_cast<std::uint32_t>(i)};
        qchan::Rng rng(seq);
        const double dev = qchan::verify_plan(plan, ch, args.trials, rng);
        if (!(dev < qchan::kPlanDeviationLimit)) all_ok = false;
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.12g", params[i]);
        std::cout << buf << "," << plan.label << "," << format_dev(dev) << "\n";
    }
    return all_ok ? kExitOk : kExitDeviation;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"qchan: quantum channel simulation via unitary dilation"};
    app.require_subcommand(1);

    SweepArgs sweep;
    auto *sweep_cmd = app.add_subcommand("sweep", "Evaluate a channel over a parameter grid");
    sweep_cmd->add_option("--config", sweep.config, "Config file with [section] key = value blocks")
        ->check(CLI::ExistingFile);
    sweep_cmd->add_option("--section", sweep.sections, "Run only the named section(s)");
    sweep_cmd->add_option("--threads", sweep.threads, "Worker threads (0 = hardware)");
    add_override(sweep_cmd, sweep.overrides, "--channel", "channel", "pd | ad | dep");
    add_override(sweep_cmd, sweep.overrides, "--strategy", "strategy",
                 "auto | diagonal | matched | branch | paper");
    add_override(sweep_cmd, sweep.overrides, "--basis", "basis", "pauli | weyl");
    add_override(sweep_cmd, sweep.overrides, "--input", "input", "X, -Y, Z, ... or x,y,z");
    add_override(sweep_cmd, sweep.overrides, "--grid", "grid", "start:stop:step");
    add_override(sweep_cmd, sweep.overrides, "--columns", "columns", "Comma-separated column list");
    add_override(sweep_cmd, sweep.overrides, "--out", "out", "Output file (default stdout)");
    add_override(sweep_cmd, sweep.overrides, "--format", "format", "csv | json");
    add_override(sweep_cmd, sweep.overrides, "--verify-trials", "verify_trials",
                 "Random states per plan check");
    add_override(sweep_cmd, sweep.overrides, "--seed", "seed", "Seed for plan checks");

    VerifyArgs verify;
    auto *verify_cmd = app.add_subcommand("verify", "Check compiled plans against the Kraus oracle");
    verify_cmd->add_option("--channel", verify.channel, "pd | ad | dep")->required();
    auto *param_opt = verify_cmd->add_option("--param", verify.param, "Single channel parameter");
    verify_cmd->add_option("--grid", verify.grid, "start:stop:step")->excludes(param_opt);
    verify_cmd->add_option("--strategy", verify.strategy, "Compiler strategy");
    verify_cmd->add_option("--basis", verify.basis, "pauli | weyl");
    verify_cmd->add_option("--plan", verify.plan_path, "Plan JSON to check instead of compiling")
        ->check(CLI::ExistingFile);
    verify_cmd->add_option("--verify-trials", verify.trials, "Random states per plan");
    verify_cmd->add_option("--seed", verify.seed, "Seed for random states");

    std::size_t n_max = 6;
    std::string costs_format = "csv";
    std::string costs_out;
    auto *costs_cmd = app.add_subcommand("costs", "Gate-cost model table and measured counts");
    costs_cmd->add_option("--n-max", n_max, "Largest system width")->check(CLI::Range(1, 8));
    costs_cmd->add_option("--format", costs_format, "csv | json");
    costs_cmd->add_option("--out", costs_out, "Output file (default stdout)");

    std::string dump_channel;
    double dump_param = 0.0;
    std::string dump_strategy = "auto";
    std::string dump_basis = "pauli";
    std::string dump_out;
    auto *dump_cmd = app.add_subcommand("plan-dump", "Serialize a compiled plan to JSON");
    dump_cmd->add_option("--channel", dump_channel, "pd | ad | dep")->required();
    dump_cmd->add_option("--param", dump_param, "Channel parameter")->required();
    dump_cmd->add_option("--strategy", dump_strategy, "Compiler strategy");
    dump_cmd->add_option("--basis", dump_basis, "pauli | weyl");
    dump_cmd->add_option("--out", dump_out, "Output file (default stdout)");

    std::size_t controls = 1;
    std::string target = "X";
    double phase = 0.0;
    std::string decompose_out;
    auto *dec_cmd = app.add_subcommand("decompose", "Emit the gate list of C_m(P) as JSON");
    dec_cmd->add_option("--controls", controls, "Number of control wires m");
    dec_cmd->add_option("--target", target, "Pauli string, e.g. ZX");
    dec_cmd->add_option("--phase", phase, "Global phase of the target in radians");
    dec_cmd->add_option("--out", decompose_out, "Output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*sweep_cmd) {
            return run_sweep_command(sweep);
        }
        if (*verify_cmd) {
            return run_verify_command(verify);
        }
        if (*costs_cmd) {
            const auto rows = qchan::report_costs(n_max);
            const auto fmt = qchan::parse_output_format(costs_format);
            emit(costs_out, fmt == qchan::OutputFormat::kCsv ? qchan::costs_to_csv(rows)
                                                             : qchan::costs_to_json(rows));
            return kExitOk;
        }
        if (*dump_cmd) {
            const qchan::ChannelPreset preset{qchan::parse_channel_kind(dump_channel), dump_param};
            const auto plan = qchan::compile_preset(preset, qchan::parse_strategy(dump_strategy),
                                                    qchan::parse_basis_kind(dump_basis));
            emit(dump_out, qchan::plan_to_json(plan));
            return kExitOk;
        }
        if (*dec_cmd) {
            qchan::LocalUnitary u = qchan::LocalUnitary::pauli(target);
            u.global_phase = std::polar(1.0, phase);
            const auto gates = qchan::decompose_controlled(controls, u);
            const auto counts = qchan::count_gates(gates);
            emit(decompose_out, qchan::gates_to_json(gates));
            std::cerr << "C_" << controls << "(" << target << "): " << counts.single
                      << " single-qubit, " << counts.cnot << " CNOT\n";
            return kExitOk;
        }
    } catch (const qchan::Error &e) {
        std::cerr << "qchan: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
