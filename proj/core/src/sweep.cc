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

#include "qchan/sweep.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <sstream>
#include <thread>

#include "qchan/errors.h"
#include "qchan/gates.h"
#include "qchan/simulator.h"

namespace qchan {

namespace {

const std::vector<std::string> &all_columns() {
    static const std::vector<std::string> cols = {"param",        "exp_x",         "exp_y",
                                                  "exp_z",        "fid_vs_input",  "fid_vs_theory",
                                                  "entropy",      "plan_deviation"};
    return cols;
}

double column_value(const SweepRow &r, std::string_view col) {
    if (col == "param") return r.param;
    if (col == "exp_x") return r.exp_x;
    if (col == "exp_y") return r.exp_y;
    if (col == "exp_z") return r.exp_z;
    if (col == "fid_vs_input") return r.fid_vs_input;
    if (col == "fid_vs_theory") return r.fid_vs_theory;
    if (col == "entropy") return r.entropy;
    if (col == "plan_deviation") return r.plan_deviation;
    throw Error(ErrorKind::kUnknownName, "unknown column '" + std::string(col) + "'");
}

std::string format12(double v) {
    if (v == 0.0) {
        v = 0.0;  // no "-0"
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

double parse_double(std::string_view text, std::string_view what) {
    const std::string s(trim(text));
    if (s.empty()) {
        throw Error(ErrorKind::kConfig, std::string(what) + ": empty number");
    }
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception &) {
        throw Error(ErrorKind::kConfig, std::string(what) + ": '" + s + "' is not a number");
    }
    if (used != s.size() || !std::isfinite(v)) {
        throw Error(ErrorKind::kConfig, std::string(what) + ": '" + s + "' is not a number");
    }
    return v;
}

std::uint64_t parse_unsigned(std::string_view text, std::string_view what) {
    const auto t = trim(text);
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
        throw Error(ErrorKind::kConfig, std::string(what) + ": '" + std::string(t) + "' is not a non-negative integer");
    }
    return v;
}

std::vector<std::string> resolve_columns(const std::vector<std::string> &columns) {
    return columns.empty() ? all_columns() : columns;
}

SweepRow evaluate_point(const SweepConfig &cfg, double param, std::size_t index) {
    const ChannelPreset preset{cfg.channel, param};
    const KrausChannel ch = channel_preset(preset);
    const SimulationPlan plan = compile_preset(preset, cfg.strategy, cfg.basis);
    const DensityMatrix rho_in = state_from_bloch(cfg.input);
    const ExecutionResult result = run_plan(plan, rho_in);
    const DensityMatrix theory = state_from_bloch(analytic_output(preset, cfg.input));
    const BlochVector b = bloch_vector(result.output);

    std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                      static_cast<std::uint32_t>(index)};
    Rng rng(seq);

    SweepRow row;
    row.param = param;
    row.exp_x = b.x;
    row.exp_y = b.y;
    row.exp_z = b.z;
    row.fid_vs_input = fidelity(result.output, rho_in);
    row.fid_vs_theory = fidelity(result.output, theory);
    row.entropy = von_neumann_entropy(result.output);
    row.plan_deviation = verify_plan(plan, ch, cfg.verify_trials, rng);
    return row;
}

}  // namespace

std::vector<double> Grid::points() const {
    if (!(start >= 0.0 && stop <= 1.0 && start <= stop)) {
        throw Error(ErrorKind::kConfig, "grid must satisfy 0 <= start <= stop <= 1");
    }
    if (!(step > 0.0)) {
        throw Error(ErrorKind::kConfig, "grid step must be positive");
    }
    const double span = stop - start;
    const double intervals = std::round(span / step);
    if (std::abs(intervals * step - span) > 1e-9) {
        throw Error(ErrorKind::kConfig, "grid step does not divide [start, stop]");
    }
    const auto n = static_cast<std::size_t>(intervals);
    std::vector<double> out;
    out.reserve(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        out.push_back(i == n ? stop : start + static_cast<double>(i) * step);
    }
    return out;
}

Grid parse_grid(std::string_view text) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) {
        throw Error(ErrorKind::kConfig, "grid must be start:stop:step, got '" + std::string(text) + "'");
    }
    Grid g{parse_double(parts[0], "grid start"), parse_double(parts[1], "grid stop"),
           parse_double(parts[2], "grid step")};
    g.points();
    return g;
}

OutputFormat parse_output_format(std::string_view name) {
    if (name == "csv") return OutputFormat::kCsv;
    if (name == "json") return OutputFormat::kJson;
    throw Error(ErrorKind::kUnknownName, "unknown format '" + std::string(name) + "'");
}

void apply_setting(SweepConfig &cfg, std::string_view key, std::string_view raw) {
    const auto value = trim(raw);
    try {
        if (key == "channel") {
            cfg.channel = parse_channel_kind(value);
        } else if (key == "strategy") {
            cfg.strategy = parse_strategy(value);
        } else if (key == "basis") {
            cfg.basis = parse_basis_kind(value);
        } else if (key == "input") {
            if (value.find(',') != std::string_view::npos) {
                const auto parts = split(value, ',');
                if (parts.size() != 3) {
                    throw Error(ErrorKind::kConfig, "explicit input needs three components x,y,z");
                }
                BlochVector v{parse_double(parts[0], "input x"), parse_double(parts[1], "input y"),
                              parse_double(parts[2], "input z")};
                if (v.norm() > 1.0 + 1e-10) {
                    throw Error(ErrorKind::kConfig, "input Bloch vector is longer than 1");
                }
                cfg.input = v;
            } else {
                cfg.input = named_input(value);
            }
            cfg.input_name = std::string(value);
        } else if (key == "grid") {
            cfg.grid = parse_grid(value);
        } else if (key == "columns") {
            std::vector<std::string> cols;
            for (const auto c : split(value, ',')) {
                if (std::find(all_columns().begin(), all_columns().end(), c) == all_columns().end()) {
                    throw Error(ErrorKind::kConfig, "unknown column '" + std::string(c) + "'");
                }
                cols.emplace_back(c);
            }
            cfg.columns = std::move(cols);
        } else if (key == "verify_trials" || key == "verify-trials") {
            cfg.verify_trials = parse_unsigned(value, "verify_trials");
        } else if (key == "seed") {
            cfg.seed = parse_unsigned(value, "seed");
        } else if (key == "format") {
            cfg.format = parse_output_format(value);
        } else if (key == "out") {
            cfg.out_path = std::string(value);
        } else if (key == "name") {
            cfg.name = std::string(value);
        } else {
            throw Error(ErrorKind::kConfig, "unknown key");
        }
    } catch (const Error &e) {
        throw Error(ErrorKind::kConfig, "key '" + std::string(key) + "': " + e.message());
    }
}

std::vector<SweepConfig> parse_sweep_config(std::string_view text, std::string_view source) {
    SweepConfig defaults;
    std::vector<SweepConfig> sections;
    SweepConfig *current = &defaults;
    std::size_t line_no = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string where = std::string(source) + ":" + std::to_string(line_no);
        std::string_view l = line;
        if (const auto hash = l.find_first_of("#;"); hash != std::string_view::npos) {
            l = l.substr(0, hash);
        }
        l = trim(l);
        if (l.empty()) continue;
        if (l.front() == '[') {
            if (l.back() != ']') {
                throw Error(ErrorKind::kConfig, where + ": unterminated section header");
            }
            SweepConfig next = defaults;
            next.name = std::string(trim(l.substr(1, l.size() - 2)));
            if (next.name.empty()) {
                throw Error(ErrorKind::kConfig, where + ": empty section name");
            }
            sections.push_back(std::move(next));
            current = &sections.back();
            continue;
        }
        const auto eq = l.find('=');
        if (eq == std::string_view::npos) {
            throw Error(ErrorKind::kConfig, where + ": expected key = value");
        }
        const auto key = trim(l.substr(0, eq));
        try {
            apply_setting(*current, key, l.substr(eq + 1));
        } catch (const Error &e) {
            throw Error(ErrorKind::kConfig, where + ": " + e.message());
        }
    }
    if (sections.empty()) {
        sections.push_back(defaults);
    }
    return sections;
}

std::vector<SweepConfig> load_sweep_config(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorKind::kIo, "cannot open config '" + path.string() + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_sweep_config(buf.str(), path.string());
}

std::vector<SweepRow> run_sweep(const SweepConfig &cfg, std::size_t threads) {
    const auto params = cfg.grid.points();
    std::vector<SweepRow> rows(params.size());
    std::size_t workers = threads == 0 ? std::max(1U, std::thread::hardware_concurrency()) : threads;
    workers = std::min(workers, std::max<std::size_t>(params.size(), 1));

    auto work = [&](std::size_t first) {
        for (std::size_t i = first; i < params.size(); i += workers) {
            rows[i] = evaluate_point(cfg, params[i], i);
        }
    };
    if (workers <= 1) {
        work(0);
    } else {
        std::vector<std::future<void>> jobs;
        for (std::size_t w = 0; w < workers; ++w) {
            jobs.push_back(std::async(std::launch::async, work, w));
        }
        for (auto &j : jobs) {
            j.get();
        }
    }
    std::stable_sort(rows.begin(), rows.end(),
                     [](const SweepRow &a, const SweepRow &b) { return a.param < b.param; });
    return rows;
}

std::string rows_to_csv(const std::vector<SweepRow> &rows, const std::vector<std::string> &columns) {
    const auto cols = resolve_columns(columns);
    std::string out;
    for (std::size_t c = 0; c < cols.size(); ++c) {
        out += (c ? "," : "") + cols[c];
    }
    out += "\n";
    for (const auto &r : rows) {
        for (std::size_t c = 0; c < cols.size(); ++c) {
            out += (c ? "," : "") + format12(column_value(r, cols[c]));
        }
        out += "\n";
    }
    return out;
}

std::string rows_to_json(const std::vector<SweepRow> &rows, const std::vector<std::string> &columns) {
    const auto cols = resolve_columns(columns);
    std::string out = "[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        out += i ? ",\n  {" : "\n  {";
        for (std::size_t c = 0; c < cols.size(); ++c) {
            out += (c ? ", \"" : "\"") + cols[c] + "\": " + format12(column_value(rows[i], cols[c]));
        }
        out += "}";
    }
    out += rows.empty() ? "]\n" : "\n]\n";
    return out;
}

void write_text_file(const std::filesystem::path &path, std::string_view content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error(ErrorKind::kIo, "cannot open '" + path.string() + "' for writing");
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
        throw Error(ErrorKind::kIo, "failed writing '" + path.string() + "'");
    }
}

void emit_csv(const std::vector<SweepRow> &rows, const std::filesystem::path &path,
              const std::vector<std::string> &columns) {
    write_text_file(path, rows_to_csv(rows, columns));
}

void emit_json(const std::vector<SweepRow> &rows, const std::filesystem::path &path,
               const std::vector<std::string> &columns) {
    write_text_file(path, rows_to_json(rows, columns));
}

std::vector<CostRow> report_costs(std::size_t n_max) {
    if (n_max < 1 || n_max > 8) {
        throw Error(ErrorKind::kOutOfRange, "cost table supports 1 <= n_max <= 8");
    }
    std::vector<CostRow> rows;
    for (std::size_t n = 1; n <= n_max; ++n) {
        CostRow r;
        r.n = n;
        r.lcu_model = cost_model(CostMethod::kLcu, n);
        r.stinespring_model = cost_model(CostMethod::kStinespring, n);
        r.ratio = r.stinespring_model / r.lcu_model;
        r.ancilla_bound = ancilla_qubit_bound(n);
        const LocalUnitary target = LocalUnitary::pauli(std::string(n, 'Z'));
        for (std::size_t m = 1; m <= kCostMeasuredMaxControls; ++m) {
            if (m + n <= kMaxWires) {
                r.measured.emplace_back(count_gates(decompose_controlled(m, target)).total());
            } else {
                r.measured.emplace_back(std::nullopt);
            }
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

namespace {

std::string integer_text(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.0f", v);
    return buf;
}

}  // namespace

std::string costs_to_csv(const std::vector<CostRow> &rows) {
    std::string out = "n,lcu_model,stinespring_model,ratio,ancilla_bound";
    for (std::size_t m = 1; m <= kCostMeasuredMaxControls; ++m) {
        out += ",measured_m" + std::to_string(m);
    }
    out += "\n";
    for (const auto &r : rows) {
        out += std::to_string(r.n) + "," + integer_text(r.lcu_model) + "," +
               integer_text(r.stinespring_model) + "," + format12(r.ratio) + "," +
               std::to_string(r.ancilla_bound);
        for (const auto &m : r.measured) {
            out += "," + (m ? std::to_string(*m) : std::string());
        }
        out += "\n";
    }
    return out;
}

std::string costs_to_json(const std::vector<CostRow> &rows) {
    std::string out = "[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto &r = rows[i];
        out += i ? ",\n  {" : "\n  {";
        out += "\"n\": " + std::to_string(r.n) + ", \"lcu_model\": " + integer_text(r.lcu_model) +
               ", \"stinespring_model\": " + integer_text(r.stinespring_model) +
               ", \"ratio\": " + format12(r.ratio) + ", \"ancilla_bound\": " + std::to_string(r.ancilla_bound) +
               ", \"measured\": [";
        for (std::size_t m = 0; m < r.measured.size(); ++m) {
            out += (m ? ", " : "") + (r.measured[m] ? std::to_string(*r.measured[m]) : std::string("null"));
        }
        out += "]}";
    }
    out += rows.empty() ? "]\n" : "\n]\n";
    return out;
}

}  // namespace qchan
