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

#include "qchan/serialize.h"

#include <string>

#if __has_include(<nlohmann/json.hpp>)
#include <nlohmann/json.hpp>
#else
#include "json.hpp"
#endif

#include "qchan/errors.h"

namespace qchan {

namespace {

using nlohmann::json;

json complex_to_json(Complex z) {
    return json::array({z.real(), z.imag()});
}

template <typename M>
json matrix_to_json(const M &m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            row.push_back(complex_to_json(m(i, j)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

[[noreturn]] void fail(const std::string &path, const std::string &what) {
    throw Error(ErrorKind::kParse, path + ": " + what);
}

const json &field(const json &obj, const char *key, const std::string &path) {
    if (!obj.is_object() || !obj.contains(key)) {
        fail(path, std::string("missing field '") + key + "'");
    }
    return obj.at(key);
}

double number(const json &j, const std::string &path) {
    if (!j.is_number()) {
        fail(path, "expected a number");
    }
    return j.get<double>();
}

std::size_t count(const json &j, const std::string &path) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
        fail(path, "expected a non-negative integer");
    }
    return j.get<std::size_t>();
}

Complex complex_from_json(const json &j, const std::string &path) {
    if (!j.is_array() || j.size() != 2) {
        fail(path, "expected [re, im]");
    }
    return {number(j[0], path + "[0]"), number(j[1], path + "[1]")};
}

Matrix matrix_from_json(const json &j, const std::string &path) {
    if (!j.is_array() || j.empty()) {
        fail(path, "expected a non-empty array of rows");
    }
    const auto rows = static_cast<Eigen::Index>(j.size());
    if (!j[0].is_array()) {
        fail(path + "[0]", "expected a row array");
    }
    const auto cols = static_cast<Eigen::Index>(j[0].size());
    Matrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const auto &row = j[static_cast<std::size_t>(i)];
        const std::string rp = path + "[" + std::to_string(i) + "]";
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
            fail(rp, "ragged matrix row");
        }
        for (Eigen::Index k = 0; k < cols; ++k) {
            m(i, k) = complex_from_json(row[static_cast<std::size_t>(k)], rp + "[" + std::to_string(k) + "]");
        }
    }
    return m;
}

json parse_document(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw Error(ErrorKind::kParse, e.what());
    }
}

}  // namespace

std::string plan_to_json(const SimulationPlan &plan, int indent) {
    json doc;
    doc["label"] = plan.label;
    json circuits = json::array();
    for (const auto &pc : plan.circuits) {
        json c;
        c["system_dim"] = pc.circuit.system_dim;
        c["ancilla_dim"] = pc.circuit.ancilla_dim;
        c["V"] = matrix_to_json(pc.circuit.v);
        c["W"] = matrix_to_json(pc.circuit.w);
        json us = json::array();
        for (const auto &u : pc.circuit.unitaries) {
            us.push_back(matrix_to_json(u));
        }
        c["unitaries"] = std::move(us);
        json policy;
        if (pc.policy.kind == PolicyKind::kTraceAll) {
            policy["kind"] = "trace_all";
        } else {
            policy["kind"] = "select_outcomes";
            json outcomes = json::array();
            for (const auto &o : pc.policy.outcomes) {
                outcomes.push_back({{"outcome", o.outcome}, {"weight", o.weight}});
            }
            policy["outcomes"] = std::move(outcomes);
        }
        c["policy"] = std::move(policy);
        circuits.push_back(std::move(c));
    }
    doc["circuits"] = std::move(circuits);
    return doc.dump(indent) + "\n";
}

SimulationPlan plan_from_json(std::string_view text) {
    const json doc = parse_document(text);
    SimulationPlan plan;
    const auto &label = field(doc, "label", "$");
    if (!label.is_string()) {
        fail("$.label", "expected a string");
    }
    plan.label = label.get<std::string>();
    const auto &circuits = field(doc, "circuits", "$");
    if (!circuits.is_array()) {
        fail("$.circuits", "expected an array");
    }
    for (std::size_t ci = 0; ci < circuits.size(); ++ci) {
        const std::string cp = "$.circuits[" + std::to_string(ci) + "]";
        const auto &c = circuits[ci];
        PlannedCircuit pc;
        pc.circuit.ancilla_dim = count(field(c, "ancilla_dim", cp), cp + ".ancilla_dim");
        pc.circuit.v = matrix_from_json(field(c, "V", cp), cp + ".V");
        pc.circuit.w = matrix_from_json(field(c, "W", cp), cp + ".W");
        const auto &us = field(c, "unitaries", cp);
        if (!us.is_array()) {
            fail(cp + ".unitaries", "expected an array");
        }
        for (std::size_t i = 0; i < us.size(); ++i) {
            pc.circuit.unitaries.push_back(
                matrix_from_json(us[i], cp + ".unitaries[" + std::to_string(i) + "]"));
        }
        if (c.contains("system_dim")) {
            pc.circuit.system_dim = count(c.at("system_dim"), cp + ".system_dim");
        } else if (!pc.circuit.unitaries.empty()) {
            pc.circuit.system_dim = static_cast<std::size_t>(pc.circuit.unitaries.front().rows());
        }
        const auto &policy = field(c, "policy", cp);
        const auto &kind = field(policy, "kind", cp + ".policy");
        if (kind == "trace_all") {
            pc.policy = OutcomePolicy::trace_all();
        } else if (kind == "select_outcomes") {
            std::vector<WeightedOutcome> outcomes;
            const auto &list = field(policy, "outcomes", cp + ".policy");
            if (!list.is_array()) {
                fail(cp + ".policy.outcomes", "expected an array");
            }
            for (std::size_t k = 0; k < list.size(); ++k) {
                const std::string op = cp + ".policy.outcomes[" + std::to_string(k) + "]";
                outcomes.push_back({count(field(list[k], "outcome", op), op + ".outcome"),
                                    number(field(list[k], "weight", op), op + ".weight")});
            }
            pc.policy = OutcomePolicy::select(std::move(outcomes));
        } else {
            fail(cp + ".policy.kind", "expected 'trace_all' or 'select_outcomes'");
        }
        try {
            pc.circuit.validate(1e-10);
        } catch (const Error &e) {
            fail(cp, e.message());
        }
        plan.circuits.push_back(std::move(pc));
    }
    return plan;
}

std::string gates_to_json(const GateList &gates, int indent) {
    json doc;
    doc["wires"] = gates.wire_count;
    json list = json::array();
    for (const auto &g : gates.gates) {
        json item;
        if (g.kind == GateKind::kCnot) {
            item["kind"] = "cnot";
            item["wires"] = json::array({g.control, g.wire});
        } else {
            item["kind"] = "single";
            item["wires"] = json::array({g.wire});
            item["matrix"] = matrix_to_json(g.matrix);
        }
        list.push_back(std::move(item));
    }
    doc["gates"] = std::move(list);
    return doc.dump(indent) + "\n";
}

GateList gates_from_json(std::string_view text) {
    const json doc = parse_document(text);
    GateList out;
    out.wire_count = count(field(doc, "wires", "$"), "$.wires");
    const auto &list = field(doc, "gates", "$");
    if (!list.is_array()) {
        fail("$.gates", "expected an array");
    }
    for (std::size_t i = 0; i < list.size(); ++i) {
        const std::string gp = "$.gates[" + std::to_string(i) + "]";
        const auto &item = list[i];
        const auto &kind = field(item, "kind", gp);
        const auto &wires = field(item, "wires", gp);
        if (!wires.is_array()) {
            fail(gp + ".wires", "expected an array");
        }
        if (kind == "cnot") {
            if (wires.size() != 2) {
                fail(gp + ".wires", "a CNOT needs [control, target]");
            }
            out.gates.push_back(Gate::cnot(count(wires[0], gp + ".wires[0]"), count(wires[1], gp + ".wires[1]")));
        } else if (kind == "single") {
            if (wires.size() != 1) {
                fail(gp + ".wires", "a single-qubit gate needs one wire");
            }
            const Matrix m = matrix_from_json(field(item, "matrix", gp), gp + ".matrix");
            if (m.rows() != 2 || m.cols() != 2) {
                fail(gp + ".matrix", "expected a 2x2 matrix");
            }
            out.gates.push_back(Gate::single(count(wires[0], gp + ".wires[0]"), Matrix2(m)));
        } else {
            fail(gp + ".kind", "expected 'single' or 'cnot'");
        }
    }
    return out;
}

}  // namespace qchan
