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

#ifndef QCHAN_SERIALIZE_H_
#define QCHAN_SERIALIZE_H_

#include <string>
#include <string_view>

#include "qchan/compiler.h"
#include "qchan/gates.h"

namespace qchan {

// Complex numbers are [re, im] pairs; matrices are arrays of rows.
//
// Plan document:
//   {"label": ..., "circuits": [{"system_dim", "ancilla_dim", "V", "W",
//     "unitaries": [...], "policy": {"kind": "trace_all" | "select_outcomes",
//                                    "outcomes": [{"outcome", "weight"}]}}]}
//
// Gate list document:
//   {"wires": q, "gates": [{"kind": "single", "wires": [t], "matrix": ...} |
//                          {"kind": "cnot", "wires": [c, t]}]}

std::string plan_to_json(const SimulationPlan &plan, int indent = 2);

/// Parses and validates a plan document; throws Error(kParse) with the
/// offending path on malformed input.
SimulationPlan plan_from_json(std::string_view text);

std::string gates_to_json(const GateList &gates, int indent = 2);
GateList gates_from_json(std::string_view text);

}  // namespace qchan

#endif  // QCHAN_SERIALIZE_H_
