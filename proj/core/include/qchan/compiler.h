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

#ifndef QCHAN_COMPILER_H_
#define QCHAN_COMPILER_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "qchan/basis.h"
#include "qchan/channel.h"
#include "qchan/linalg.h"

namespace qchan {

/// One dilation: prepare the ancilla with V, apply U_c = Σ_i U_i ⊗ |i⟩⟨i|,
/// then W on the ancilla. The ancilla is a native d-level register.
struct DilationCircuit {
    std::size_t system_dim = 0;
    std::size_t ancilla_dim = 0;
    Matrix v;
    Matrix w;
    std::vector<Matrix> unitaries;

    /// Throws on shape errors, non-unitary V/W/U_i (tolerance `atol`), or
    /// |(WV)_k0| > 1 + 1e-10.
    void validate(double atol = 1e-12) const;
};

struct WeightedOutcome {
    std::size_t outcome = 0;
    double weight = 0.0;
};

enum class PolicyKind { kTraceAll, kSelectOutcomes };

/// How the ancilla is disposed of. SelectOutcomes keeps only the listed
/// outcomes and scales each by its classical weight; no renormalisation.
struct OutcomePolicy {
    PolicyKind kind = PolicyKind::kTraceAll;
    std::vector<WeightedOutcome> outcomes;

    static OutcomePolicy trace_all();
    static OutcomePolicy select(std::vector<WeightedOutcome> outcomes);
};

struct PlannedCircuit {
    DilationCircuit circuit;
    OutcomePolicy policy;
};

struct SimulationPlan {
    std::string label;
    std::vector<PlannedCircuit> circuits;
};

enum class Strategy { kAuto, kDiagonal, kMatched, kBranch, kPaper };

/// "auto" | "diagonal" | "matched" | "branch" | "paper".
Strategy parse_strategy(std::string_view name);
std::string_view strategy_name(Strategy s);

/// Deterministic unitary whose first column is `v`: a Householder reflection
/// taking e0 to v·exp(-iφ), times exp(iφ) where φ = arg(v0).
Matrix complete_unitary(const Vector &v);

/// Mixture of basis unitaries: v_i = sqrt(χ_ii), W = I, trace out the ancilla.
SimulationPlan compile_diagonal_chi(const KrausChannel &ch, const UnitaryBasis &basis);

/// One ancilla outcome per Kraus operator: V_i0 = ‖c_·i‖, W_ki = c_ki / V_i0.
/// Column phases of W are moved into the U_i so that the first nonzero entry
/// of every W column is real and positive.
SimulationPlan compile_kraus_matched(const KrausChannel &ch, const UnitaryBasis &basis);

/// One post-selected circuit per Kraus operator, recombined with weights d·s_k².
SimulationPlan compile_branch(const KrausChannel &ch, const UnitaryBasis &basis);

/// The hand-built circuits used for the PD, AD (two settings) and DEP experiments.
SimulationPlan paper_preset(const ChannelPreset &spec);
SimulationPlan paper_preset(std::string_view name, double param);

/// kAuto tries diagonal-χ, then kraus-matched, then branch. kPaper needs a preset
/// and is handled by compile_preset().
SimulationPlan compile(const KrausChannel &ch, const UnitaryBasis &basis, Strategy strategy);

/// Compiles a named preset with any strategy (the basis is the 1-qubit Pauli basis
/// unless overridden).
SimulationPlan compile_preset(const ChannelPreset &spec, Strategy strategy,
                              BasisKind basis = BasisKind::kPauli);

}  // namespace qchan

#endif  // QCHAN_COMPILER_H_
