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

#ifndef QCHAN_SIMULATOR_H_
#define QCHAN_SIMULATOR_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qchan/channel.h"
#include "qchan/compiler.h"
#include "qchan/linalg.h"
#include "qchan/state.h"

namespace qchan {

// Composite register index is system * ancilla_dim + ancilla (system major).

/// (I ⊗ W) · (Σ_i U_i ⊗ |i⟩⟨i|) · (I ⊗ V).
Matrix assemble_total_unitary(const DilationCircuit &c);

/// B_k = Σ_i W_ki V_i0 U_i, the operator applied to the system when the
/// ancilla ends in |k⟩.
Matrix branch_operator(const DilationCircuit &c, std::size_t k);

struct ExecutionDiagnostics {
    double unitarity_residual = 0.0;
    double trace_residual = 0.0;
};

struct ExecutionResult {
    DensityMatrix output;
    // branch_outputs[c][k] = (I ⊗ ⟨k|) ρ_SA (I ⊗ |k⟩) for circuit c, unnormalised.
    std::vector<std::vector<Matrix>> branch_outputs;
    ExecutionDiagnostics diagnostics;
};

/// System ⊗ ancilla state after one circuit, starting from ρ ⊗ |0⟩⟨0|.
Matrix evolve_joint(const DilationCircuit &c, const Matrix &rho);

ExecutionResult run_plan(const SimulationPlan &plan, const DensityMatrix &rho);

/// The recombined system output without promoting it to a DensityMatrix, so
/// malformed plans can still be measured against the oracle.
Matrix plan_output_matrix(const SimulationPlan &plan, const Matrix &rho);

/// Max entry deviation between run_plan and apply_channel over `trials`
/// Haar-random pure inputs.
double verify_plan(const SimulationPlan &plan, const KrausChannel &ch, std::size_t trials,
                   Rng &rng);
double verify_plan(const SimulationPlan &plan, const KrausChannel &ch, std::size_t trials,
                   std::uint64_t seed = 0);

}  // namespace qchan

#endif  // QCHAN_SIMULATOR_H_
