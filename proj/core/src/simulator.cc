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

#include "qchan/simulator.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "qchan/errors.h"

namespace qchan {

namespace {

constexpr double kExecTolerance = 1e-10;

Eigen::Index idx(std::size_t i) {
    return static_cast<Eigen::Index>(i);
}

/// Columns of T that act on ancilla |0⟩, i.e. T (I ⊗ |0⟩).
Matrix ancilla_zero_columns(const Matrix &total, std::size_t system_dim, std::size_t ancilla_dim) {
    Matrix a(total.rows(), idx(system_dim));
    for (std::size_t s = 0; s < system_dim; ++s) {
        a.col(idx(s)) = total.col(idx(s * ancilla_dim));
    }
    return a;
}

Matrix ancilla_block(const Matrix &joint, std::size_t system_dim, std::size_t ancilla_dim,
                     std::size_t k) {
    Matrix out(idx(system_dim), idx(system_dim));
    for (std::size_t j = 0; j < system_dim; ++j) {
        for (std::size_t i = 0; i < system_dim; ++i) {
            out(idx(i), idx(j)) = joint(idx(i * ancilla_dim + k), idx(j * ancilla_dim + k));
        }
    }
    return out;
}

void check_system(const SimulationPlan &plan, std::size_t dim) {
    if (plan.circuits.empty()) {
        throw Error(ErrorKind::kDimensionMismatch, "plan '" + plan.label + "' has no circuits");
    }
    for (const auto &pc : plan.circuits) {
        if (pc.circuit.system_dim != dim) {
            throw Error(ErrorKind::kDimensionMismatch,
                        "plan acts on dimension " + std::to_string(pc.circuit.system_dim) +
                            ", input has dimension " + std::to_string(dim));
        }
    }
}

struct CircuitRun {
    std::vector<Matrix> branches;
    Matrix contribution;
    double unitarity_residual = 0.0;
};

CircuitRun run_circuit(const PlannedCircuit &pc, const Matrix &rho) {
    const auto &c = pc.circuit;
    const Matrix total = assemble_total_unitary(c);
    CircuitRun run;
    run.unitarity_residual = unitarity_residual(total);
    const Matrix a = ancilla_zero_columns(total, c.system_dim, c.ancilla_dim);
    const Matrix joint = a * rho * a.adjoint();
    run.branches.reserve(c.ancilla_dim);
    for (std::size_t k = 0; k < c.ancilla_dim; ++k) {
        run.branches.push_back(ancilla_block(joint, c.system_dim, c.ancilla_dim, k));
    }
    run.contribution = Matrix::Zero(rho.rows(), rho.cols());
    if (pc.policy.kind == PolicyKind::kTraceAll) {
        for (const auto &b : run.branches) {
            run.contribution += b;
        }
    } else {
        for (const auto &sel : pc.policy.outcomes) {
            if (sel.outcome >= c.ancilla_dim) {
                throw Error(ErrorKind::kOutOfRange,
                            "selected outcome " + std::to_string(sel.outcome) + " >= ancilla dimension " +
                                std::to_string(c.ancilla_dim));
            }
            if (!(sel.weight >= 0.0)) {
                throw Error(ErrorKind::kNegativeWeight,
                            "outcome weight " + std::to_string(sel.weight) + " is negative");
            }
            run.contribution += sel.weight * run.branches[sel.outcome];
        }
    }
    return run;
}

}  // namespace

Matrix assemble_total_unitary(const DilationCircuit &c) {
    c.validate(kExecTolerance);
    const std::size_t ds = c.system_dim;
    const std::size_t da = c.ancilla_dim;
    const auto n = idx(ds * da);
    const Matrix eye_s = Matrix::Identity(idx(ds), idx(ds));

    Matrix controlled = Matrix::Zero(n, n);
    for (std::size_t a = 0; a < da; ++a) {
        const Matrix &u = c.unitaries[a];
        for (std::size_t j = 0; j < ds; ++j) {
            for (std::size_t i = 0; i < ds; ++i) {
                controlled(idx(i * da + a), idx(j * da + a)) = u(idx(i), idx(j));
            }
        }
    }
    return tensor_product(eye_s, c.w) * controlled * tensor_product(eye_s, c.v);
}

Matrix branch_operator(const DilationCircuit &c, std::size_t k) {
    if (k >= c.ancilla_dim) {
        throw Error(ErrorKind::kOutOfRange,
                    "outcome " + std::to_string(k) + " >= ancilla dimension " +
                        std::to_string(c.ancilla_dim));
    }
    c.validate(kExecTolerance);
    Matrix b = Matrix::Zero(idx(c.system_dim), idx(c.system_dim));
    for (std::size_t i = 0; i < c.ancilla_dim; ++i) {
        b += (c.w(idx(k), idx(i)) * c.v(idx(i), 0)) * c.unitaries[i];
    }
    return b;
}

Matrix evolve_joint(const DilationCircuit &c, const Matrix &rho) {
    if (rho.rows() != idx(c.system_dim) || rho.cols() != idx(c.system_dim)) {
        throw Error(ErrorKind::kDimensionMismatch, "state does not match circuit system dimension");
    }
    const Matrix total = assemble_total_unitary(c);
    const Matrix a = ancilla_zero_columns(total, c.system_dim, c.ancilla_dim);
    return a * rho * a.adjoint();
}

Matrix plan_output_matrix(const SimulationPlan &plan, const Matrix &rho) {
    check_system(plan, static_cast<std::size_t>(rho.rows()));
    Matrix out = Matrix::Zero(rho.rows(), rho.cols());
    for (const auto &pc : plan.circuits) {
        out += run_circuit(pc, rho).contribution;
    }
    return out;
}

ExecutionResult run_plan(const SimulationPlan &plan, const DensityMatrix &rho) {
    check_system(plan, rho.dim());
    Matrix out = Matrix::Zero(idx(rho.dim()), idx(rho.dim()));
    std::vector<std::vector<Matrix>> branches;
    ExecutionDiagnostics diag;
    for (const auto &pc : plan.circuits) {
        auto run = run_circuit(pc, rho.matrix());
        out += run.contribution;
        diag.unitarity_residual = std::max(diag.unitarity_residual, run.unitarity_residual);
        branches.push_back(std::move(run.branches));
    }
    out = 0.5 * (out + out.adjoint());
    diag.trace_residual = std::abs(out.trace() - 1.0);
    return ExecutionResult{DensityMatrix(std::move(out), StateTolerance{1e-12, kExecTolerance, kExecTolerance}),
                           std::move(branches), diag};
}

double verify_plan(const SimulationPlan &plan, const KrausChannel &ch, std::size_t trials,
                   Rng &rng) {
    double worst = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
        const auto rho = DensityMatrix::from_pure(random_unit_vector(ch.dim(), rng));
        const auto expected = apply_channel(ch, rho);
        const Matrix got = plan_output_matrix(plan, rho.matrix());
        worst = std::max(worst, max_abs_diff(got, expected.matrix()));
    }
    return worst;
}

double verify_plan(const SimulationPlan &plan, const KrausChannel &ch, std::size_t trials,
                   std::uint64_t seed) {
    Rng rng(seed);
    return verify_plan(plan, ch, trials, rng);
}

}  // namespace qchan
