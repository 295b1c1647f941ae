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

#ifndef QCHAN_GATES_H_
#define QCHAN_GATES_H_

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "qchan/linalg.h"

namespace qchan {

using Matrix2 = Eigen::Matrix2cd;

// Wire 0 is the most significant qubit (major tensor factor), matching
// tensor_product().

enum class GateKind { kSingle, kCnot };

struct Gate {
    GateKind kind = GateKind::kSingle;
    std::size_t wire = 0;    // target wire of a single-qubit gate, or the CNOT target
    std::size_t control = 0; // CNOT only
    Matrix2 matrix = Matrix2::Identity();

    static Gate single(std::size_t wire, const Matrix2 &u);
    static Gate cnot(std::size_t control, std::size_t target);
};

struct GateList {
    std::size_t wire_count = 0;
    std::vector<Gate> gates;

    void append(const GateList &other);
};

struct GateCounts {
    std::size_t single = 0;
    std::size_t cnot = 0;

    std::size_t total() const {
        return single + cnot;
    }
    bool operator==(const GateCounts &) const = default;
};

/// global_phase · (f_0 ⊗ f_1 ⊗ ... ), f_0 on the first target wire.
struct LocalUnitary {
    std::vector<Matrix2> factors;
    Complex global_phase{1.0, 0.0};

    std::size_t width() const {
        return factors.size();
    }
    Matrix matrix() const;
    LocalUnitary adjoint() const;

    /// Pauli string such as "ZX" or "IY", major factor first.
    static LocalUnitary pauli(std::string_view letters);
};

/// Principal square root of each 2x2 factor (eigenphases in (-π, π]) and of
/// the global phase.
LocalUnitary local_sqrt(const LocalUnitary &u);

/// Principal square root of a single 2x2 unitary.
Matrix2 principal_sqrt(const Matrix2 &u);

/// e^{iα} Rz(β) Ry(γ) Rz(δ).
struct ZyzAngles {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    double delta = 0.0;
};
ZyzAngles zyz_decompose(const Matrix2 &u);
Matrix2 rz(double theta);
Matrix2 ry(double theta);

inline constexpr std::size_t kMaxWires = 12;

/// C_m(U): U on wires m..m+n-1 conditioned on wires 0..m-1 all being |1⟩.
/// m = 0 emits the factors directly; m = 1 expands each controlled factor into
/// at most 2 CNOTs and 4 single-qubit gates; m >= 2 applies the square-root
/// recursion C_m(U) = C_{m-1}(M) · C_{m-1}(X) · C_1(M†) · C_{m-1}(X) · C_1(M), M² = U,
/// with the multi-controlled X handled by the same recursion.
GateList decompose_controlled(std::size_t controls, const LocalUnitary &target);

GateCounts count_gates(const GateList &g);

/// Ordered product of the embedded gates (first gate applied first).
Matrix reconstruct(const GateList &g);

/// I - P ⊗ I + P ⊗ U with P = |1…1⟩⟨1…1| on the control register.
Matrix controlled_matrix(std::size_t controls, const Matrix &target);

enum class CostMethod { kLcu, kStinespring };

/// Leading-order gate-count model values (not measured counts):
/// lcu(n) = 8 n³ 2^{4n} + n² 2^{2n}, stinespring(n) = 27 n³ 2^{6n}.
double cost_model(CostMethod method, std::size_t n);

/// Ancilla qubits needed for a full operator basis on n system qubits: log2(4^n) = 2n.
std::size_t ancilla_qubit_bound(std::size_t n);

}  // namespace qchan

#endif  // QCHAN_GATES_H_
