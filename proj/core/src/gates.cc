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

#include "qchan/gates.h"

#include <cmath>
#include <numbers>
#include <string>

#include "qchan/errors.h"

namespace qchan {

namespace {

constexpr double kIdentityTolerance = 1e-14;

/// Principal half-angle: eigenphases are taken in (-π, π].
Complex principal_root_of_phase(Complex z) {
    double theta = std::arg(z);
    if (theta <= -std::numbers::pi + 1e-12) {
        theta = std::numbers::pi;
    }
    return std::polar(std::sqrt(std::abs(z)), theta / 2.0);
}

bool near(const Matrix2 &a, const Matrix2 &b, double tol) {
    return (a - b).cwiseAbs().maxCoeff() <= tol;
}

Matrix2 pauli2(char letter) {
    Matrix2 m;
    switch (letter) {
        case 'I':
            m << 1.0, 0.0, 0.0, 1.0;
            return m;
        case 'X':
            m << 0.0, 1.0, 1.0, 0.0;
            return m;
        case 'Y':
            m << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
            return m;
        case 'Z':
            m << 1.0, 0.0, 0.0, -1.0;
            return m;
        default:
            throw Error(ErrorKind::kUnknownName, std::string("unknown Pauli letter '") + letter + "'");
    }
}

void push_single(GateList &out, std::size_t wire, const Matrix2 &u) {
    if (!near(u, Matrix2::Identity(), kIdentityTolerance)) {
        out.gates.push_back(Gate::single(wire, u));
    }
}

/// Controlled-u as C · CNOT · B · CNOT · A with a phase gate on the control,
/// where u = e^{iα} A X B X C and ABC = I.
void emit_controlled_single(std::size_t control, std::size_t target, const Matrix2 &u,
                            GateList &out) {
    if (near(u, Matrix2::Identity(), 1e-12)) {
        return;
    }
    if (near(u, pauli2('X'), 1e-12)) {
        out.gates.push_back(Gate::cnot(control, target));
        return;
    }
    const ZyzAngles z = zyz_decompose(u);
    const Matrix2 a = rz(z.beta) * ry(z.gamma / 2.0);
    const Matrix2 b = ry(-z.gamma / 2.0) * rz(-(z.delta + z.beta) / 2.0);
    const Matrix2 c = rz((z.delta - z.beta) / 2.0);
    Matrix2 phase = Matrix2::Identity();
    phase(1, 1) = std::polar(1.0, z.alpha);

    push_single(out, target, c);
    out.gates.push_back(Gate::cnot(control, target));
    push_single(out, target, b);
    out.gates.push_back(Gate::cnot(control, target));
    push_single(out, target, a);
    push_single(out, control, phase);
}

/// Factor list with the global phase folded into the first factor.
std::vector<Matrix2> phased_factors(const LocalUnitary &u) {
    std::vector<Matrix2> f = u.factors;
    f.front() *= u.global_phase;
    return f;
}

void emit_controlled(const std::vector<std::size_t> &controls, const std::vector<std::size_t> &targets,
                     const LocalUnitary &u, GateList &out) {
    if (controls.empty()) {
        const auto f = phased_factors(u);
        for (std::size_t j = 0; j < f.size(); ++j) {
            out.gates.push_back(Gate::single(targets[j], f[j]));
        }
        return;
    }
    if (controls.size() == 1) {
        const auto f = phased_factors(u);
        for (std::size_t j = 0; j < f.size(); ++j) {
            emit_controlled_single(controls.front(), targets[j], f[j], out);
        }
        return;
    }
    const LocalUnitary m = local_sqrt(u);
    const LocalUnitary m_dag = m.adjoint();
    const std::size_t last = controls.back();
    const std::vector<std::size_t> rest(controls.begin(), controls.end() - 1);
    const LocalUnitary x = LocalUnitary::pauli("X");

    emit_controlled({last}, targets, m, out);
    emit_controlled(rest, {last}, x, out);
    emit_controlled({last}, targets, m_dag, out);
    emit_controlled(rest, {last}, x, out);
    emit_controlled(rest, targets, m, out);
}

}  // namespace

Gate Gate::single(std::size_t wire, const Matrix2 &u) {
    Gate g;
    g.kind = GateKind::kSingle;
    g.wire = wire;
    g.matrix = u;
    return g;
}

Gate Gate::cnot(std::size_t control, std::size_t target) {
    if (control == target) {
        throw Error(ErrorKind::kOutOfRange, "CNOT control and target coincide");
    }
    Gate g;
    g.kind = GateKind::kCnot;
    g.control = control;
    g.wire = target;
    return g;
}

void GateList::append(const GateList &other) {
    if (other.wire_count > wire_count) {
        wire_count = other.wire_count;
    }
    gates.insert(gates.end(), other.gates.begin(), other.gates.end());
}

Matrix LocalUnitary::matrix() const {
    Matrix out = Matrix::Identity(1, 1);
    for (const auto &f : factors) {
        out = tensor_product(out, Matrix(f));
    }
    return global_phase * out;
}

LocalUnitary LocalUnitary::adjoint() const {
    LocalUnitary out;
    out.global_phase = std::conj(global_phase);
    for (const auto &f : factors) {
        out.factors.push_back(f.adjoint());
    }
    return out;
}

LocalUnitary LocalUnitary::pauli(std::string_view letters) {
    if (letters.empty()) {
        throw Error(ErrorKind::kOutOfRange, "empty Pauli string");
    }
    LocalUnitary out;
    for (const char c : letters) {
        out.factors.push_back(pauli2(c));
    }
    return out;
}

Matrix2 principal_sqrt(const Matrix2 &u) {
    Eigen::ComplexSchur<Matrix2> schur(u);
    const Matrix2 &q = schur.matrixU();
    const Matrix2 &t = schur.matrixT();
    Matrix2 d = Matrix2::Zero();
    d(0, 0) = principal_root_of_phase(t(0, 0));
    d(1, 1) = principal_root_of_phase(t(1, 1));
    return q * d * q.adjoint();
}

LocalUnitary local_sqrt(const LocalUnitary &u) {
    LocalUnitary out;
    out.global_phase = principal_root_of_phase(u.global_phase);
    for (const auto &f : u.factors) {
        out.factors.push_back(principal_sqrt(f));
    }
    return out;
}

Matrix2 rz(double theta) {
    Matrix2 m = Matrix2::Zero();
    m(0, 0) = std::polar(1.0, -theta / 2.0);
    m(1, 1) = std::polar(1.0, theta / 2.0);
    return m;
}

Matrix2 ry(double theta) {
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    Matrix2 m;
    m << c, -s, s, c;
    return m;
}

ZyzAngles zyz_decompose(const Matrix2 &u) {
    ZyzAngles z;
    z.alpha = std::arg(u.determinant()) / 2.0;
    const Matrix2 v = std::polar(1.0, -z.alpha) * u;
    const Complex a = v(0, 0);
    const Complex b = v(1, 0);
    z.gamma = 2.0 * std::atan2(std::abs(b), std::abs(a));
    if (std::abs(b) < 1e-14) {
        z.beta = -2.0 * std::arg(a);
        z.delta = 0.0;
    } else if (std::abs(a) < 1e-14) {
        z.beta = 2.0 * std::arg(b);
        z.delta = 0.0;
    } else {
        const double sum = -2.0 * std::arg(a);
        const double diff = 2.0 * std::arg(b);
        z.beta = (sum + diff) / 2.0;
        z.delta = (sum - diff) / 2.0;
    }
    return z;
}

GateList decompose_controlled(std::size_t controls, const LocalUnitary &target) {
    const std::size_t n = target.width();
    if (n == 0) {
        throw Error(ErrorKind::kOutOfRange, "target must act on at least one wire");
    }
    if (controls + n > kMaxWires) {
        throw Error(ErrorKind::kWireBudget, std::to_string(controls + n) + " wires requested, limit is " +
                                                std::to_string(kMaxWires));
    }
    for (const auto &f : target.factors) {
        if (!is_unitary(Matrix(f), 1e-12)) {
            throw Error(ErrorKind::kNonUnitary, "target factor is not unitary");
        }
    }
    if (std::abs(std::abs(target.global_phase) - 1.0) > 1e-12) {
        throw Error(ErrorKind::kNonUnitary, "global phase must have unit modulus");
    }
    std::vector<std::size_t> ctrl(controls);
    std::vector<std::size_t> tgt(n);
    for (std::size_t i = 0; i < controls; ++i) ctrl[i] = i;
    for (std::size_t j = 0; j < n; ++j) tgt[j] = controls + j;

    GateList out;
    out.wire_count = controls + n;
    emit_controlled(ctrl, tgt, target, out);
    return out;
}

GateCounts count_gates(const GateList &g) {
    GateCounts c;
    for (const auto &gate : g.gates) {
        if (gate.kind == GateKind::kCnot) {
            ++c.cnot;
        } else {
            ++c.single;
        }
    }
    return c;
}

Matrix reconstruct(const GateList &g) {
    const std::size_t q = g.wire_count;
    if (q > kMaxWires) {
        throw Error(ErrorKind::kWireBudget, std::to_string(q) + " wires exceed the reconstruction limit");
    }
    const std::size_t dim = std::size_t{1} << q;
    Matrix m = Matrix::Identity(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    auto bit_of = [q](std::size_t wire) { return std::size_t{1} << (q - 1 - wire); };

    for (const auto &gate : g.gates) {
        if (gate.wire >= q || (gate.kind == GateKind::kCnot && gate.control >= q)) {
            throw Error(ErrorKind::kOutOfRange, "gate wire outside the register");
        }
        const std::size_t tb = bit_of(gate.wire);
        if (gate.kind == GateKind::kSingle) {
            const Matrix2 &u = gate.matrix;
            for (std::size_t i = 0; i < dim; ++i) {
                if (i & tb) continue;
                const auto r0 = static_cast<Eigen::Index>(i);
                const auto r1 = static_cast<Eigen::Index>(i | tb);
                for (Eigen::Index col = 0; col < m.cols(); ++col) {
                    const Complex x0 = m(r0, col);
                    const Complex x1 = m(r1, col);
                    m(r0, col) = u(0, 0) * x0 + u(0, 1) * x1;
                    m(r1, col) = u(1, 0) * x0 + u(1, 1) * x1;
                }
            }
        } else {
            const std::size_t cb = bit_of(gate.control);
            for (std::size_t i = 0; i < dim; ++i) {
                if ((i & cb) && !(i & tb)) {
                    m.row(static_cast<Eigen::Index>(i)).swap(m.row(static_cast<Eigen::Index>(i | tb)));
                }
            }
        }
    }
    return m;
}

Matrix controlled_matrix(std::size_t controls, const Matrix &target) {
    const auto ctrl_dim = static_cast<Eigen::Index>(std::size_t{1} << controls);
    Matrix p = Matrix::Zero(ctrl_dim, ctrl_dim);
    p(ctrl_dim - 1, ctrl_dim - 1) = 1.0;
    const Matrix eye_c = Matrix::Identity(ctrl_dim, ctrl_dim);
    const Matrix eye_t = Matrix::Identity(target.rows(), target.cols());
    return tensor_product(eye_c, eye_t) - tensor_product(p, eye_t) + tensor_product(p, target);
}

double cost_model(CostMethod method, std::size_t n) {
    const double nd = static_cast<double>(n);
    const int k = static_cast<int>(n);
    if (method == CostMethod::kLcu) {
        return std::ldexp(8.0 * nd * nd * nd, 4 * k) + std::ldexp(nd * nd, 2 * k);
    }
    return std::ldexp(27.0 * nd * nd * nd, 6 * k);
}

std::size_t ancilla_qubit_bound(std::size_t n) {
    return 2 * n;
}

}  // namespace qchan
