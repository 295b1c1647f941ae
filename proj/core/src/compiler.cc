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

#include "qchan/compiler.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qchan/errors.h"

namespace qchan {

namespace {

constexpr double kCompileTolerance = 1e-10;

Eigen::Index idx(std::size_t i) {
    return static_cast<Eigen::Index>(i);
}

void require_cptp(const KrausChannel &ch) {
    const auto report = validate_cptp(ch);
    if (!report.ok) {
        throw Error(ErrorKind::kNotCptp,
                    "cannot compile '" + ch.label() + "': completeness deviation " +
                        std::to_string(report.max_deviation));
    }
}

void require_basis_dim(const KrausChannel &ch, const UnitaryBasis &basis) {
    if (ch.dim() != basis.dim()) {
        throw Error(ErrorKind::kDimensionMismatch,
                    "channel dimension " + std::to_string(ch.dim()) + " vs basis dimension " +
                        std::to_string(basis.dim()));
    }
}

std::vector<Matrix> select_elements(const UnitaryBasis &basis,
                                    const std::vector<std::size_t> &active) {
    std::vector<Matrix> out;
    out.reserve(active.size());
    for (const auto i : active) {
        out.push_back(basis[i]);
    }
    return out;
}

Matrix restrict_columns(const Matrix &c, const std::vector<std::size_t> &active) {
    Matrix out(c.rows(), idx(active.size()));
    for (std::size_t j = 0; j < active.size(); ++j) {
        out.col(idx(j)) = c.col(idx(active[j]));
    }
    return out;
}

/// W = F†, F_jk = ω^{jk}/√d. Its first row is constant 1/√d.
Matrix fourier_adjoint(std::size_t d) {
    Matrix w(idx(d), idx(d));
    const double scale = 1.0 / std::sqrt(static_cast<double>(d));
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t k = 0; k < d; ++k) {
            const double angle = -2.0 * std::numbers::pi * static_cast<double>((j * k) % d) /
                                 static_cast<double>(d);
            w(idx(j), idx(k)) = std::polar(scale, angle);
        }
    }
    return w;
}

double clamped_sqrt(double x) {
    return std::sqrt(std::max(x, 0.0));
}

/// V = W of the phase-damping circuit: [[c, s], [s, -c]].
Matrix phase_damping_vw(double lambda) {
    const double r = clamped_sqrt(1.0 - lambda);
    const double c = clamped_sqrt((1.0 + r) / 2.0);
    const double s = clamped_sqrt((1.0 - r) / 2.0);
    Matrix m(2, 2);
    m << c, s, s, -c;
    return m;
}

DilationCircuit phase_damping_circuit(double lambda) {
    DilationCircuit c;
    c.system_dim = 2;
    c.ancilla_dim = 2;
    c.v = phase_damping_vw(lambda);
    c.w = c.v;
    c.unitaries = {pauli::identity(), pauli::z()};
    return c;
}

/// Realises S0 = [0 1; 0 0] on ancilla outcome 0 with U0 = σx, U1 = iσy, V = W = H.
DilationCircuit jump_circuit() {
    DilationCircuit c;
    c.system_dim = 2;
    c.ancilla_dim = 2;
    Matrix h(2, 2);
    h << 1.0, 1.0, 1.0, -1.0;
    h *= std::sqrt(0.5);
    c.v = h;
    c.w = h;
    c.unitaries = {pauli::x(), Complex(0.0, 1.0) * pauli::y()};
    return c;
}

Matrix depolarizing_v(double p) {
    const double q = p / 4.0;
    const double a = clamped_sqrt(1.0 - 3.0 * q);
    const double b = clamped_sqrt(q);
    const double one_q = 1.0 - q;
    const double half = 1.0 - p / 2.0;
    Matrix v = Matrix::Zero(4, 4);
    v(0, 0) = a;
    v(0, 1) = -clamped_sqrt(q * (1.0 - 3.0 * q) / one_q);
    v(0, 2) = -clamped_sqrt(q * (1.0 - 3.0 * q) / (one_q * half));
    v(0, 3) = -clamped_sqrt(p / (4.0 - 2.0 * p));
    v(1, 0) = b;
    v(1, 1) = clamped_sqrt(one_q);
    v(2, 0) = b;
    v(2, 1) = -q / std::sqrt(one_q);
    v(2, 2) = clamped_sqrt(half / one_q);
    v(3, 0) = b;
    v(3, 1) = -q / std::sqrt(one_q);
    v(3, 2) = -q / std::sqrt(one_q * half);
    v(3, 3) = clamped_sqrt((4.0 - 3.0 * p) / (4.0 - 2.0 * p));
    return v;
}

}  // namespace

void DilationCircuit::validate(double atol) const {
    const auto d = idx(ancilla_dim);
    if (ancilla_dim == 0 || system_dim == 0) {
        throw Error(ErrorKind::kDimensionMismatch, "empty dilation circuit");
    }
    if (v.rows() != d || v.cols() != d || w.rows() != d || w.cols() != d) {
        throw Error(ErrorKind::kDimensionMismatch, "V and W must be " + std::to_string(ancilla_dim) +
                                                       "x" + std::to_string(ancilla_dim));
    }
    if (unitaries.size() != ancilla_dim) {
        throw Error(ErrorKind::kDimensionMismatch,
                    "expected " + std::to_string(ancilla_dim) + " controlled unitaries, got " +
                        std::to_string(unitaries.size()));
    }
    for (std::size_t i = 0; i < unitaries.size(); ++i) {
        const auto &u = unitaries[i];
        if (u.rows() != idx(system_dim) || u.cols() != idx(system_dim)) {
            throw Error(ErrorKind::kDimensionMismatch,
                        "U_" + std::to_string(i) + " does not act on the system");
        }
        if (unitarity_residual(u) > atol) {
            throw Error(ErrorKind::kNonUnitary, "U_" + std::to_string(i) + " is not unitary");
        }
    }
    if (unitarity_residual(v) > atol) {
        throw Error(ErrorKind::kNonUnitary, "V is not unitary");
    }
    if (unitarity_residual(w) > atol) {
        throw Error(ErrorKind::kNonUnitary, "W is not unitary");
    }
    const Vector wv0 = w * v.col(0);
    for (Eigen::Index k = 0; k < d; ++k) {
        if (std::abs(wv0(k)) > 1.0 + 1e-10) {
            throw Error(ErrorKind::kNonUnitary, "|(WV)_k0| exceeds 1");
        }
    }
}

OutcomePolicy OutcomePolicy::trace_all() {
    return OutcomePolicy{};
}

OutcomePolicy OutcomePolicy::select(std::vector<WeightedOutcome> outcomes) {
    return OutcomePolicy{PolicyKind::kSelectOutcomes, std::move(outcomes)};
}

Strategy parse_strategy(std::string_view name) {
    if (name == "auto") return Strategy::kAuto;
    if (name == "diagonal") return Strategy::kDiagonal;
    if (name == "matched") return Strategy::kMatched;
    if (name == "branch") return Strategy::kBranch;
    if (name == "paper") return Strategy::kPaper;
    throw Error(ErrorKind::kUnknownName, "unknown strategy '" + std::string(name) + "'");
}

std::string_view strategy_name(Strategy s) {
    switch (s) {
        case Strategy::kAuto:
            return "auto";
        case Strategy::kDiagonal:
            return "diagonal";
        case Strategy::kMatched:
            return "matched";
        case Strategy::kBranch:
            return "branch";
        case Strategy::kPaper:
            return "paper";
    }
    return "?";
}

Matrix complete_unitary(const Vector &v) {
    const double norm = v.norm();
    if (v.size() == 0 || std::abs(norm - 1.0) >= 1e-10) {
        throw Error(ErrorKind::kNonUnitVector, "cannot complete a vector of norm " + std::to_string(norm));
    }
    const Vector unit = v / norm;
    const Eigen::Index d = unit.size();
    const double a = std::abs(unit(0));
    const Complex phase = a > 0.0 ? unit(0) / a : Complex(1.0, 0.0);

    // Householder vector w = e0 - conj(phase)·v, with w0 = 1 - |v0| written
    // without cancellation.
    Vector w = -std::conj(phase) * unit;
    const double tail = d > 1 ? unit.tail(d - 1).squaredNorm() : 0.0;
    w(0) = tail / (1.0 + a);
    const double ww = w.squaredNorm();

    Matrix h = Matrix::Identity(d, d);
    if (tail > 0.0 && ww > 0.0) {
        h -= (2.0 / ww) * (w * w.adjoint());
    }
    return phase * h;
}

SimulationPlan compile_diagonal_chi(const KrausChannel &ch, const UnitaryBasis &basis) {
    require_basis_dim(ch, basis);
    require_cptp(ch);
    const Matrix c = coefficient_matrix(ch, basis);
    const auto active = active_columns(c);
    const Matrix ca = restrict_columns(c, active);
    const ChiMatrix chi{ca.transpose() * ca.conjugate()};
    if (!chi.is_diagonal(kCompileTolerance)) {
        throw Error(ErrorKind::kStrategyInapplicable,
                    "chi matrix has off-diagonal magnitude " + std::to_string(chi.off_diagonal_mass()));
    }

    const std::size_t d = active.size();
    Vector v(idx(d));
    for (std::size_t i = 0; i < d; ++i) {
        v(idx(i)) = clamped_sqrt(chi.chi(idx(i), idx(i)).real());
    }
    v /= v.norm();

    DilationCircuit circuit;
    circuit.system_dim = ch.dim();
    circuit.ancilla_dim = d;
    circuit.v = complete_unitary(v);
    circuit.w = Matrix::Identity(idx(d), idx(d));
    circuit.unitaries = select_elements(basis, active);
    circuit.validate(kCompileTolerance);
    return SimulationPlan{"diagonal:" + ch.label(), {{std::move(circuit), OutcomePolicy::trace_all()}}};
}

SimulationPlan compile_kraus_matched(const KrausChannel &ch, const UnitaryBasis &basis) {
    require_basis_dim(ch, basis);
    require_cptp(ch);
    const Matrix c = coefficient_matrix(ch, basis);
    const auto active = active_columns(c);
    const Matrix ca = restrict_columns(c, active);
    const std::size_t d = active.size();
    const std::size_t kraus_count = ch.ops().size();
    if (kraus_count != d) {
        throw Error(ErrorKind::kStrategyInapplicable,
                    std::to_string(kraus_count) + " Kraus operators but " + std::to_string(d) +
                        " active basis elements");
    }

    Vector v(idx(d));
    for (std::size_t i = 0; i < d; ++i) {
        v(idx(i)) = ca.col(idx(i)).norm();
        if (v(idx(i)).real() < 1e-12) {
            throw Error(ErrorKind::kDegenerate, "coefficient column " + std::to_string(i) + " vanishes");
        }
    }
    Matrix w(idx(d), idx(d));
    for (std::size_t i = 0; i < d; ++i) {
        w.col(idx(i)) = ca.col(idx(i)) / v(idx(i)).real();
    }
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i + 1; j < d; ++j) {
            const double overlap = std::abs(w.col(idx(i)).dot(w.col(idx(j))));
            if (overlap >= kCompileTolerance) {
                throw Error(ErrorKind::kStrategyInapplicable,
                            "coefficient columns " + std::to_string(i) + " and " +
                                std::to_string(j) + " are not orthogonal");
            }
        }
    }

    auto unitaries = select_elements(basis, active);
    // Move each column phase of W into the matching controlled unitary.
    for (std::size_t i = 0; i < d; ++i) {
        for (Eigen::Index k = 0; k < w.rows(); ++k) {
            const Complex entry = w(k, idx(i));
            if (std::abs(entry) > 1e-12) {
                const Complex phase = entry / std::abs(entry);
                w.col(idx(i)) *= std::conj(phase);
                unitaries[i] *= phase;
                break;
            }
        }
    }

    DilationCircuit circuit;
    circuit.system_dim = ch.dim();
    circuit.ancilla_dim = d;
    circuit.v = complete_unitary(v / v.norm());
    circuit.w = std::move(w);
    circuit.unitaries = std::move(unitaries);
    circuit.validate(kCompileTolerance);
    return SimulationPlan{"matched:" + ch.label(), {{std::move(circuit), OutcomePolicy::trace_all()}}};
}

SimulationPlan compile_branch(const KrausChannel &ch, const UnitaryBasis &basis) {
    require_basis_dim(ch, basis);
    require_cptp(ch);
    const Matrix c = coefficient_matrix(ch, basis);
    SimulationPlan plan;
    plan.label = "branch:" + ch.label();
    for (Eigen::Index k = 0; k < c.rows(); ++k) {
        std::vector<std::size_t> active;
        for (Eigen::Index i = 0; i < c.cols(); ++i) {
            if (std::abs(c(k, i)) > 1e-14) {
                active.push_back(static_cast<std::size_t>(i));
            }
        }
        Vector row(idx(active.size()));
        for (std::size_t j = 0; j < active.size(); ++j) {
            row(idx(j)) = c(k, idx(active[j]));
        }
        const double s = row.norm();
        if (active.empty() || s < 1e-14) {
            throw Error(ErrorKind::kDegenerate, "Kraus operator " + std::to_string(k) + " is zero");
        }
        const std::size_t d = active.size();

        DilationCircuit circuit;
        circuit.system_dim = ch.dim();
        circuit.ancilla_dim = d;
        circuit.v = complete_unitary(row / s);
        circuit.w = fourier_adjoint(d);
        circuit.unitaries = select_elements(basis, active);
        circuit.validate(kCompileTolerance);
        plan.circuits.push_back(
            {std::move(circuit),
             OutcomePolicy::select({{0, static_cast<double>(d) * s * s}})});
    }
    return plan;
}

SimulationPlan paper_preset(const ChannelPreset &spec) {
    if (!(spec.param >= 0.0 && spec.param <= 1.0)) {
        throw Error(ErrorKind::kOutOfRange,
                    "channel parameter " + std::to_string(spec.param) + " outside [0, 1]");
    }
    SimulationPlan plan;
    plan.label = "paper:" + std::string(channel_kind_name(spec.kind)) + "(" +
                 std::to_string(spec.param) + ")";
    switch (spec.kind) {
        case ChannelKind::kPhaseDamping:
            plan.circuits.push_back({phase_damping_circuit(spec.param), OutcomePolicy::trace_all()});
            break;
        case ChannelKind::kAmplitudeDamping:
            plan.circuits.push_back(
                {phase_damping_circuit(spec.param), OutcomePolicy::select({{0, 1.0}})});
            plan.circuits.push_back({jump_circuit(), OutcomePolicy::select({{0, spec.param}})});
            break;
        case ChannelKind::kDepolarizing: {
            DilationCircuit c;
            c.system_dim = 2;
            c.ancilla_dim = 4;
            c.v = depolarizing_v(spec.param);
            c.w = Matrix::Identity(4, 4);
            c.unitaries = {pauli::identity(), pauli::x(), pauli::y(), pauli::z()};
            plan.circuits.push_back({std::move(c), OutcomePolicy::trace_all()});
            break;
        }
    }
    for (const auto &pc : plan.circuits) {
        pc.circuit.validate();
    }
    return plan;
}

SimulationPlan paper_preset(std::string_view name, double param) {
    return paper_preset(ChannelPreset{parse_channel_kind(name), param});
}

SimulationPlan compile(const KrausChannel &ch, const UnitaryBasis &basis, Strategy strategy) {
    switch (strategy) {
        case Strategy::kDiagonal:
            return compile_diagonal_chi(ch, basis);
        case Strategy::kMatched:
            return compile_kraus_matched(ch, basis);
        case Strategy::kBranch:
            return compile_branch(ch, basis);
        case Strategy::kPaper:
            throw Error(ErrorKind::kStrategyInapplicable,
                        "strategy 'paper' only applies to the named presets");
        case Strategy::kAuto:
            break;
    }
    try {
        return compile_diagonal_chi(ch, basis);
    } catch (const Error &e) {
        if (e.kind() != ErrorKind::kStrategyInapplicable) throw;
    }
    try {
        return compile_kraus_matched(ch, basis);
    } catch (const Error &e) {
        if (e.kind() != ErrorKind::kStrategyInapplicable && e.kind() != ErrorKind::kDegenerate) throw;
    }
    return compile_branch(ch, basis);
}

SimulationPlan compile_preset(const ChannelPreset &spec, Strategy strategy, BasisKind basis) {
    if (strategy == Strategy::kPaper) {
        return paper_preset(spec);
    }
    return compile(channel_preset(spec), make_basis(basis, 2), strategy);
}

}  // namespace qchan
