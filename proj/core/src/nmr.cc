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

#include "qchan/nmr.h"

#include <cmath>
#include <numbers>
#include <string>

#include "qchan/errors.h"

namespace qchan::nmr {

namespace {

std::size_t register_dim(std::size_t n) {
    if (n < 1 || n > 12) {
        throw Error(ErrorKind::kOutOfRange, "qubit count " + std::to_string(n) + " outside [1, 12]");
    }
    return std::size_t{1} << n;
}

void check_joint(const Matrix &rho_sa, std::size_t n) {
    const auto d = static_cast<Eigen::Index>(register_dim(n));
    if (rho_sa.rows() != d || rho_sa.cols() != d) {
        throw Error(ErrorKind::kDimensionMismatch,
                    "state is " + std::to_string(rho_sa.rows()) + "x" + std::to_string(rho_sa.cols()) +
                        ", expected " + std::to_string(d) + " for " + std::to_string(n) + " qubits");
    }
}

/// Tr(ρ (σ ⊗ I)) restricted to the ancilla pattern b: Σ_{s,s'} σ_{s's} ρ_{(s,b),(s',b)}.
Complex system_expectation(const Matrix &rho_sa, const Matrix &sigma, std::size_t ancilla_dim,
                           std::size_t pattern) {
    Complex acc = 0.0;
    for (Eigen::Index s = 0; s < 2; ++s) {
        for (Eigen::Index t = 0; t < 2; ++t) {
            const auto row = static_cast<Eigen::Index>(static_cast<std::size_t>(s) * ancilla_dim + pattern);
            const auto col = static_cast<Eigen::Index>(static_cast<std::size_t>(t) * ancilla_dim + pattern);
            acc += sigma(t, s) * rho_sa(row, col);
        }
    }
    return acc;
}

}  // namespace

DensityMatrix pps_state(const PseudoPureSpec &spec) {
    if (!(spec.epsilon >= 0.0 && spec.epsilon <= 1.0)) {
        throw Error(ErrorKind::kOutOfRange, "polarization " + std::to_string(spec.epsilon) + " outside [0, 1]");
    }
    const auto d = static_cast<Eigen::Index>(register_dim(spec.n));
    Matrix m = Matrix::Identity(d, d) * ((1.0 - spec.epsilon) / static_cast<double>(d));
    m(0, 0) += spec.epsilon;
    return DensityMatrix(std::move(m));
}

Matrix pps_deviation(const PseudoPureSpec &spec) {
    const auto rho = pps_state(spec);
    const auto d = static_cast<Eigen::Index>(rho.dim());
    return rho.matrix() - Matrix::Identity(d, d) * ((1.0 - spec.epsilon) / static_cast<double>(d));
}

Matrix traceless_part(const Matrix &rho) {
    const Complex tr = rho.trace();
    return rho - Matrix::Identity(rho.rows(), rho.cols()) * (tr / static_cast<double>(rho.rows()));
}

DensityMatrix thermal_state(std::size_t n, std::span<const double> polarizations) {
    const std::size_t dim = register_dim(n);
    if (polarizations.size() != n) {
        throw Error(ErrorKind::kDimensionMismatch,
                    std::to_string(polarizations.size()) + " polarizations for " + std::to_string(n) + " qubits");
    }
    const auto d = static_cast<Eigen::Index>(dim);
    Matrix m = Matrix::Identity(d, d) / static_cast<double>(dim);
    for (std::size_t basis = 0; basis < dim; ++basis) {
        double diag = 0.0;
        for (std::size_t q = 0; q < n; ++q) {
            const bool one = (basis >> (n - 1 - q)) & 1U;
            diag += one ? -polarizations[q] : polarizations[q];
        }
        m(static_cast<Eigen::Index>(basis), static_cast<Eigen::Index>(basis)) += diag;
    }
    if (hermitian_eigenvalues(m).minCoeff() < -1e-12) {
        throw Error(ErrorKind::kNotPositive, "polarizations too large for a positive thermal state");
    }
    return DensityMatrix(std::move(m));
}

Matrix peak_observable(Axis axis, std::size_t m, std::size_t n) {
    const std::size_t dim = register_dim(n);
    const std::size_t peaks = dim / 2;
    if (m < 1 || m > peaks) {
        throw Error(ErrorKind::kOutOfRange,
                    "peak index " + std::to_string(m) + " outside 1.." + std::to_string(peaks));
    }
    const Matrix sigma = axis == Axis::kX ? pauli::x() : pauli::y();
    Matrix p = Matrix::Zero(static_cast<Eigen::Index>(peaks), static_cast<Eigen::Index>(peaks));
    p(static_cast<Eigen::Index>(m - 1), static_cast<Eigen::Index>(m - 1)) = 1.0;
    return tensor_product(sigma, p);
}

std::vector<PeakReading> peak_expectations(const Matrix &rho_sa, std::size_t n) {
    check_joint(rho_sa, n);
    const std::size_t peaks = register_dim(n) / 2;
    const Matrix sx = pauli::x();
    const Matrix sy = pauli::y();
    std::vector<PeakReading> out;
    out.reserve(peaks);
    for (std::size_t b = 0; b < peaks; ++b) {
        out.push_back(PeakReading{b + 1, system_expectation(rho_sa, sx, peaks, b).real(),
                                  system_expectation(rho_sa, sy, peaks, b).real()});
    }
    return out;
}

double readout_z(const Matrix &rho_sa, std::size_t n) {
    check_joint(rho_sa, n);
    const std::size_t peaks = register_dim(n) / 2;
    // exp(-iπ/4 σy) = (I - iσy)/√2.
    const Matrix pulse = (pauli::identity() - Complex(0.0, 1.0) * pauli::y()) * std::sqrt(0.5);
    const auto pd = static_cast<Eigen::Index>(peaks);
    const Matrix full = tensor_product(pulse, Matrix::Identity(pd, pd));
    const Matrix rotated = full * rho_sa * full.adjoint();
    double total = 0.0;
    for (const auto &r : peak_expectations(rotated, n)) {
        total += r.mx;
    }
    return total;
}

Magnetization measure_system(const Matrix &rho_sa, std::size_t n) {
    Magnetization m;
    for (const auto &r : peak_expectations(rho_sa, n)) {
        m.mx += r.mx;
        m.my += r.my;
    }
    m.mz = readout_z(rho_sa, n);
    return m;
}

DensityMatrix tomography_reconstruct(const Magnetization &m, double scale) {
    if (!(scale > 0.0)) {
        throw Error(ErrorKind::kOutOfRange, "signal scale must be positive");
    }
    const double x = m.mx / scale;
    const double y = m.my / scale;
    const double z = m.mz / scale;
    for (const double e : {x, y, z}) {
        if (std::abs(e) > 1.0 + 1e-10) {
            throw Error(ErrorKind::kOutOfRange, "expectation " + std::to_string(e) + " outside [-1, 1]");
        }
    }
    const double norm = std::sqrt(x * x + y * y + z * z);
    if (norm > 1.0 + 1e-8) {
        throw Error(ErrorKind::kOutOfRange, "Bloch norm " + std::to_string(norm) + " exceeds 1");
    }
    Matrix rho(2, 2);
    rho << 0.5 * (1.0 + z), Complex(0.5 * x, -0.5 * y), Complex(0.5 * x, 0.5 * y), 0.5 * (1.0 - z);
    return DensityMatrix(std::move(rho), StateTolerance{1e-12, 1e-12, 1e-8});
}

double deviation_metric(std::span<const double> sim, std::span<const double> th) {
    if (sim.size() != th.size()) {
        throw Error(ErrorKind::kDimensionMismatch, "series lengths differ");
    }
    if (sim.size() < 2) {
        throw Error(ErrorKind::kOutOfRange, "deviation needs at least two samples");
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < sim.size(); ++i) {
        const double d = sim[i] - th[i];
        acc += d * d;
    }
    return std::sqrt(acc / static_cast<double>(sim.size() - 1));
}

}  // namespace qchan::nmr
