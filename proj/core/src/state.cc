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

#include "qchan/state.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qchan/errors.h"

namespace qchan {

DensityMatrix::DensityMatrix(Matrix m, const StateTolerance &tol) : matrix_(std::move(m)) {
    if (matrix_.rows() != matrix_.cols() || matrix_.rows() == 0) {
        throw Error(ErrorKind::kInvalidState, "density matrix must be square and non-empty");
    }
    const double herm = hermiticity_residual(matrix_);
    if (herm > tol.hermiticity) {
        throw Error(ErrorKind::kInvalidState,
                    "hermiticity residual " + std::to_string(herm) + " exceeds tolerance");
    }
    const Complex tr = matrix_.trace();
    if (std::abs(tr - 1.0) > tol.trace) {
        throw Error(ErrorKind::kInvalidState, "trace " + std::to_string(tr.real()) + " is not 1");
    }
    const RealVector ev = hermitian_eigenvalues(matrix_);
    if (ev.minCoeff() < -tol.positivity) {
        throw Error(ErrorKind::kInvalidState,
                    "negative eigenvalue " + std::to_string(ev.minCoeff()));
    }
}

DensityMatrix DensityMatrix::from_pure(const Vector &psi) {
    const double n = psi.norm();
    if (std::abs(n - 1.0) > 1e-10) {
        throw Error(ErrorKind::kNonUnitVector, "pure state norm " + std::to_string(n));
    }
    return DensityMatrix(projector(psi));
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
    const auto d = static_cast<Eigen::Index>(dim);
    return DensityMatrix(Matrix::Identity(d, d) / static_cast<double>(dim));
}

double BlochVector::norm() const {
    return std::sqrt(x * x + y * y + z * z);
}

Matrix partial_trace(const Matrix &rho, std::span<const std::size_t> dims,
                     std::span<const std::size_t> keep) {
    std::size_t total = 1;
    for (const auto d : dims) {
        if (d == 0) {
            throw Error(ErrorKind::kDimensionMismatch, "zero factor dimension");
        }
        total *= d;
    }
    if (rho.rows() != rho.cols() || static_cast<std::size_t>(rho.rows()) != total) {
        throw Error(ErrorKind::kDimensionMismatch,
                    "factor dimensions multiply to " + std::to_string(total) +
                        " but the operator is " + std::to_string(rho.rows()) + "x" +
                        std::to_string(rho.cols()));
    }
    if (keep.empty()) {
        throw Error(ErrorKind::kOutOfRange, "partial trace must keep at least one factor");
    }
    std::vector<bool> kept(dims.size(), false);
    for (const auto k : keep) {
        if (k >= dims.size()) {
            throw Error(ErrorKind::kOutOfRange, "kept factor " + std::to_string(k) +
                                                    " out of " + std::to_string(dims.size()));
        }
        if (kept[k]) {
            throw Error(ErrorKind::kOutOfRange, "factor " + std::to_string(k) + " kept twice");
        }
        kept[k] = true;
    }

    // Row-major strides over the factors.
    std::vector<std::size_t> stride(dims.size(), 1);
    for (std::size_t f = dims.size(); f-- > 1;) {
        stride[f - 1] = stride[f] * dims[f];
    }

    std::size_t kept_dim = 1;
    for (std::size_t f = 0; f < dims.size(); ++f) {
        if (kept[f]) {
            kept_dim *= dims[f];
        }
    }
    const std::size_t traced_dim = total / kept_dim;

    // offset[k] + trace_offset[t] is the full index of kept index k, traced index t.
    auto offsets = [&](bool want_kept, std::size_t count) {
        std::vector<std::size_t> out(count, 0);
        for (std::size_t idx = 0; idx < count; ++idx) {
            std::size_t rem = idx;
            std::size_t full = 0;
            for (std::size_t f = dims.size(); f-- > 0;) {
                if (kept[f] != want_kept) {
                    continue;
                }
                full += (rem % dims[f]) * stride[f];
                rem /= dims[f];
            }
            out[idx] = full;
        }
        return out;
    };
    const auto kept_off = offsets(true, kept_dim);
    const auto traced_off = offsets(false, traced_dim);

    Matrix out = Matrix::Zero(static_cast<Eigen::Index>(kept_dim),
                              static_cast<Eigen::Index>(kept_dim));
    for (std::size_t j = 0; j < kept_dim; ++j) {
        for (std::size_t i = 0; i < kept_dim; ++i) {
            Complex acc = 0.0;
            for (const auto t : traced_off) {
                acc += rho(static_cast<Eigen::Index>(kept_off[i] + t),
                           static_cast<Eigen::Index>(kept_off[j] + t));
            }
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = acc;
        }
    }
    return out;
}

DensityMatrix partial_trace(const DensityMatrix &rho, std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep) {
    return DensityMatrix(partial_trace(rho.matrix(), dims, keep));
}

double fidelity(const DensityMatrix &a, const DensityMatrix &b) {
    if (a.dim() != b.dim()) {
        throw Error(ErrorKind::kDimensionMismatch, "fidelity of states with different dimensions");
    }
    // Tr(AB) for Hermitian A, B is Σ_ij A_ij conj(B_ij).
    const double overlap = (a.matrix().cwiseProduct(b.matrix().conjugate())).sum().real();
    const double pa = a.matrix().squaredNorm();
    const double pb = b.matrix().squaredNorm();
    if (pa < 1e-300 || pb < 1e-300) {
        throw Error(ErrorKind::kDivideByZero, "purity underflow in fidelity");
    }
    return overlap / std::sqrt(pa * pb);
}

double von_neumann_entropy(const DensityMatrix &rho) {
    const RealVector ev = hermitian_eigenvalues(rho.matrix());
    double s = 0.0;
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        const double p = std::clamp(ev(i), 0.0, 1.0);
        if (p > 0.0) {
            s -= p * std::log2(p);
        }
    }
    return s;
}

BlochVector bloch_vector(const DensityMatrix &rho) {
    if (rho.dim() != 2) {
        throw Error(ErrorKind::kDimensionMismatch,
                    "Bloch vector needs a qubit, got dimension " + std::to_string(rho.dim()));
    }
    const Matrix &m = rho.matrix();
    return BlochVector{2.0 * m(0, 1).real(), -2.0 * m(0, 1).imag(),
                       (m(0, 0) - m(1, 1)).real()};
}

DensityMatrix state_from_bloch(const BlochVector &v) {
    if (v.norm() > 1.0 + 1e-10) {
        throw Error(ErrorKind::kOutOfRange, "Bloch vector norm " + std::to_string(v.norm()) + " > 1");
    }
    Matrix m(2, 2);
    m << 0.5 * (1.0 + v.z), Complex(0.5 * v.x, -0.5 * v.y), Complex(0.5 * v.x, 0.5 * v.y),
        0.5 * (1.0 - v.z);
    return DensityMatrix(std::move(m));
}

BlochVector named_input(std::string_view name) {
    if (name == "X" || name == "x" || name == "+X") return {1.0, 0.0, 0.0};
    if (name == "-X" || name == "-x") return {-1.0, 0.0, 0.0};
    if (name == "Y" || name == "y" || name == "+Y") return {0.0, 1.0, 0.0};
    if (name == "-Y" || name == "-y") return {0.0, -1.0, 0.0};
    if (name == "Z" || name == "z" || name == "+Z") return {0.0, 0.0, 1.0};
    if (name == "-Z" || name == "-z") return {0.0, 0.0, -1.0};
    throw Error(ErrorKind::kUnknownName, "unknown input state '" + std::string(name) + "'");
}

}  // namespace qchan
