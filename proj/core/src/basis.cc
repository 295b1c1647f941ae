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

#include "qchan/basis.h"

#include <cmath>
#include <numbers>
#include <string>

#include "qchan/errors.h"

namespace qchan {

BasisKind parse_basis_kind(std::string_view name) {
    if (name == "pauli") return BasisKind::kPauli;
    if (name == "weyl") return BasisKind::kWeyl;
    throw Error(ErrorKind::kUnknownName, "unknown basis '" + std::string(name) + "'");
}

std::string_view basis_kind_name(BasisKind kind) {
    return kind == BasisKind::kPauli ? "pauli" : "weyl";
}

UnitaryBasis::UnitaryBasis(BasisKind kind, std::size_t dim, std::vector<Matrix> elements,
                           std::vector<std::string> labels)
    : kind_(kind), dim_(dim), elements_(std::move(elements)), labels_(std::move(labels)) {
    if (labels_.size() != elements_.size()) {
        throw Error(ErrorKind::kDimensionMismatch, "one label per basis element required");
    }
    for (const auto &e : elements_) {
        if (static_cast<std::size_t>(e.rows()) != dim_ || static_cast<std::size_t>(e.cols()) != dim_) {
            throw Error(ErrorKind::kDimensionMismatch, "basis element has the wrong shape");
        }
    }
}

UnitaryBasis UnitaryBasis::restrict_to(const std::vector<std::size_t> &indices) const {
    std::vector<Matrix> elems;
    std::vector<std::string> labels;
    for (const auto i : indices) {
        if (i >= elements_.size()) {
            throw Error(ErrorKind::kOutOfRange, "basis index " + std::to_string(i));
        }
        elems.push_back(elements_[i]);
        labels.push_back(labels_[i]);
    }
    return UnitaryBasis(kind_, dim_, std::move(elems), std::move(labels));
}

UnitaryBasis pauli_basis(std::size_t n) {
    if (n < 1 || n > 4) {
        throw Error(ErrorKind::kOutOfRange,
                    "Pauli basis supports 1 to 4 qubits, got " + std::to_string(n));
    }
    const Matrix singles[4] = {pauli::identity(), pauli::x(), pauli::y(), pauli::z()};
    const char letters[4] = {'I', 'X', 'Y', 'Z'};
    std::size_t count = 1;
    for (std::size_t q = 0; q < n; ++q) {
        count *= 4;
    }
    std::vector<Matrix> elems;
    std::vector<std::string> labels;
    elems.reserve(count);
    for (std::size_t idx = 0; idx < count; ++idx) {
        Matrix m = Matrix::Identity(1, 1);
        std::string label;
        // Digit q (base 4, most significant first) selects the factor on qubit q.
        std::size_t place = count / 4;
        for (std::size_t q = 0; q < n; ++q, place /= 4) {
            const std::size_t digit = (idx / place) % 4;
            m = tensor_product(m, singles[digit]);
            label.push_back(letters[digit]);
        }
        elems.push_back(std::move(m));
        labels.push_back(std::move(label));
    }
    return UnitaryBasis(BasisKind::kPauli, std::size_t{1} << n, std::move(elems),
                        std::move(labels));
}

UnitaryBasis weyl_basis(std::size_t dim) {
    if (dim < 2 || dim > 256) {
        throw Error(ErrorKind::kOutOfRange,
                    "Weyl basis needs 2 <= D <= 256, got " + std::to_string(dim));
    }
    const auto d = static_cast<Eigen::Index>(dim);
    std::vector<Matrix> elems;
    std::vector<std::string> labels;
    elems.reserve(dim * dim);
    for (std::size_t n = 0; n < dim; ++n) {
        for (std::size_t m = 0; m < dim; ++m) {
            Matrix u = Matrix::Zero(d, d);
            for (std::size_t k = 0; k < dim; ++k) {
                // Reduce kn mod D first so the phase argument stays small.
                const double angle =
                    2.0 * std::numbers::pi * static_cast<double>((k * n) % dim) / static_cast<double>(dim);
                u(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>((k + m) % dim)) =
                    std::polar(1.0, angle);
            }
            elems.push_back(std::move(u));
            labels.push_back("U(" + std::to_string(n) + "," + std::to_string(m) + ")");
        }
    }
    return UnitaryBasis(BasisKind::kWeyl, dim, std::move(elems), std::move(labels));
}

UnitaryBasis make_basis(BasisKind kind, std::size_t dim) {
    if (kind == BasisKind::kWeyl) {
        return weyl_basis(dim);
    }
    std::size_t n = 0;
    while ((std::size_t{1} << n) < dim) {
        ++n;
    }
    if ((std::size_t{1} << n) != dim) {
        throw Error(ErrorKind::kOutOfRange,
                    "Pauli basis needs a power-of-two dimension, got " + std::to_string(dim));
    }
    return pauli_basis(n);
}

Vector decompose_operator(const Matrix &e, const UnitaryBasis &basis) {
    if (static_cast<std::size_t>(e.rows()) != basis.dim() ||
        static_cast<std::size_t>(e.cols()) != basis.dim()) {
        throw Error(ErrorKind::kDimensionMismatch,
                    "operator is " + std::to_string(e.rows()) + "x" + std::to_string(e.cols()) +
                        ", basis dimension is " + std::to_string(basis.dim()));
    }
    Vector c(static_cast<Eigen::Index>(basis.size()));
    const double inv_d = 1.0 / static_cast<double>(basis.dim());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        // Tr(U† E) = Σ_ab conj(U_ab) E_ab.
        c(static_cast<Eigen::Index>(i)) = basis[i].conjugate().cwiseProduct(e).sum() * inv_d;
    }
    return c;
}

Matrix reconstruct_operator(const Vector &coeffs, const UnitaryBasis &basis) {
    if (static_cast<std::size_t>(coeffs.size()) != basis.size()) {
        throw Error(ErrorKind::kDimensionMismatch, "coefficient count does not match basis size");
    }
    const auto d = static_cast<Eigen::Index>(basis.dim());
    Matrix out = Matrix::Zero(d, d);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        out += coeffs(static_cast<Eigen::Index>(i)) * basis[i];
    }
    return out;
}

Matrix coefficient_matrix(const KrausChannel &ch, const UnitaryBasis &basis) {
    Matrix c(static_cast<Eigen::Index>(ch.ops().size()), static_cast<Eigen::Index>(basis.size()));
    for (std::size_t k = 0; k < ch.ops().size(); ++k) {
        c.row(static_cast<Eigen::Index>(k)) = decompose_operator(ch.ops()[k], basis).transpose();
    }
    return c;
}

std::vector<std::size_t> active_columns(const Matrix &coeffs, double tol) {
    std::vector<std::size_t> out;
    for (Eigen::Index j = 0; j < coeffs.cols(); ++j) {
        if (coeffs.col(j).norm() > tol) {
            out.push_back(static_cast<std::size_t>(j));
        }
    }
    return out;
}

double ChiMatrix::off_diagonal_mass() const {
    double worst = 0.0;
    for (Eigen::Index j = 0; j < chi.cols(); ++j) {
        for (Eigen::Index i = 0; i < chi.rows(); ++i) {
            if (i != j) {
                worst = std::max(worst, std::abs(chi(i, j)));
            }
        }
    }
    return worst;
}

bool ChiMatrix::is_diagonal(double atol) const {
    return off_diagonal_mass() < atol;
}

ChiMatrix chi_matrix(const KrausChannel &ch, const UnitaryBasis &basis) {
    const Matrix c = coefficient_matrix(ch, basis);
    return ChiMatrix{c.transpose() * c.conjugate()};
}

bool channels_equal(const KrausChannel &a, const KrausChannel &b, const UnitaryBasis &basis,
                    double atol) {
    if (a.dim() != b.dim()) {
        return false;
    }
    return approx_equal(chi_matrix(a, basis).chi, chi_matrix(b, basis).chi, atol);
}

DensityMatrix reconstruct_channel(const ChiMatrix &chi, const UnitaryBasis &basis,
                                  const DensityMatrix &rho) {
    const auto n = static_cast<Eigen::Index>(basis.size());
    if (chi.chi.rows() != n || chi.chi.cols() != n) {
        throw Error(ErrorKind::kDimensionMismatch, "chi matrix does not match basis size");
    }
    if (rho.dim() != basis.dim()) {
        throw Error(ErrorKind::kDimensionMismatch, "state does not match basis dimension");
    }
    if (hermiticity_residual(chi.chi) > 1e-10 || hermitian_eigenvalues(chi.chi).minCoeff() < -1e-10) {
        throw Error(ErrorKind::kNotPositive, "chi matrix is not positive semidefinite");
    }
    if (std::abs(chi.chi.trace() - 1.0) > 1e-10) {
        throw Error(ErrorKind::kNotCptp, "chi matrix trace is not 1");
    }
    const Matrix &r = rho.matrix();
    Matrix out = Matrix::Zero(r.rows(), r.cols());
    for (Eigen::Index i = 0; i < n; ++i) {
        const Matrix left = basis[static_cast<std::size_t>(i)] * r;
        for (Eigen::Index j = 0; j < n; ++j) {
            if (chi.chi(i, j) == Complex(0.0, 0.0)) {
                continue;
            }
            out += chi.chi(i, j) * left * basis[static_cast<std::size_t>(j)].adjoint();
        }
    }
    out = 0.5 * (out + out.adjoint());
    return DensityMatrix(std::move(out), StateTolerance{1e-12, 1e-10, 1e-10});
}

}  // namespace qchan
