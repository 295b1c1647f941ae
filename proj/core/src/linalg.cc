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

#include "qchan/linalg.h"

#include <cmath>
#include <limits>
#include <string>

#include "qchan/errors.h"

namespace qchan {

namespace pauli {

Matrix identity() {
    return Matrix::Identity(2, 2);
}

Matrix x() {
    Matrix m(2, 2);
    m << 0.0, 1.0, 1.0, 0.0;
    return m;
}

Matrix y() {
    Matrix m(2, 2);
    m << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
    return m;
}

Matrix z() {
    Matrix m(2, 2);
    m << 1.0, 0.0, 0.0, -1.0;
    return m;
}

}  // namespace pauli

Matrix tensor_product(const Matrix &a, const Matrix &b) {
    const Eigen::Index br = b.rows();
    const Eigen::Index bc = b.cols();
    Matrix out(a.rows() * br, a.cols() * bc);
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
        for (Eigen::Index i = 0; i < a.rows(); ++i) {
            out.block(i * br, j * bc, br, bc) = a(i, j) * b;
        }
    }
    return out;
}

Matrix tensor_product(std::span<const Matrix> factors) {
    Matrix out = Matrix::Identity(1, 1);
    for (const auto &f : factors) {
        out = tensor_product(out, f);
    }
    return out;
}

double max_abs_diff(const Matrix &a, const Matrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(ErrorKind::kDimensionMismatch,
                    "cannot compare " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                        " with " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    }
    if (a.size() == 0) {
        return 0.0;
    }
    return (a - b).cwiseAbs().maxCoeff();
}

bool approx_equal(const Matrix &a, const Matrix &b, double atol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        return false;
    }
    return max_abs_diff(a, b) <= atol;
}

double unitarity_residual(const Matrix &m) {
    if (m.rows() != m.cols() || m.size() == 0) {
        return std::numeric_limits<double>::infinity();
    }
    return max_abs_diff(m.adjoint() * m, Matrix::Identity(m.rows(), m.cols()));
}

bool is_unitary(const Matrix &m, double atol) {
    return unitarity_residual(m) <= atol;
}

double hermiticity_residual(const Matrix &m) {
    if (m.rows() != m.cols()) {
        return std::numeric_limits<double>::infinity();
    }
    if (m.size() == 0) {
        return 0.0;
    }
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

RealVector hermitian_eigenvalues(const Matrix &m) {
    if (m.rows() != m.cols()) {
        throw Error(ErrorKind::kDimensionMismatch, "eigenvalues of a non-square matrix");
    }
    const Matrix h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

Matrix projector(const Vector &psi) {
    return psi * psi.adjoint();
}

Vector basis_vector(std::size_t dim, std::size_t k) {
    if (k >= dim) {
        throw Error(ErrorKind::kOutOfRange,
                    "basis index " + std::to_string(k) + " >= dimension " + std::to_string(dim));
    }
    Vector v = Vector::Zero(static_cast<Eigen::Index>(dim));
    v(static_cast<Eigen::Index>(k)) = 1.0;
    return v;
}

namespace {

Matrix ginibre(std::size_t rows, std::size_t cols, Rng &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Matrix g(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (Eigen::Index j = 0; j < g.cols(); ++j) {
        for (Eigen::Index i = 0; i < g.rows(); ++i) {
            const double re = normal(rng);
            const double im = normal(rng);
            g(i, j) = Complex(re, im);
        }
    }
    return g;
}

}  // namespace

Matrix random_unitary(std::size_t dim, Rng &rng) {
    const Matrix g = ginibre(dim, dim, rng);
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index j = 0; j < q.cols(); ++j) {
        const double mag = std::abs(r(j, j));
        if (mag > 0.0) {
            q.col(j) *= r(j, j) / mag;
        }
    }
    return q;
}

Vector random_unit_vector(std::size_t dim, Rng &rng) {
    Vector v = ginibre(dim, 1, rng).col(0);
    return v / v.norm();
}

Matrix random_density_matrix(std::size_t dim, Rng &rng) {
    const Matrix g = ginibre(dim, dim, rng);
    Matrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    return 0.5 * (rho + rho.adjoint());
}

}  // namespace qchan
