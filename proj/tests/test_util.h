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

// Test-only oracles. Nothing here calls into the code paths it is used to check.

#ifndef QCHAN_TESTS_TEST_UTIL_H_
#define QCHAN_TESTS_TEST_UTIL_H_

#include <array>
#include <cmath>
#include <vector>

#include "qchan/channel.h"
#include "qchan/linalg.h"

namespace qchan::testing {

inline Matrix mat2(Complex a, Complex b, Complex c, Complex d) {
    Matrix m(2, 2);
    m << a, b, c, d;
    return m;
}

inline Vector ket(std::initializer_list<Complex> amps) {
    Vector v(static_cast<Eigen::Index>(amps.size()));
    Eigen::Index i = 0;
    for (const auto a : amps) v(i++) = a;
    return v;
}

/// Kronecker product from its block definition.
inline Matrix kron(const Matrix &a, const Matrix &b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

/// Σ_k (I ⊗ ⟨k|) ρ (I ⊗ |k⟩), built from explicit Kronecker factors.
inline Matrix trace_out_last(const Matrix &rho, Eigen::Index keep_dim, Eigen::Index trace_dim) {
    Matrix out = Matrix::Zero(keep_dim, keep_dim);
    for (Eigen::Index k = 0; k < trace_dim; ++k) {
        Matrix bra = Matrix::Zero(keep_dim, keep_dim * trace_dim);
        for (Eigen::Index i = 0; i < keep_dim; ++i) bra(i, i * trace_dim + k) = 1.0;
        out += bra * rho * bra.adjoint();
    }
    return out;
}

/// Σ_k (⟨k| ⊗ I) ρ (|k⟩ ⊗ I).
inline Matrix trace_out_first(const Matrix &rho, Eigen::Index trace_dim, Eigen::Index keep_dim) {
    Matrix out = Matrix::Zero(keep_dim, keep_dim);
    for (Eigen::Index k = 0; k < trace_dim; ++k) {
        Matrix bra = Matrix::Zero(keep_dim, keep_dim * trace_dim);
        for (Eigen::Index i = 0; i < keep_dim; ++i) bra(i, k * keep_dim + i) = 1.0;
        out += bra * rho * bra.adjoint();
    }
    return out;
}

/// Closed-form eigenvalues of a 2x2 Hermitian matrix, descending.
inline std::array<double, 2> eig2(const Matrix &m) {
    const double a = m(0, 0).real();
    const double d = m(1, 1).real();
    const double b = std::abs(m(0, 1));
    const double mid = 0.5 * (a + d);
    const double rad = std::sqrt(0.25 * (a - d) * (a - d) + b * b);
    return {mid + rad, mid - rad};
}

inline double entropy2(const Matrix &m) {
    double s = 0.0;
    for (const double p : eig2(m)) {
        if (p > 0.0) s -= p * std::log2(p);
    }
    return s;
}

/// Tr(A B) by explicit summation.
inline Complex trace_product(const Matrix &a, const Matrix &b) {
    Complex acc = 0.0;
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) acc += a(i, j) * b(j, i);
    return acc;
}

/// Kraus operators read off the first `dim` columns of a random (dim·K)-dimensional
/// unitary, E_k = rows [k·dim, (k+1)·dim). Σ E_k†E_k = I by construction.
inline KrausChannel random_isometry_channel(std::size_t dim, std::size_t kraus, Rng &rng) {
    const Matrix u = random_unitary(dim * kraus, rng);
    std::vector<Matrix> ops;
    const auto d = static_cast<Eigen::Index>(dim);
    for (std::size_t k = 0; k < kraus; ++k) {
        ops.push_back(u.block(static_cast<Eigen::Index>(k) * d, 0, d, d));
    }
    return KrausChannel(std::move(ops), "random");
}

inline Matrix sx() { return mat2(0, 1, 1, 0); }
inline Matrix sy() { return mat2(0, Complex(0, -1), Complex(0, 1), 0); }
inline Matrix sz() { return mat2(1, 0, 0, -1); }
inline Matrix id2() { return mat2(1, 0, 0, 1); }

}  // namespace qchan::testing

#endif  // QCHAN_TESTS_TEST_UTIL_H_
