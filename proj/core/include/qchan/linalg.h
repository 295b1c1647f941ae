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

#ifndef QCHAN_LINALG_H_
#define QCHAN_LINALG_H_

#include <complex>
#include <cstddef>
#include <random>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace qchan {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Rng = std::mt19937_64;

namespace pauli {
Matrix identity();
Matrix x();
Matrix y();
Matrix z();
}  // namespace pauli

/// Kronecker product with `a` as the major factor:
/// (a ⊗ b)[ia * rows(b) + ib, ja * cols(b) + jb] = a[ia, ja] * b[ib, jb].
Matrix tensor_product(const Matrix &a, const Matrix &b);

/// Left-to-right Kronecker product of all factors. An empty list gives the 1x1 identity.
Matrix tensor_product(std::span<const Matrix> factors);

/// Largest |a_ij - b_ij|. Shapes must agree.
double max_abs_diff(const Matrix &a, const Matrix &b);

bool approx_equal(const Matrix &a, const Matrix &b, double atol);

/// max |M†M - I|; infinity for non-square input.
double unitarity_residual(const Matrix &m);

bool is_unitary(const Matrix &m, double atol = 1e-12);

/// max |M - M†|.
double hermiticity_residual(const Matrix &m);

/// Ascending eigenvalues of the Hermitian part of `m`. This is the single
/// spectral primitive; entropy and positivity checks both route through it.
RealVector hermitian_eigenvalues(const Matrix &m);

/// |ψ⟩⟨ψ|.
Matrix projector(const Vector &psi);

/// Computational basis vector |k⟩ in dimension `dim`.
Vector basis_vector(std::size_t dim, std::size_t k);

/// Haar-distributed unitary (QR of a complex Ginibre matrix with phase fix).
Matrix random_unitary(std::size_t dim, Rng &rng);

/// Haar-distributed unit vector.
Vector random_unit_vector(std::size_t dim, Rng &rng);

/// Full-rank random density matrix G G† / tr(G G†).
Matrix random_density_matrix(std::size_t dim, Rng &rng);

}  // namespace qchan

#endif  // QCHAN_LINALG_H_
