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

#ifndef QCHAN_BASIS_H_
#define QCHAN_BASIS_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "qchan/channel.h"
#include "qchan/linalg.h"
#include "qchan/state.h"

namespace qchan {

enum class BasisKind { kPauli, kWeyl };

/// "pauli" | "weyl".
BasisKind parse_basis_kind(std::string_view name);
std::string_view basis_kind_name(BasisKind kind);

/// D² mutually Hilbert–Schmidt-orthogonal unitaries, Tr(U_i†U_j) = D δ_ij.
/// Elements stay unitary so they can be used directly as controlled gates;
/// the 1/D factor lives in decompose_operator().
class UnitaryBasis {
   public:
    UnitaryBasis(BasisKind kind, std::size_t dim, std::vector<Matrix> elements,
                 std::vector<std::string> labels);

    BasisKind kind() const noexcept {
        return kind_;
    }
    std::size_t dim() const noexcept {
        return dim_;
    }
    std::size_t size() const noexcept {
        return elements_.size();
    }
    const std::vector<Matrix> &elements() const noexcept {
        return elements_;
    }
    const Matrix &operator[](std::size_t i) const {
        return elements_[i];
    }
    const std::vector<std::string> &labels() const noexcept {
        return labels_;
    }

    /// Keeps only the listed elements, in the given order.
    UnitaryBasis restrict_to(const std::vector<std::size_t> &indices) const;

   private:
    BasisKind kind_;
    std::size_t dim_;
    std::vector<Matrix> elements_;
    std::vector<std::string> labels_;
};

/// Tensor products of (I, X, Y, Z), lexicographic with the major qubit first. 1 <= n <= 4.
UnitaryBasis pauli_basis(std::size_t n);

/// U_nm = Σ_k exp(2πi kn/D) |k⟩⟨(k+m) mod D|, index n*D + m. D >= 2.
UnitaryBasis weyl_basis(std::size_t dim);

/// Pauli basis for power-of-two dims, otherwise requires kind == kWeyl.
UnitaryBasis make_basis(BasisKind kind, std::size_t dim);

/// c_i = Tr(U_i† E) / D.
Vector decompose_operator(const Matrix &e, const UnitaryBasis &basis);

/// Σ_i c_i U_i.
Matrix reconstruct_operator(const Vector &coeffs, const UnitaryBasis &basis);

/// K x d matrix with row k = decompose_operator(E_k).
Matrix coefficient_matrix(const KrausChannel &ch, const UnitaryBasis &basis);

/// Column indices whose ℓ2 norm exceeds `tol`.
std::vector<std::size_t> active_columns(const Matrix &coeffs, double tol = 1e-12);

/// Process matrix χ_ij = Σ_k c_ki conj(c_kj). Independent of the Kraus gauge.
struct ChiMatrix {
    Matrix chi;

    /// Max off-diagonal magnitude.
    double off_diagonal_mass() const;
    bool is_diagonal(double atol = 1e-10) const;
};

ChiMatrix chi_matrix(const KrausChannel &ch, const UnitaryBasis &basis);

/// Channels are equal iff their χ matrices agree in a common basis.
bool channels_equal(const KrausChannel &a, const KrausChannel &b, const UnitaryBasis &basis,
                    double atol = 1e-10);

/// ε(ρ) = Σ_ij χ_ij U_i ρ U_j†. Rejects χ that is not PSD with unit trace.
DensityMatrix reconstruct_channel(const ChiMatrix &chi, const UnitaryBasis &basis,
                                  const DensityMatrix &rho);

}  // namespace qchan

#endif  // QCHAN_BASIS_H_
