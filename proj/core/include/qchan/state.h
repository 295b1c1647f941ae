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

#ifndef QCHAN_STATE_H_
#define QCHAN_STATE_H_

#include <cstddef>
#include <span>
#include <string_view>

#include "qchan/linalg.h"

namespace qchan {

/// Tolerances applied when a matrix is promoted to a DensityMatrix.
struct StateTolerance {
    double hermiticity = 1e-12;
    double trace = 1e-12;
    double positivity = 1e-10;
};

/// Positive, unit-trace Hermitian matrix. Immutable once constructed.
class DensityMatrix {
   public:
    /// Validates the invariants; throws Error(kInvalidState) on violation.
    explicit DensityMatrix(Matrix m, const StateTolerance &tol = {});

    static DensityMatrix from_pure(const Vector &psi);
    static DensityMatrix maximally_mixed(std::size_t dim);

    std::size_t dim() const noexcept {
        return static_cast<std::size_t>(matrix_.rows());
    }
    const Matrix &matrix() const noexcept {
        return matrix_;
    }

   private:
    Matrix matrix_;
};

/// Expectation values (⟨σx⟩, ⟨σy⟩, ⟨σz⟩). Note these are twice the coefficients
/// of ρ = I/2 + αX + βY + γZ.
struct BlochVector {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double norm() const;
};

/// Partial trace of a dense operator over the factors not listed in `keep`.
/// Kept factors retain their original relative order.
Matrix partial_trace(const Matrix &rho, std::span<const std::size_t> dims,
                     std::span<const std::size_t> keep);

DensityMatrix partial_trace(const DensityMatrix &rho, std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep);

/// F = Tr(ρa ρb) / sqrt(Tr(ρa²) Tr(ρb²)).
double fidelity(const DensityMatrix &a, const DensityMatrix &b);

/// Entropy in bits; eigenvalues are clamped to [0, 1] and 0·log 0 := 0.
double von_neumann_entropy(const DensityMatrix &rho);

BlochVector bloch_vector(const DensityMatrix &rho);
DensityMatrix state_from_bloch(const BlochVector &v);

/// Named single-qubit inputs: "X", "-X", "Y", "-Y", "Z", "-Z".
BlochVector named_input(std::string_view name);

}  // namespace qchan

#endif  // QCHAN_STATE_H_
