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

#ifndef QCHAN_NMR_H_
#define QCHAN_NMR_H_

#include <cstddef>
#include <span>
#include <vector>

#include "qchan/linalg.h"
#include "qchan/state.h"

namespace qchan::nmr {

struct PseudoPureSpec {
    std::size_t n = 1;
    double epsilon = 1.0;
};

/// (1-ε)/2ⁿ I + ε |0…0⟩⟨0…0|.
DensityMatrix pps_state(const PseudoPureSpec &spec);

/// ρ − (1-ε)/2ⁿ I, i.e. ε |0…0⟩⟨0…0|.
Matrix pps_deviation(const PseudoPureSpec &spec);

/// ρ − Tr(ρ)/D · I. Traceless observables see the same expectation value.
Matrix traceless_part(const Matrix &rho);

/// I/2ⁿ + Σ_i ε_i σz^{(i)}, qubit 0 major. Throws kNotPositive if not PSD.
DensityMatrix thermal_state(std::size_t n, std::span<const double> polarizations);

enum class Axis { kX, kY };

/// σ_axis ⊗ |b(m-1)⟩⟨b(m-1)| with b the (n-1)-bit binary encoding, m in 1..2^{n-1}.
Matrix peak_observable(Axis axis, std::size_t m, std::size_t n);

struct PeakReading {
    std::size_t m = 0;
    double mx = 0.0;
    double my = 0.0;
};

/// One reading per spectral peak m = 1..2^{n-1}. System qubit is the major factor.
std::vector<PeakReading> peak_expectations(const Matrix &rho_sa, std::size_t n);

/// Applies exp(-iπ/4 σy) on the system qubit and reads total ⟨Mx⟩, which
/// equals ⟨σz ⊗ I⟩ before the pulse.
double readout_z(const Matrix &rho_sa, std::size_t n);

struct Magnetization {
    double mx = 0.0;
    double my = 0.0;
    double mz = 0.0;
};

/// Full (⟨Mx⟩, ⟨My⟩, ⟨Mz⟩) from summed peaks plus the readout pulse.
Magnetization measure_system(const Matrix &rho_sa, std::size_t n);

/// ρ_S = ½(I + (⟨Mx⟩σx + ⟨My⟩σy + ⟨Mz⟩σz) / scale).
DensityMatrix tomography_reconstruct(const Magnetization &m, double scale = 1.0);

/// sqrt(Σ (sim − th)² / (M − 1)).
double deviation_metric(std::span<const double> sim, std::span<const double> th);

}  // namespace qchan::nmr

#endif  // QCHAN_NMR_H_
