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

#ifndef QCHAN_CHANNEL_H_
#define QCHAN_CHANNEL_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "qchan/linalg.h"
#include "qchan/state.h"

namespace qchan {

/// Ordered Kraus operators ε(ρ) = Σ_k E_k ρ E_k†. Construction only checks
/// shapes; use validate_cptp() for the completeness relation.
class KrausChannel {
   public:
    KrausChannel(std::vector<Matrix> ops, std::string label = {});

    std::size_t dim() const noexcept {
        return dim_;
    }
    const std::vector<Matrix> &ops() const noexcept {
        return ops_;
    }
    const std::string &label() const noexcept {
        return label_;
    }

   private:
    std::size_t dim_;
    std::vector<Matrix> ops_;
    std::string label_;
};

struct CptpReport {
    double max_deviation = 0.0;
    bool ok = false;
};

inline constexpr double kCptpTolerance = 1e-10;

/// Max absolute entry of Σ E_k†E_k − I; ok iff below kCptpTolerance.
CptpReport validate_cptp(const KrausChannel &ch);

/// Direct Kraus application. This is the oracle every dilation is checked against.
DensityMatrix apply_channel(const KrausChannel &ch, const DensityMatrix &rho);

/// Unvalidated Σ_k E_k ρ E_k† on raw matrices.
Matrix apply_kraus(const std::vector<Matrix> &ops, const Matrix &rho);

enum class ChannelKind { kPhaseDamping, kAmplitudeDamping, kDepolarizing };

/// "pd", "ad", "dep".
ChannelKind parse_channel_kind(std::string_view name);
std::string_view channel_kind_name(ChannelKind kind);

struct ChannelPreset {
    ChannelKind kind;
    double param;  // λ for PD/AD, p for DEP; closed interval [0, 1]
};

/// Kraus set for a preset. Operators with Frobenius norm below 1e-14 are dropped.
KrausChannel channel_preset(const ChannelPreset &spec);

/// AD written as M0 ρ M0† + λ S0 ρ S0†.
struct AmplitudeDampingSplit {
    Matrix damped;  // M0 = diag(1, sqrt(1-λ))
    Matrix jump;    // S0 = [0 1; 0 0]
    double weight;  // λ

    Matrix apply(const Matrix &rho) const;
};

AmplitudeDampingSplit ad_split(double lambda);

/// Closed-form output Bloch vector for a single-qubit preset.
BlochVector analytic_output(const ChannelPreset &spec, const BlochVector &in);

}  // namespace qchan

#endif  // QCHAN_CHANNEL_H_
