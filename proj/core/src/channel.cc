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

#include "qchan/channel.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "qchan/errors.h"

namespace qchan {

namespace {

void check_param(double param) {
    if (!(param >= 0.0 && param <= 1.0)) {
        throw Error(ErrorKind::kOutOfRange,
                    "channel parameter " + std::to_string(param) + " outside [0, 1]");
    }
}

double clamped_sqrt(double x) {
    return std::sqrt(std::max(x, 0.0));
}

}  // namespace

KrausChannel::KrausChannel(std::vector<Matrix> ops, std::string label)
    : dim_(0), ops_(std::move(ops)), label_(std::move(label)) {
    if (ops_.empty()) {
        throw Error(ErrorKind::kDimensionMismatch, "a channel needs at least one Kraus operator");
    }
    dim_ = static_cast<std::size_t>(ops_.front().rows());
    for (std::size_t k = 0; k < ops_.size(); ++k) {
        if (static_cast<std::size_t>(ops_[k].rows()) != dim_ ||
            static_cast<std::size_t>(ops_[k].cols()) != dim_ || dim_ == 0) {
            throw Error(ErrorKind::kDimensionMismatch,
                        "Kraus operator " + std::to_string(k) + " is not " +
                            std::to_string(dim_) + "x" + std::to_string(dim_));
        }
    }
}

CptpReport validate_cptp(const KrausChannel &ch) {
    const auto d = static_cast<Eigen::Index>(ch.dim());
    Matrix sum = Matrix::Zero(d, d);
    for (const auto &e : ch.ops()) {
        sum += e.adjoint() * e;
    }
    CptpReport report;
    report.max_deviation = max_abs_diff(sum, Matrix::Identity(d, d));
    report.ok = report.max_deviation < kCptpTolerance;
    return report;
}

Matrix apply_kraus(const std::vector<Matrix> &ops, const Matrix &rho) {
    Matrix out = Matrix::Zero(rho.rows(), rho.cols());
    for (const auto &e : ops) {
        out += e * rho * e.adjoint();
    }
    return out;
}

DensityMatrix apply_channel(const KrausChannel &ch, const DensityMatrix &rho) {
    if (ch.dim() != rho.dim()) {
        throw Error(ErrorKind::kDimensionMismatch,
                    "channel acts on dimension " + std::to_string(ch.dim()) +
                        ", state has dimension " + std::to_string(rho.dim()));
    }
    const auto report = validate_cptp(ch);
    if (!report.ok) {
        throw Error(ErrorKind::kNotCptp,
                    "Kraus completeness deviation " + std::to_string(report.max_deviation));
    }
    Matrix out = apply_kraus(ch.ops(), rho.matrix());
    out = 0.5 * (out + out.adjoint());
    return DensityMatrix(std::move(out), StateTolerance{1e-12, 1e-10, 1e-10});
}

ChannelKind parse_channel_kind(std::string_view name) {
    if (name == "pd") return ChannelKind::kPhaseDamping;
    if (name == "ad") return ChannelKind::kAmplitudeDamping;
    if (name == "dep") return ChannelKind::kDepolarizing;
    throw Error(ErrorKind::kUnknownName, "unknown channel '" + std::string(name) + "'");
}

std::string_view channel_kind_name(ChannelKind kind) {
    switch (kind) {
        case ChannelKind::kPhaseDamping:
            return "pd";
        case ChannelKind::kAmplitudeDamping:
            return "ad";
        case ChannelKind::kDepolarizing:
            return "dep";
    }
    return "?";
}

KrausChannel channel_preset(const ChannelPreset &spec) {
    check_param(spec.param);
    const double t = spec.param;
    std::vector<Matrix> ops;
    switch (spec.kind) {
        case ChannelKind::kPhaseDamping: {
            Matrix e0 = Matrix::Zero(2, 2);
            e0(0, 0) = 1.0;
            e0(1, 1) = clamped_sqrt(1.0 - t);
            Matrix e1 = Matrix::Zero(2, 2);
            e1(1, 1) = clamped_sqrt(t);
            ops = {e0, e1};
            break;
        }
        case ChannelKind::kAmplitudeDamping: {
            Matrix m0 = Matrix::Zero(2, 2);
            m0(0, 0) = 1.0;
            m0(1, 1) = clamped_sqrt(1.0 - t);
            Matrix m1 = Matrix::Zero(2, 2);
            m1(0, 1) = clamped_sqrt(t);
            ops = {m0, m1};
            break;
        }
        case ChannelKind::kDepolarizing: {
            const double a = clamped_sqrt(1.0 - 0.75 * t);
            const double b = clamped_sqrt(0.25 * t);
            ops = {a * pauli::identity(), b * pauli::x(), b * pauli::y(), b * pauli::z()};
            break;
        }
    }
    std::erase_if(ops, [](const Matrix &m) { return m.norm() < 1e-14; });
    KrausChannel ch(std::move(ops), std::string(channel_kind_name(spec.kind)) + "(" +
                                        std::to_string(spec.param) + ")");
    const auto report = validate_cptp(ch);
    if (!report.ok) {
        throw Error(ErrorKind::kNotCptp, "preset failed completeness check");
    }
    return ch;
}

Matrix AmplitudeDampingSplit::apply(const Matrix &rho) const {
    return damped * rho * damped.adjoint() + weight * (jump * rho * jump.adjoint());
}

AmplitudeDampingSplit ad_split(double lambda) {
    check_param(lambda);
    Matrix m0 = Matrix::Zero(2, 2);
    m0(0, 0) = 1.0;
    m0(1, 1) = clamped_sqrt(1.0 - lambda);
    Matrix s0 = Matrix::Zero(2, 2);
    s0(0, 1) = 1.0;
    return {m0, s0, lambda};
}

BlochVector analytic_output(const ChannelPreset &spec, const BlochVector &in) {
    check_param(spec.param);
    const double t = spec.param;
    switch (spec.kind) {
        case ChannelKind::kPhaseDamping: {
            const double c = clamped_sqrt(1.0 - t);
            return {in.x * c, in.y * c, in.z};
        }
        case ChannelKind::kAmplitudeDamping: {
            const double c = clamped_sqrt(1.0 - t);
            return {in.x * c, in.y * c, in.z * (1.0 - t) + t};
        }
        case ChannelKind::kDepolarizing:
            return {(1.0 - t) * in.x, (1.0 - t) * in.y, (1.0 - t) * in.z};
    }
    return in;
}

}  // namespace qchan
