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


#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "qchan/channel.h"
#include "qchan/errors.h"
#include "qchan/linalg.h"
#include "qchan/state.h"
#include "test_util.h"

namespace qchan {
namespace {

using testing::mat2;

std::vector<double> grid21() {
    std::vector<double> g;
    for (int i = 0; i <= 20; ++i) g.push_back(i / 20.0);
    return g;
}

TEST(KrausChannel, RejectsEmptyAndMismatchedShapes) {
    EXPECT_THROW(KrausChannel(std::vector<Matrix>{}), Error);
    EXPECT_THROW(KrausChannel({Matrix::Identity(2, 2), Matrix::Identity(3, 3)}), Error);
    EXPECT_THROW(KrausChannel({Matrix::Zero(2, 3)}), Error);
}

TEST(ValidateCptp, PresetsAcrossGrid) {
    for (const auto kind : {ChannelKind::kPhaseDamping, ChannelKind::kAmplitudeDamping,
                            ChannelKind::kDepolarizing}) {
        for (const double t : grid21()) {
            const CptpReport r = validate_cptp(channel_preset({kind, t}));
            EXPECT_TRUE(r.ok) << channel_kind_name(kind) << " " << t;
            EXPECT_LT(r.max_deviation, kCptpTolerance);
        }
    }
}

TEST(ValidateCptp, RandomIsometryChannelsAreCptp) {
    Rng rng(41);
    for (std::size_t d : {2u, 3u, 4u}) {
        for (std::size_t k : {1u, 2u, 4u}) {
            EXPECT_TRUE(validate_cptp(testing::random_isometry_channel(d, k, rng)).ok);
        }
    }
}

TEST(ValidateCptp, DetectsTraceIncrease) {
    const KrausChannel ch({Matrix::Identity(2, 2), 0.1 * pauli::x()});
    const CptpReport r = validate_cptp(ch);
    EXPECT_FALSE(r.ok);
    EXPECT_NEAR(r.max_deviation, 0.01, 1e-15);
}

TEST(ApplyChannel, RejectsNonCptp) {
    const KrausChannel ch({1.1 * Matrix::Identity(2, 2)});
    try {
        apply_channel(ch, DensityMatrix::maximally_mixed(2));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::kNotCptp);
    }
}

TEST(ApplyChannel, RejectsDimensionMismatch) {
    const KrausChannel ch({Matrix::Identity(2, 2)});
    try {
        apply_channel(ch, DensityMatrix::maximally_mixed(3));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::kDimensionMismatch);
    }
}

TEST(ApplyChannel, PreservesTraceAndPositivity) {
    Rng rng(43);
    for (int t = 0; t < 30; ++t) {
        const KrausChannel ch = testing::random_isometry_channel(3, 3, rng);
        const DensityMatrix rho(random_density_matrix(3, rng));
        const DensityMatrix out = apply_channel(ch, rho);
        EXPECT_NEAR(out.matrix().trace().real(), 1.0, 1e-12);
        EXPECT_GE(hermitian_eigenvalues(out.matrix()).minCoeff(), -1e-12);
    }
}

TEST(ApplyChannel, MatchesExplicitSum) {
    Rng rng(47);
    const KrausChannel ch = testing::random_isometry_channel(2, 3, rng);
    const Matrix rho = random_density_matrix(2, rng);
    Matrix expected = Matrix::Zero(2, 2);
    for (const auto &e : ch.ops()) expected += e * rho * e.adjoint();
    EXPECT_LT(max_abs_diff(apply_channel(ch, DensityMatrix(rho)).matrix(), expected), 1e-14);
    EXPECT_LT(max_abs_diff(apply_kraus(ch.ops(), rho), expected), 1e-15);
}

TEST(ChannelPreset, PhaseDampingOperators) {
    const KrausChannel ch = channel_preset({ChannelKind::kPhaseDamping, 0.36});
    ASSERT_EQ(ch.ops().size(), 2u);
    EXPECT_LT(max_abs_diff(ch.ops()[0], mat2(1, 0, 0, 0.8)), 1e-15);
    EXPECT_LT(max_abs_diff(ch.ops()[1], mat2(0, 0, 0, 0.6)), 1e-15);
}

TEST(ChannelPreset, AmplitudeDampingOperators) {
    const KrausChannel ch = channel_preset({ChannelKind::kAmplitudeDamping, 0.36});
    ASSERT_EQ(ch.ops().size(), 2u);
    EXPECT_LT(max_abs_diff(ch.ops()[0], mat2(1, 0, 0, 0.8)), 1e-15);
    EXPECT_LT(max_abs_diff(ch.ops()[1], mat2(0, 0.6, 0, 0)), 1e-15);
}

TEST(ChannelPreset, DepolarizingOperators) {
    const KrausChannel ch = channel_preset({ChannelKind::kDepolarizing, 0.64});
    ASSERT_EQ(ch.ops().size(), 4u);
    EXPECT_LT(max_abs_diff(ch.ops()[0], std::sqrt(0.52) * testing::id2()), 1e-15);
    EXPECT_LT(max_abs_diff(ch.ops()[1], 0.4 * testing::sx()), 1e-15);
    EXPECT_LT(max_abs_diff(ch.ops()[2], 0.4 * testing::sy()), 1e-15);
    EXPECT_LT(max_abs_diff(ch.ops()[3], 0.4 * testing::sz()), 1e-15);
}

TEST(ChannelPreset, DropsZeroOperatorsAtEndpoints) {
    EXPECT_EQ(channel_preset({ChannelKind::kPhaseDamping, 0.0}).ops().size(), 1u);
    EXPECT_EQ(channel_preset({ChannelKind::kAmplitudeDamping, 0.0}).ops().size(), 1u);
    EXPECT_EQ(channel_preset({ChannelKind::kDepolarizing, 0.0}).ops().size(), 1u);
    EXPECT_EQ(channel_preset({ChannelKind::kPhaseDamping, 1.0}).ops().size(), 2u);
}

TEST(ChannelPreset, RejectsOutOfRangeParameter) {
    for (const double bad : {-0.01, 1.01, std::nan("")}) {
        try {
            channel_preset({ChannelKind::kDepolarizing, bad});
            FAIL() << bad;
        } catch (const Error &e) {
            EXPECT_EQ(e.kind(), ErrorKind::kOutOfRange);
        }
    }
}

TEST(ChannelPreset, NameParsing) {
    EXPECT_EQ(parse_channel_kind("pd"), ChannelKind::kPhaseDamping);
    EXPECT_EQ(parse_channel_kind("ad"), ChannelKind::kAmplitudeDamping);
    EXPECT_EQ(parse_channel_kind("dep"), ChannelKind::kDepolarizing);
    EXPECT_EQ(channel_kind_name(ChannelKind::kDepolarizing), "dep");
    EXPECT_THROW(parse_channel_kind("bitflip"), Error);
}

TEST(AnalyticOutput, AgreesWithKrausEvolution) {
    const std::vector<BlochVector> inputs = {{1, 0, 0}, {0, -1, 0}, {0, 0, 1}, {0.3, -0.4, 0.5}};
    for (const auto kind : {ChannelKind::kPhaseDamping, ChannelKind::kAmplitudeDamping,
                            ChannelKind::kDepolarizing}) {
        for (const double t : grid21()) {
            const KrausChannel ch = channel_preset({kind, t});
            for (const auto &in : inputs) {
                const BlochVector got = bloch_vector(apply_channel(ch, state_from_bloch(in)));
                const BlochVector want = analytic_output({kind, t}, in);
                EXPECT_NEAR(got.x, want.x, 1e-14);
                EXPECT_NEAR(got.y, want.y, 1e-14);
                EXPECT_NEAR(got.z, want.z, 1e-14);
            }
        }
    }
}

TEST(AmplitudeDampingSplit, RecombinesToChannel) {
    Rng rng(53);
    for (const double t : grid21()) {
        const AmplitudeDampingSplit split = ad_split(t);
        EXPECT_EQ(max_abs_diff(split.jump, mat2(0, 1, 0, 0)), 0.0);
        EXPECT_EQ(split.weight, t);
        const Matrix rho = random_density_matrix(2, rng);
        const Matrix want =
            apply_channel(channel_preset({ChannelKind::kAmplitudeDamping, t}), DensityMatrix(rho))
                .matrix();
        EXPECT_LT(max_abs_diff(split.apply(rho), want), 1e-14);
    }
}

TEST(DepolarizingFullStrength, GivesMaximallyMixed) {
    Rng rng(59);
    const KrausChannel ch = channel_preset({ChannelKind::kDepolarizing, 1.0});
    for (int t = 0; t < 10; ++t) {
        const DensityMatrix out = apply_channel(ch, DensityMatrix(random_density_matrix(2, rng)));
        EXPECT_LT(max_abs_diff(out.matrix(), testing::id2() / 2.0), 1e-15);
    }
}

}  // namespace
}  // namespace qchan
