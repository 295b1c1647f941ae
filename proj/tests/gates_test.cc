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
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "qchan/errors.h"
#include "qchan/gates.h"
#include "qchan/linalg.h"
#include "test_util.h"

namespace qchan {
namespace {

/// C_m(U) from its action on basis states: apply U to the low bits when all
/// m high bits are set.
Matrix oracle_controlled(std::size_t m, const Matrix &u) {
    const auto t = u.rows();
    const Eigen::Index blocks = Eigen::Index{1} << m;
    Matrix out = Matrix::Identity(blocks * t, blocks * t);
    out.bottomRightCorner(t, t) = u;
    return out;
}

std::vector<std::string> pauli_strings(std::size_t width) {
    std::vector<std::string> out = {""};
    for (std::size_t w = 0; w < width; ++w) {
        std::vector<std::string> next;
        for (const auto &s : out)
            for (const char c : std::string("IXYZ")) next.push_back(s + c);
        out = std::move(next);
    }
    return out;
}

TEST(Gate, CnotRejectsSameWire) {
    EXPECT_THROW(Gate::cnot(1, 1), Error);
}

TEST(LocalUnitary, PauliMatrixAndAdjoint) {
    const LocalUnitary zx = LocalUnitary::pauli("ZX");
    EXPECT_EQ(max_abs_diff(zx.matrix(), tensor_product(testing::sz(), testing::sx())), 0.0);
    LocalUnitary phased = zx;
    phased.global_phase = std::polar(1.0, 0.3);
    EXPECT_LT(max_abs_diff(phased.adjoint().matrix(), phased.matrix().adjoint()), 1e-15);
    EXPECT_THROW(LocalUnitary::pauli("XQ"), Error);
    EXPECT_THROW(LocalUnitary::pauli(""), Error);
}

TEST(PrincipalSqrt, SquaresBack) {
    Rng rng(131);
    for (int t = 0; t < 50; ++t) {
        const Matrix2 u = random_unitary(2, rng);
        const Matrix2 r = principal_sqrt(u);
        EXPECT_LT((r * r - u).cwiseAbs().maxCoeff(), 1e-13);
        EXPECT_LT(unitarity_residual(Matrix(r)), 1e-13);
    }
}

TEST(PrincipalSqrt, PauliZGivesPhaseGate) {
    Matrix2 s = Matrix2::Zero();
    s(0, 0) = 1.0;
    s(1, 1) = Complex(0.0, 1.0);
    const Matrix2 z = testing::sz();
    EXPECT_LT((principal_sqrt(z) - s).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(LocalSqrt, SquaresBackWithPhase) {
    LocalUnitary u = LocalUnitary::pauli("XY");
    u.global_phase = -1.0;
    const Matrix r = local_sqrt(u).matrix();
    EXPECT_LT(max_abs_diff(r * r, u.matrix()), 1e-14);
}

TEST(Zyz, ReconstructsRandomUnitaries) {
    Rng rng(137);
    for (int t = 0; t < 100; ++t) {
        const Matrix2 u = random_unitary(2, rng);
        const ZyzAngles z = zyz_decompose(u);
        const Matrix2 back = std::polar(1.0, z.alpha) * rz(z.beta) * ry(z.gamma) * rz(z.delta);
        EXPECT_LT((back - u).cwiseAbs().maxCoeff(), 1e-13);
    }
    for (const Matrix2 u : {Matrix2(testing::sx()), Matrix2(testing::sy()), Matrix2(testing::sz()),
                            Matrix2(testing::id2())}) {
        const ZyzAngles z = zyz_decompose(u);
        const Matrix2 back = std::polar(1.0, z.alpha) * rz(z.beta) * ry(z.gamma) * rz(z.delta);
        EXPECT_LT((back - u).cwiseAbs().maxCoeff(), 1e-14);
    }
}

TEST(ControlledMatrix, MatchesOracle) {
    for (std::size_t m = 0; m <= 3; ++m) {
        const Matrix u = LocalUnitary::pauli("YZ").matrix();
        EXPECT_EQ(max_abs_diff(controlled_matrix(m, u), oracle_controlled(m, u)), 0.0);
    }
}

TEST(Decompose, CnotIsSingleGate) {
    const GateList g = decompose_controlled(1, LocalUnitary::pauli("X"));
    ASSERT_EQ(g.gates.size(), 1u);
    EXPECT_EQ(g.gates[0].kind, GateKind::kCnot);
    EXPECT_EQ(g.gates[0].control, 0u);
    EXPECT_EQ(g.gates[0].wire, 1u);
    EXPECT_EQ(count_gates(g), (GateCounts{0, 1}));
}

TEST(Decompose, ToffoliMatchesPermutation) {
    const Matrix got = reconstruct(decompose_controlled(2, LocalUnitary::pauli("X")));
    Matrix perm = Matrix::Zero(8, 8);
    for (int i = 0; i < 8; ++i) {
        const int j = (i == 6) ? 7 : (i == 7) ? 6 : i;
        perm(j, i) = 1.0;
    }
    EXPECT_LT(max_abs_diff(got, perm), 1e-12);
}

TEST(Decompose, RoundTripAllPauliProducts) {
    for (std::size_t n = 1; n <= 2; ++n) {
        for (std::size_t m = 0; m <= 4; ++m) {
            for (const auto &letters : pauli_strings(n)) {
                for (const Complex phase : {Complex(1.0, 0.0), std::polar(1.0, 0.7), Complex(-1.0, 0.0)}) {
                    LocalUnitary u = LocalUnitary::pauli(letters);
                    u.global_phase = phase;
                    const GateList g = decompose_controlled(m, u);
                    EXPECT_EQ(g.wire_count, m + n);
                    EXPECT_LT(max_abs_diff(reconstruct(g), oracle_controlled(m, u.matrix())), 1e-10)
                        << "m=" << m << " P=" << letters << " phase=" << phase;
                }
            }
        }
    }
}

TEST(Decompose, RoundTripRandomLocalUnitaries) {
    Rng rng(139);
    for (std::size_t m = 0; m <= 3; ++m) {
        for (int t = 0; t < 5; ++t) {
            LocalUnitary u;
            u.factors = {random_unitary(2, rng), random_unitary(2, rng)};
            u.global_phase = std::polar(1.0, 1.3 * t);
            EXPECT_LT(max_abs_diff(reconstruct(decompose_controlled(m, u)),
                                   oracle_controlled(m, u.matrix())),
                      1e-10);
        }
    }
}

TEST(Decompose, IdentityTargetEmitsNothingWithOneControl) {
    EXPECT_TRUE(decompose_controlled(1, LocalUnitary::pauli("II")).gates.empty());
}

TEST(Decompose, CountIdentityFollowsRecursion) {
    const LocalUnitary x = LocalUnitary::pauli("X");
    for (std::size_t n = 1; n <= 2; ++n) {
        const LocalUnitary target = LocalUnitary::pauli(std::string(n, 'Z'));
        const LocalUnitary root = local_sqrt(target);
        for (std::size_t m = 2; m <= 5; ++m) {
            const GateCounts total = count_gates(decompose_controlled(m, target));
            const GateCounts a = count_gates(decompose_controlled(1, root));
            const GateCounts b = count_gates(decompose_controlled(1, root.adjoint()));
            const GateCounts cx = count_gates(decompose_controlled(m - 1, x));
            const GateCounts rest = count_gates(decompose_controlled(m - 1, root));
            EXPECT_EQ(total.cnot, a.cnot + b.cnot + 2 * cx.cnot + rest.cnot) << m;
            EXPECT_EQ(total.single, a.single + b.single + 2 * cx.single + rest.single) << m;
        }
    }
}

TEST(Decompose, CountsGrowWithControls) {
    const LocalUnitary z = LocalUnitary::pauli("Z");
    std::size_t prev = 0;
    for (std::size_t m = 1; m <= 6; ++m) {
        const std::size_t total = count_gates(decompose_controlled(m, z)).total();
        EXPECT_GT(total, prev);
        prev = total;
    }
}

TEST(Decompose, Errors) {
    try {
        decompose_controlled(11, LocalUnitary::pauli("XX"));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::kWireBudget);
    }
    EXPECT_THROW(decompose_controlled(1, LocalUnitary{}), Error);
    LocalUnitary bad = LocalUnitary::pauli("X");
    bad.factors[0](0, 0) = 0.5;
    EXPECT_THROW(decompose_controlled(1, bad), Error);
    LocalUnitary bad_phase = LocalUnitary::pauli("X");
    bad_phase.global_phase = 2.0;
    EXPECT_THROW(decompose_controlled(1, bad_phase), Error);
}

TEST(Reconstruct, RejectsOutOfRangeWire) {
    GateList g;
    g.wire_count = 2;
    g.gates.push_back(Gate::single(2, Matrix2::Identity()));
    EXPECT_THROW(reconstruct(g), Error);
}

TEST(CostModel, HandEvaluatedValues) {
    EXPECT_EQ(cost_model(CostMethod::kLcu, 1), 132.0);
    EXPECT_EQ(cost_model(CostMethod::kLcu, 2), 16448.0);
    EXPECT_EQ(cost_model(CostMethod::kStinespring, 1), 1728.0);
    EXPECT_EQ(cost_model(CostMethod::kStinespring, 2), 884736.0);
    EXPECT_EQ(ancilla_qubit_bound(3), 6u);
}

TEST(CostModel, RatioStrictlyIncreasing) {
    double prev = 0.0;
    for (std::size_t n = 1; n <= 6; ++n) {
        const double ratio =
            cost_model(CostMethod::kStinespring, n) / cost_model(CostMethod::kLcu, n);
        EXPECT_GT(ratio, prev);
        prev = ratio;
    }
}

}  // namespace
}  // namespace qchan
