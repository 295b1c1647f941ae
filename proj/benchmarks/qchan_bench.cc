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


#include <array>
#include <vector>

#include <benchmark/benchmark.h>

#include "qchan/basis.h"
#include "qchan/channel.h"
#include "qchan/compiler.h"
#include "qchan/gates.h"
#include "qchan/linalg.h"
#include "qchan/simulator.h"
#include "qchan/state.h"

namespace qchan {
namespace {

void BM_TensorProduct(benchmark::State &state) {
    const auto d = static_cast<std::size_t>(state.range(0));
    Rng rng(1);
    const Matrix a = random_unitary(d, rng);
    const Matrix b = random_unitary(d, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(tensor_product(a, b));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_TensorProduct)->RangeMultiplier(2)->Range(2, 32);

void BM_PartialTrace(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    Rng rng(2);
    const Matrix rho = random_density_matrix(std::size_t{1} << n, rng);
    const std::vector<std::size_t> dims(n, 2);
    const std::array<std::size_t, 1> keep = {0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(partial_trace(rho, dims, keep));
    }
}
BENCHMARK(BM_PartialTrace)->DenseRange(2, 8, 2);

void BM_HermitianEigenvalues(benchmark::State &state) {
    Rng rng(3);
    const Matrix rho = random_density_matrix(static_cast<std::size_t>(state.range(0)), rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hermitian_eigenvalues(rho));
    }
}
BENCHMARK(BM_HermitianEigenvalues)->RangeMultiplier(4)->Range(2, 128);

void BM_RunPresetPlan(benchmark::State &state) {
    const auto kind = static_cast<ChannelKind>(state.range(0));
    const SimulationPlan plan = paper_preset(ChannelPreset{kind, 0.35});
    const DensityMatrix rho = state_from_bloch({1.0, 0.0, 0.0});
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_plan(plan, rho));
    }
    state.SetLabel(std::string(channel_kind_name(kind)));
}
BENCHMARK(BM_RunPresetPlan)->DenseRange(0, 2);

void BM_CompileBranch(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const std::size_t dim = std::size_t{1} << n;
    Rng rng(4);
    const Matrix u = random_unitary(dim * 2, rng);
    const KrausChannel ch({u.block(0, 0, static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim)),
                           u.block(static_cast<Eigen::Index>(dim), 0, static_cast<Eigen::Index>(dim),
                                   static_cast<Eigen::Index>(dim))});
    const UnitaryBasis basis = pauli_basis(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(compile_branch(ch, basis));
    }
}
BENCHMARK(BM_CompileBranch)->DenseRange(1, 3);

void BM_DecomposeReconstruct(benchmark::State &state) {
    const auto m = static_cast<std::size_t>(state.range(0));
    const LocalUnitary target = LocalUnitary::pauli("ZX");
    for (auto _ : state) {
        const GateList g = decompose_controlled(m, target);
        benchmark::DoNotOptimize(reconstruct(g));
    }
}
BENCHMARK(BM_DecomposeReconstruct)->DenseRange(1, 5);

}  // namespace
}  // namespace qchan

BENCHMARK_MAIN();
