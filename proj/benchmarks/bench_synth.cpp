// Copyright 2026 The qsynth Authors
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


#include <benchmark/benchmark.h>

#include <random>

#include "qsynth/mesh.hpp"
#include "qsynth/sim.hpp"
#include "qsynth/synth.hpp"

namespace {

qsynth::ComplexMatrix random_matrix(Eigen::Index rows, Eigen::Index cols, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g(0.0, 1.0);
    qsynth::ComplexMatrix t(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
        for (Eigen::Index c = 0; c < cols; ++c) {
            t(r, c) = {g(rng), g(rng)};
        }
    }
    return t;
}

qsynth::ComplexMatrix random_unitary(Eigen::Index n, std::uint64_t seed) {
    Eigen::HouseholderQR<qsynth::ComplexMatrix> qr(random_matrix(n, n, seed));
    return qr.householderQ();
}

void BM_Synthesize(benchmark::State &state) {
    const auto n = static_cast<Eigen::Index>(state.range(0));
    const qsynth::ComplexMatrix t = random_matrix(n, n, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qsynth::synthesize(t));
    }
}
BENCHMARK(BM_Synthesize)->DenseRange(2, 8, 2);

void BM_ReckDecompose(benchmark::State &state) {
    const auto n = static_cast<Eigen::Index>(state.range(0));
    const qsynth::ComplexMatrix u = random_unitary(n, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qsynth::reck_decompose(u));
    }
}
BENCHMARK(BM_ReckDecompose)->RangeMultiplier(2)->Range(2, 32);

void BM_FockEvolve(benchmark::State &state) {
    const auto photons = static_cast<int>(state.range(0));
    const Eigen::Index modes = 2 * photons;
    const qsynth::ComplexMatrix a = random_unitary(modes, 3);
    qsynth::sim::Occupation input(static_cast<std::size_t>(modes), 0);
    for (int k = 0; k < photons; ++k) {
        input[static_cast<std::size_t>(k)] = 1;
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(qsynth::sim::fock_evolve(a, input));
    }
}
BENCHMARK(BM_FockEvolve)->DenseRange(1, 4);

}  // namespace

BENCHMARK_MAIN();
