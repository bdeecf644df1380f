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

/**
 * @file
 * Compiles an arbitrary n×m complex transformation T into a quasiunitary
 * 2N×2N scattering matrix S_total whose upper-left n×m block is T, together
 * with a netlist of phase shifters, beam splitters and two-mode squeezers.
 *
 * The pipeline is T = U·D·W (SVD), identity padding to a square
 * max(n,m)-mode problem, a triangular mesh for U and W, and one vacuum
 * ancilla per singular value that differs from 1: a beam splitter for
 * σ < 1, a two-mode squeezer for σ > 1.
 *
 * Mode layout of the result: nominal modes 0..n_N−1 (n_N = max(n, m)),
 * then full ancillas n_N..N−1 in ascending order of the nominal mode they
 * serve.
 */

#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <tuple>
#include <vector>

#include "qsynth/blocks.hpp"
#include "qsynth/numkit.hpp"

namespace qsynth {

enum class SingularClass { unit, loss, gain };

struct ModeClassification {
    SingularClass kind = SingularClass::unit;
    double sigma = 1.0;
    std::optional<std::size_t> ancilla;
};

struct SingularClassification {
    std::vector<ModeClassification> modes;  // one per nominal mode
    std::size_t n_nominal = 0;
    std::size_t n_modes = 0;  // N = n_nominal + number of ancillas

    std::size_t n_ancillas() const { return n_modes - n_nominal; }
};

struct SynthesisConfig {
    double tol = kDefaultTolerance;
    /// Singular values within eps_sigma of 1 compile to no element.
    double eps_sigma = 1e-9;
    /// Largest admissible singular value, cosh(50) by default.
    double max_sigma = std::cosh(50.0);
};

struct SynthesisResult {
    Circuit circuit;
    ComplexMatrix s_total;
    SingularClassification classification;
    ElementCounts counts;
    /// Elements of the U and W meshes only; compare against count_bounds.
    ElementCounts mesh_counts;
    /// Beam splitters and squeezers realizing D; at most min(n, m).
    std::size_t singular_stage_elements = 0;
    std::size_t rows = 0;  // n, output modes of T
    std::size_t cols = 0;  // m, input modes of T
    double quasiunitarity_deviation = 0.0;
    double block_deviation = 0.0;
    /// max |circuit_smatrix(circuit) − s_total|.
    double circuit_deviation = 0.0;
};

struct CountBounds {
    std::size_t max_bs = 0;
    std::size_t max_ps = 0;
    std::size_t max_d = 0;
};

/// Square U, D, W of size max(n, m) with identity padding appended last.
struct PaddedFactors {
    ComplexMatrix u;
    ComplexMatrix d;
    ComplexMatrix w;
};

PaddedFactors pad_factors(const SvdFactors &f, std::size_t n, std::size_t m);

/// The diagonal of the padded D: singular values, then 1 for each padded mode.
std::vector<double> padded_singulars(const SvdFactors &f, std::size_t n, std::size_t m);

SingularClassification classify_singulars(const std::vector<double> &singulars, double eps_sigma,
                                          std::size_t n_nominal);

/// diag(U_i, I_{n_a}, U_i*, I_{n_a}).
ComplexMatrix lift_unitary_factor(const ComplexMatrix &u_piece, std::size_t n_a);

/// Identity on 2N×2N with the loss or gain pattern at rows/columns
/// {j, m_aj, j+N, m_aj+N}. Throws if |σ − 1| ≤ eps_sigma.
ComplexMatrix lift_singular(std::size_t j, std::size_t m_aj, double sigma, std::size_t n_modes,
                            double eps_sigma = 1e-9);

/**
 * Runs the full pipeline. When `factors` is supplied it is used instead of
 * a fresh SVD (it must satisfy u·D·w = t), which pins a particular gauge.
 *
 * Throws VerificationError if the result fails its own block, quasiunitarity
 * or netlist-consistency check at cfg.tol.
 */
SynthesisResult synthesize(const ComplexMatrix &t, const SynthesisConfig &cfg = {},
                           const std::optional<SvdFactors> &factors = std::nullopt);

CountBounds count_bounds(std::size_t n, std::size_t m);

}  // namespace qsynth
