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

#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "qsynth/numkit.hpp"
#include "qsynth/synth.hpp"

namespace qsynth::apps {

/// Rank-one POVM {|φ_i⟩⟨φ_i|} on an n-dimensional space.
struct RankOnePovm {
    std::size_t dim = 0;
    std::vector<ComplexVector> vectors;

    /// n×m matrix whose columns are the φ_i.
    ComplexMatrix as_matrix() const;
};

/// Factors rank-one effects E_i = |φ_i⟩⟨φ_i| through their dominant
/// eigenvector. Throws std::domain_error for non-Hermitian or higher-rank effects.
RankOnePovm povm_from_effects(const std::vector<ComplexMatrix> &effects, double tol = kDefaultTolerance);

struct NaimarkExtension {
    ComplexMatrix unitary;  // m×m; its first n rows reproduce T
    std::size_t ancilla_outputs = 0;
    std::vector<double> singulars;
};

/**
 * An m-dimensional unitary extension of T = [φ_1 … φ_m] with TT† = I.
 * Measuring outcome i on the embedded state (ψ, 0) through the extension
 * reproduces ⟨ψ|E_i|ψ⟩. Throws std::domain_error when TT† ≠ I within tol.
 */
NaimarkExtension naimark_extension(const RankOnePovm &p, double tol = kDefaultTolerance);

/// |⟨e_i| U† |ψ, 0⟩|² for every outcome i.
std::vector<double> povm_probabilities(const ComplexMatrix &extension, const ComplexVector &psi);

/// The 4-mode transformation (cH, cV, tH, tV) of the postselected
/// controlled-Z gate, with t11 = √⅓ and t13 = t31 = √⅔.
ComplexMatrix cz_gate_target();

/// k = −t13·t31/2, the conditional amplitude scale of the gate.
double cz_k(const ComplexMatrix &target);

struct CzReport {
    // Inputs in order HH, HV, VH, VV (control photon first).
    std::array<Complex, 4> amplitudes{};
    std::array<double, 4> success_prob{};
    std::array<int, 4> sign_pattern{};
    double k = 0.0;
    std::size_t n_full_ancillas = 0;
    std::vector<double> singular_values;
    double max_amplitude_error = 0.0;
    double max_probability_error = 0.0;
    bool passed = false;
    std::string failure;
};

/// Simulates the four computational two-photon inputs through the passive
/// block and postselects one photon in the control modes and one in the
/// target modes. Throws NotPassiveError for an active network.
CzReport evaluate_cz(const SynthesisResult &result, double tol = kDefaultTolerance);

/// evaluate_cz, throwing VerificationError when the amplitude pattern
/// k·(−1, +1, +1, +1) or the success probability k² is not reproduced.
CzReport verify_cz(const SynthesisResult &result, double tol = kDefaultTolerance);

}  // namespace qsynth::apps
