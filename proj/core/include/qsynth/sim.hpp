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
 * Small verification engines: exact Fock-space evolution through passive
 * networks, postselection, and first/second-moment propagation through any
 * quasiunitary network.
 */

#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "qsynth/numkit.hpp"

namespace qsynth::sim {

using Occupation = std::vector<int>;

inline constexpr std::size_t kMaxFockPhotons = 6;
inline constexpr std::size_t kMaxFockModes = 8;
/// Amplitudes below this magnitude are dropped from a FockState.
inline constexpr double kAmplitudeFloor = 1e-15;

struct FockState {
    std::size_t n_modes = 0;
    std::map<Occupation, Complex> amplitudes;

    double norm_squared() const;
    double probability(const Occupation &occ) const;
    Complex amplitude(const Occupation &occ) const;
};

using OccupationPredicate = std::function<bool(const Occupation &)>;

/// Accepts occupations with min[k] ≤ occ[k] ≤ max[k] for every mode.
OccupationPredicate mode_bounds_predicate(Occupation min, Occupation max);

/// Accepts occupations whose photon count summed over each group of modes
/// equals the paired target.
OccupationPredicate group_count_predicate(std::vector<std::pair<std::vector<std::size_t>, int>> groups);

/// The annihilation block A of a passive S = [[A, 0], [0, A*]]. Throws
/// NotPassiveError naming the largest off-diagonal-block entry above tol.
ComplexMatrix passive_block(const ComplexMatrix &s_total, double tol = kDefaultTolerance);

/**
 * Evolves a Fock input through a passive network with a_out = A a_in.
 *
 * Each input creation operator is replaced by a†_in,k → Σ_j A_jk a†_out,j
 * (a column of A, not a row) and the product is expanded over the vacuum.
 */
FockState fock_evolve(const ComplexMatrix &a, const Occupation &input, double tol = kDefaultTolerance);

/// Renormalized accepted state and the accepted probability mass.
std::pair<FockState, double> postselect(const FockState &state, const OccupationPredicate &accept);

/**
 * Moments of the operator vector b = (a_0 … a_{N−1}, a_0† … a_{N−1}†):
 * mean_k = ⟨b_k⟩ and second_kl = ⟨Δb_k Δb_l†⟩.
 */
struct GaussianMoments {
    ComplexVector mean;
    ComplexMatrix second;

    std::size_t n_modes() const { return static_cast<std::size_t>(mean.size() / 2); }
};

GaussianMoments vacuum_moments(std::size_t n_modes);
/// Coherent amplitudes on the first alpha.size() modes, vacuum elsewhere.
GaussianMoments coherent_moments(const ComplexVector &alpha, std::size_t n_modes);

/// mean′ = S·mean, second′ = S·second·S†.
GaussianMoments evolve_moments(const ComplexMatrix &s_total, const GaussianMoments &g);

/// max |second − (P·second·P)ᵀ − G| with P swapping the two halves;
/// zero for any state reachable from vacuum by a quasiunitary network.
double physicality_residual(const GaussianMoments &g);

/// max |mean_k − conj(mean_{k+N})|.
double mean_conjugacy_residual(const GaussianMoments &g);

}  // namespace qsynth::sim
