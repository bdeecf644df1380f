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
 * Elementary optical elements and their quasiunitary lifts.
 *
 * A network on N modes acts on the operator vector
 * (a_0 … a_{N−1}, a_0† … a_{N−1}†) through a 2N×2N matrix S. Each element
 * only touches the rows/columns of its own modes and their creation-operator
 * partners at offset N.
 *
 * Mode indices are 0-based everywhere.
 */

#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "qsynth/numkit.hpp"

namespace qsynth {

/// a → e^{iφ} a.
struct PhaseShifter {
    std::size_t mode = 0;
    double phi = 0.0;
};

/// Real rotation [[cos θ, sin θ], [−sin θ, cos θ]] on (mode_a, mode_b).
/// Transmission amplitude is cos θ.
struct BeamSplitter {
    std::size_t mode_a = 0;
    std::size_t mode_b = 1;
    double theta = 0.0;
};

/// Parametric amplifier: a_a → cosh ξ a_a + sinh ξ a_b†, and symmetrically.
struct TwoModeSqueezer {
    std::size_t mode_a = 0;
    std::size_t mode_b = 1;
    double xi = 0.0;
};

using Element = std::variant<PhaseShifter, BeamSplitter, TwoModeSqueezer>;

/**
 * An ordered netlist. Elements are chronological: elements.front() acts
 * first, so the network matrix is S = S_last ··· S_first.
 */
struct Circuit {
    std::size_t n_modes = 0;
    std::size_t n_nominal = 0;
    std::vector<std::size_t> ancilla_inputs;
    std::vector<std::size_t> ancilla_outputs;
    std::vector<std::size_t> full_ancillas;
    std::vector<Element> elements;
};

struct ElementCounts {
    std::size_t beam_splitters = 0;
    std::size_t phase_shifters = 0;
    std::size_t squeezers = 0;

    bool operator==(const ElementCounts &) const = default;
};

/// 4×4 lift of a loss channel 0 ≤ σ < 1 (beam splitter with a vacuum ancilla).
ComplexMatrix lift_loss(double sigma);
/// 4×4 lift of a gain channel σ > 1 (two-mode squeezer with a vacuum ancilla).
ComplexMatrix lift_gain(double sigma);
/// 2×2 diag(e^{iφ}, e^{−iφ}).
ComplexMatrix lift_phase(double phi);

/// Throws std::invalid_argument if a mode is ≥ n_modes or the two modes coincide.
void validate_element(const Element &e, std::size_t n_modes);
/// Mode bookkeeping and per-element validation.
void validate_circuit(const Circuit &c);

/// The 2N×2N matrix of one element on an N-mode network.
ComplexMatrix embed_element(const Element &e, std::size_t n_modes);

/// s ← embed_element(e, N) · s, touching only the element's rows.
void apply_element(const Element &e, ComplexMatrix &s);

/// Product of the embedded elements, last element leftmost.
ComplexMatrix circuit_smatrix(const Circuit &c);

/// N×N unitary of a passive element list on the annihilation operators.
/// Throws NotPassiveError if the list contains a squeezer.
ComplexMatrix passive_unitary(const std::vector<Element> &elements, std::size_t n_modes);

ElementCounts count_elements(const std::vector<Element> &elements);

}  // namespace qsynth
