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

#include <vector>

#include "qsynth/blocks.hpp"
#include "qsynth/numkit.hpp"

namespace qsynth {

/**
 * Triangular (Reck-style) decomposition of an n×n unitary.
 *
 * Rows are cleared bottom-up by column rotations: each step is a phase
 * shifter on the pivot column followed by a beam splitter with θ ∈ [0, π/2]
 * that folds one off-diagonal entry into the pivot. The leftover diagonal
 * phases are emitted last. Elements whose parameter is exactly zero are
 * dropped, so the identity decomposes to an empty list.
 *
 * Emits at most n(n−1)/2 beam splitters and n(n+1)/2 phase shifters.
 * Throws NotUnitaryError if max|u†u − I| ≥ tol.
 */
std::vector<Element> reck_decompose(const ComplexMatrix &u, double tol = kDefaultTolerance);

/// max-entry deviation between the unitary realized by `elements` on dim(u)
/// modes and u.
double mesh_verify(const std::vector<Element> &elements, const ComplexMatrix &u);

}  // namespace qsynth
