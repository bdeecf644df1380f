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
 * Closed-form decomposition of a complex 2×2 transformation.
 *
 * With BS(θ) = [[cos θ, sin θ], [−sin θ, cos θ]], PS1(φ) = diag(e^{iφ}, 1)
 * and PS2(φ) = diag(1, e^{iφ}):
 *
 *   T = PS2(φ21)·PS1(φ11)·BS(−ϑ)·PS2(ξ2)·PS1(ξ1)·BS(θ1) · D · BS(θ2)·PS1(−ξ1)
 *
 * and the left unitary simplifies to PS1(α1)·PS2(α2)·BS(γ)·PS1(β1)·PS2(β2).
 * All angles are in radians; arg(0) is taken as 0 and every phase is
 * normalized to (−π, π].
 */

#pragma once

#include <vector>

#include "qsynth/numkit.hpp"
#include "qsynth/synth.hpp"

namespace qsynth::analytic {

struct Params2x2 {
    double phi11 = 0.0;
    double phi21 = 0.0;
    double vartheta = 0.0;
    double xi1 = 0.0;
    double xi2 = 0.0;
    double theta1 = 0.0;
    double theta2 = 0.0;
    double sigma1 = 1.0;
    double sigma2 = 1.0;
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    double alpha1 = 0.0;
    double alpha2 = 0.0;
    double beta1 = 0.0;
    double beta2 = 0.0;
};

/// Lifted stages of the analytic circuit on N = 2 + (ancilla count) modes.
struct AnalyticStages {
    ComplexMatrix s_u;
    std::vector<ComplexMatrix> s_d;  // one per non-unit σ, mode 0 first
    ComplexMatrix s_w;
};

ComplexMatrix beam_splitter_2x2(double theta);
ComplexMatrix phase_shift_2x2(int mode, double phi);

Params2x2 analytic_params(const ComplexMatrix &t);

/// The long chain with φ11, φ21, ϑ, ξ1, ξ2, θ1, θ2 and D.
ComplexMatrix reconstruct_chain(const Params2x2 &p);
/// PS1(α1)·PS2(α2)·BS(γ)·PS1(β1)·PS2(β2) · D · BS(θ2)·PS1(−ξ1).
ComplexMatrix reconstruct_simplified(const Params2x2 &p);

AnalyticStages analytic_stages(const Params2x2 &p, double eps_sigma = 1e-9);

/**
 * Netlist and S_total built only from the named elements. σ1 and σ2 may be
 * in either order; ancillas are assigned to mode 0 first, then mode 1.
 * block_deviation is measured against reconstruct_simplified(p), the
 * form the netlist implements.
 */
SynthesisResult analytic_circuit(const Params2x2 &p, const SynthesisConfig &cfg = {});

}  // namespace qsynth::analytic
