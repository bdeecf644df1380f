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

#include "qsynth/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "qsynth/blocks.hpp"
#include "qsynth/errors.hpp"

namespace qsynth::analytic {

namespace {

// |cos ϑ cos θ1 + sin ϑ sin θ1 e^{iδ}| may overshoot 1 by rounding only.
constexpr double kClampSlack = 1e-12;
// Below this (relative to the Frobenius norm squared) the rotation angle is
// undetermined and taken as 0.
constexpr double kDegenerateRel = 64 * std::numeric_limits<double>::epsilon();

double arg0(Complex z) { return wrap_angle(safe_arg(z)); }

double half_angle(double q, double two_p, double scale) {
    return std::hypot(q, two_p) <= kDegenerateRel * scale ? 0.0 : 0.5 * arg0(Complex{q, two_p});
}

ComplexMatrix diag2(double s1, double s2) {
    ComplexMatrix d = ComplexMatrix::Zero(2, 2);
    d(0, 0) = s1;
    d(1, 1) = s2;
    return d;
}

}  // namespace

ComplexMatrix beam_splitter_2x2(double theta) {
    ComplexMatrix b(2, 2);
    b << std::cos(theta), std::sin(theta), -std::sin(theta), std::cos(theta);
    return b;
}

ComplexMatrix phase_shift_2x2(int mode, double phi) {
    ComplexMatrix p = ComplexMatrix::Identity(2, 2);
    p(mode, mode) = std::polar(1.0, phi);
    return p;
}

Params2x2 analytic_params(const ComplexMatrix &t) {
    if (t.rows() != 2 || t.cols() != 2) {
        throw std::invalid_argument("analytic_params: expected a 2x2 matrix");
    }
    require_finite(t, "analytic_params");

    Params2x2 p;
    p.phi11 = arg0(t(0, 0));
    p.phi21 = arg0(t(1, 0));
    // atan2 also covers |t11| = 0 (ϑ = π/2) and a zero left column (ϑ = 0).
    p.vartheta = std::atan2(std::abs(t(1, 0)), std::abs(t(0, 0)));

    const double cv = std::cos(p.vartheta);
    const double sv = std::sin(p.vartheta);
    const Complex e12 = std::polar(1.0, std::arg(t(0, 1)) - p.phi11) * std::abs(t(0, 1));
    const Complex e22 = std::polar(1.0, std::arg(t(1, 1)) - p.phi21) * std::abs(t(1, 1));
    const double tt11 = std::abs(t(0, 0)) * cv + std::abs(t(1, 0)) * sv;
    const Complex tt12 = cv * e12 + sv * e22;
    const Complex tt22 = -sv * e12 + cv * e22;

    p.xi1 = arg0(tt12);
    p.xi2 = arg0(tt22);

    const double a = std::abs(tt11);
    const double b = std::abs(tt12);
    const double d = std::abs(tt22);
    const double p1 = b * d;  // |t̃12 t̃22|
    const double p2 = a * b;  // |t̃11 t̃12|
    const double q1 = a * a - d * d + b * b;
    const double q2 = a * a - d * d - b * b;
    const double s = a * a + d * d + b * b;

    p.theta1 = -half_angle(q1, 2.0 * p1, s);
    p.theta2 = half_angle(q2, 2.0 * p2, s);
    const double root = std::hypot(q1, 2.0 * p1);
    p.sigma1 = std::sqrt((s + root) / 2.0);
    p.sigma2 = std::sqrt(std::max(0.0, (s - std::hypot(q2, 2.0 * p2)) / 2.0));

    const Complex rel = std::polar(1.0, p.xi2 - p.xi1);
    const double c1 = std::cos(p.theta1);
    const double s1 = std::sin(p.theta1);
    const Complex x = cv * c1 + sv * s1 * rel;
    const Complex y = cv * s1 - sv * c1 * rel;
    p.alpha = arg0(x);
    p.beta = arg0(y);
    const double mag = std::abs(x);
    if (mag > 1.0 + kClampSlack) {
        std::ostringstream msg;
        msg << "analytic_params: arccos argument " << mag << " exceeds 1";
        throw std::domain_error(msg.str());
    }
    p.gamma = std::acos(std::clamp(mag, 0.0, 1.0));
    p.alpha1 = wrap_angle(p.phi11 + p.xi1 + (p.alpha + p.beta) / 2.0);
    p.alpha2 = wrap_angle(p.phi21 + p.xi2 - (p.alpha + p.beta) / 2.0);
    p.beta1 = wrap_angle((p.alpha - p.beta) / 2.0);
    p.beta2 = wrap_angle((p.beta - p.alpha) / 2.0);
    return p;
}

ComplexMatrix reconstruct_chain(const Params2x2 &p) {
    const ComplexMatrix u = phase_shift_2x2(1, p.phi21) * phase_shift_2x2(0, p.phi11) *
                            beam_splitter_2x2(-p.vartheta) * phase_shift_2x2(1, p.xi2) * phase_shift_2x2(0, p.xi1) *
                            beam_splitter_2x2(p.theta1);
    const ComplexMatrix w = beam_splitter_2x2(p.theta2) * phase_shift_2x2(0, -p.xi1);
    return u * diag2(p.sigma1, p.sigma2) * w;
}

ComplexMatrix reconstruct_simplified(const Params2x2 &p) {
    const ComplexMatrix u = phase_shift_2x2(0, p.alpha1) * phase_shift_2x2(1, p.alpha2) *
                            beam_splitter_2x2(p.gamma) * phase_shift_2x2(0, p.beta1) * phase_shift_2x2(1, p.beta2);
    const ComplexMatrix w = beam_splitter_2x2(p.theta2) * phase_shift_2x2(0, -p.xi1);
    return u * diag2(p.sigma1, p.sigma2) * w;
}

AnalyticStages analytic_stages(const Params2x2 &p, double eps_sigma) {
    const auto cls = classify_singulars({p.sigma1, p.sigma2}, eps_sigma, 2);
    const std::size_t n_a = cls.n_ancillas();

    const ComplexMatrix u = phase_shift_2x2(0, p.alpha1) * phase_shift_2x2(1, p.alpha2) *
                            beam_splitter_2x2(p.gamma) * phase_shift_2x2(0, p.beta1) * phase_shift_2x2(1, p.beta2);
    const ComplexMatrix w = beam_splitter_2x2(p.theta2) * phase_shift_2x2(0, -p.xi1);

    AnalyticStages st;
    st.s_u = lift_unitary_factor(u, n_a);
    st.s_w = lift_unitary_factor(w, n_a);
    for (std::size_t j = 0; j < 2; ++j) {
        const auto &mode = cls.modes[j];
        if (mode.ancilla) {
            st.s_d.push_back(lift_singular(j, *mode.ancilla, mode.sigma, cls.n_modes, eps_sigma));
        }
    }
    return st;
}

SynthesisResult analytic_circuit(const Params2x2 &p, const SynthesisConfig &cfg) {
    SynthesisResult r;
    r.rows = 2;
    r.cols = 2;
    r.classification = classify_singulars({p.sigma1, p.sigma2}, cfg.eps_sigma, 2);
    const std::size_t n_modes = r.classification.n_modes;

    Circuit &c = r.circuit;
    c.n_modes = n_modes;
    c.n_nominal = 2;
    for (std::size_t a = 2; a < n_modes; ++a) {
        c.full_ancillas.push_back(a);
    }
    // W = BS(θ2)·PS1(−ξ1)
    c.elements.emplace_back(PhaseShifter{0, -p.xi1});
    c.elements.emplace_back(BeamSplitter{0, 1, p.theta2});
    const std::size_t w_end = c.elements.size();
    for (std::size_t j = 0; j < 2; ++j) {
        const auto &mode = r.classification.modes[j];
        if (!mode.ancilla) {
            continue;
        }
        if (mode.kind == SingularClass::loss) {
            c.elements.emplace_back(BeamSplitter{j, *mode.ancilla, std::acos(mode.sigma)});
        } else {
            c.elements.emplace_back(TwoModeSqueezer{j, *mode.ancilla, std::acosh(mode.sigma)});
        }
    }
    r.singular_stage_elements = c.elements.size() - w_end;
    // U = PS1(α1)·PS2(α2)·BS(γ)·PS1(β1)·PS2(β2)
    c.elements.emplace_back(PhaseShifter{1, p.beta2});
    c.elements.emplace_back(PhaseShifter{0, p.beta1});
    c.elements.emplace_back(BeamSplitter{0, 1, p.gamma});
    c.elements.emplace_back(PhaseShifter{1, p.alpha2});
    c.elements.emplace_back(PhaseShifter{0, p.alpha1});
    r.counts = count_elements(c.elements);
    r.mesh_counts = r.counts;
    r.mesh_counts.squeezers = 0;
    r.mesh_counts.beam_splitters -= r.singular_stage_elements - r.counts.squeezers;

    const AnalyticStages st = analytic_stages(p, cfg.eps_sigma);
    ComplexMatrix s = st.s_u;
    for (const auto &d : st.s_d) {
        s = s * d;
    }
    r.s_total = s * st.s_w;

    r.quasiunitarity_deviation = quasiunitarity_deviation(r.s_total);
    r.block_deviation = max_abs_diff(upper_left_block(r.s_total, 2, 2), reconstruct_simplified(p));
    r.circuit_deviation = max_abs_diff(circuit_smatrix(c), r.s_total);
    if (!(r.quasiunitarity_deviation < cfg.tol) || !(r.block_deviation < cfg.tol) ||
        !(r.circuit_deviation < cfg.tol)) {
        std::ostringstream msg;
        msg << "analytic_circuit: post-check failed (quasiunitarity " << r.quasiunitarity_deviation << ", block "
            << r.block_deviation << ", netlist " << r.circuit_deviation << ")";
        throw VerificationError(msg.str(), r.quasiunitarity_deviation, r.block_deviation);
    }
    return r;
}

}  // namespace qsynth::analytic
