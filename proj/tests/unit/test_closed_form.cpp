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


#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qsynth/closed_form.hpp"
#include "qsynth/errors.hpp"
#include "test_util.hpp"

using namespace qsynth;
using namespace qsynth::analytic;
using namespace qsynth::testing;

namespace {

Complex cis(double phi) { return std::polar(1.0, phi); }

// Lifted 2-mode unitary as the reference 8×8 display: piece and conjugate, identity elsewhere.
ComplexMatrix reference_lift(const ComplexMatrix &piece) {
    ComplexMatrix s = ComplexMatrix::Identity(8, 8);
    s.block(0, 0, 2, 2) = piece;
    s.block(4, 4, 2, 2) = piece.conjugate();
    return s;
}

Params2x2 loss_then_gain_params() {
    Params2x2 p;
    p.xi1 = 0.4;
    p.theta2 = 0.9;
    p.sigma1 = 0.5;
    p.sigma2 = 2.0;
    p.gamma = 0.35;
    p.alpha1 = 1.1;
    p.alpha2 = -0.6;
    p.beta1 = 0.25;
    p.beta2 = -0.25;
    return p;
}

}  // namespace

TEST(AnalyticParams, LossyBeamSplitter) {
    const Params2x2 p = analytic_params(lossy_bs_t());
    EXPECT_NEAR(p.sigma1, 1.0, 1e-14);
    EXPECT_NEAR(p.sigma2, 0.0, 1e-7);
    EXPECT_LT(max_abs(reconstruct_chain(p), lossy_bs_t()), 1e-12);
}

TEST(AnalyticParams, PurePhase) {
    ComplexMatrix t = ComplexMatrix::Identity(2, 2);
    t(0, 0) = cis(std::numbers::pi / 3);
    const Params2x2 p = analytic_params(t);
    EXPECT_NEAR(p.sigma1, 1.0, 1e-15);
    EXPECT_NEAR(p.sigma2, 1.0, 1e-15);
    EXPECT_NEAR(p.gamma, 0.0, 1e-7);
    EXPECT_NEAR(p.vartheta, 0.0, 0.0);
    EXPECT_LT(max_abs(reconstruct_chain(p), t), 1e-12);
    EXPECT_LT(max_abs(reconstruct_simplified(p), t), 1e-12);
    const SynthesisResult r = analytic_circuit(p);
    EXPECT_EQ(r.classification.n_ancillas(), 0u);
    EXPECT_EQ(r.counts.squeezers, 0u);
    EXPECT_EQ(r.singular_stage_elements, 0u);
}

TEST(AnalyticParams, ReferenceExampleMatrix) {
    ComplexMatrix t(2, 2);
    t << Complex(0.3, 0.4), -0.2, Complex(0, 0.1), 1.7;
    const Params2x2 p = analytic_params(t);
    EXPECT_LT(max_abs(reconstruct_chain(p), t), 1e-12);
    EXPECT_LT(max_abs(reconstruct_simplified(p), t), 1e-12);
    const auto s = svd(t).singulars;
    EXPECT_NEAR(p.sigma1, s[0], 1e-12);
    EXPECT_NEAR(p.sigma2, s[1], 1e-12);
}

TEST(AnalyticParams, InvariantsOnRandomInputs) {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 2000; ++trial) {
        const ComplexMatrix t = random_matrix(rng, 2, 2, 2.0);
        const Params2x2 p = analytic_params(t);
        EXPECT_GE(p.sigma1, p.sigma2);
        EXPECT_GE(p.sigma2, 0.0);
        EXPECT_GE(p.gamma, 0.0);
        EXPECT_LE(p.gamma, std::numbers::pi / 2);
        for (double angle : {p.phi11, p.phi21, p.xi1, p.xi2, p.alpha, p.beta, p.alpha1, p.alpha2, p.beta1, p.beta2}) {
            EXPECT_GT(angle, -std::numbers::pi);
            EXPECT_LE(angle, std::numbers::pi);
        }
        EXPECT_LT(max_abs(reconstruct_chain(p), t), 1e-12);
        EXPECT_LT(max_abs(reconstruct_simplified(p), t), 1e-12);
    }
}

TEST(AnalyticParams, DegenerateInputs) {
    // Zero first entry, zero left column, zero matrix and a scaled unitary.
    const std::vector<ComplexMatrix> cases = {
        real_matrix(2, 2, {0, 1, 1, 0}), real_matrix(2, 2, {0, 0.5, 0, 2}), ComplexMatrix::Zero(2, 2),
        3.0 * real_matrix(2, 2, {0.6, 0.8, -0.8, 0.6}), real_matrix(2, 2, {0, 0, 0, 1})};
    for (const auto &t : cases) {
        const Params2x2 p = analytic_params(t);
        EXPECT_TRUE(std::isfinite(p.gamma));
        EXPECT_LT(max_abs(reconstruct_chain(p), t), 1e-12);
        EXPECT_LT(max_abs(reconstruct_simplified(p), t), 1e-12);
    }
    const Params2x2 swap = analytic_params(real_matrix(2, 2, {0, 1, 1, 0}));
    EXPECT_NEAR(swap.vartheta, std::numbers::pi / 2, 1e-15);
    EXPECT_EQ(analytic_params(3.0 * real_matrix(2, 2, {0.6, 0.8, -0.8, 0.6})).theta1, 0.0);
}

TEST(AnalyticParams, RejectsWrongShape) {
    EXPECT_THROW(analytic_params(ComplexMatrix::Identity(3, 3)), std::invalid_argument);
    EXPECT_THROW(analytic_params(ComplexMatrix::Identity(2, 1)), std::invalid_argument);
}

TEST(AnalyticStages, LossThenGainMatchesReferenceDisplays) {
    const Params2x2 p = loss_then_gain_params();
    const AnalyticStages st = analytic_stages(p);
    ASSERT_EQ(st.s_d.size(), 2u);
    EXPECT_LT(max_abs(st.s_d[0], general_2x2_s_d1(0.5)), 1e-15);
    EXPECT_LT(max_abs(st.s_d[1], general_2x2_s_d2(2.0)), 1e-15);

    const double cg = std::cos(p.gamma);
    const double sg = std::sin(p.gamma);
    ComplexMatrix u(2, 2);
    u << cis(p.alpha1 + p.beta1) * cg, cis(p.alpha1 + p.beta2) * sg,  //
        -cis(p.alpha2 + p.beta1) * sg, cis(p.alpha2 + p.beta2) * cg;
    EXPECT_LT(max_abs(st.s_u, reference_lift(u)), 1e-15);

    ComplexMatrix w(2, 2);
    w << cis(-p.xi1) * std::cos(p.theta2), std::sin(p.theta2),  //
        -cis(-p.xi1) * std::sin(p.theta2), std::cos(p.theta2);
    EXPECT_LT(max_abs(st.s_w, reference_lift(w)), 1e-15);
}

TEST(AnalyticCircuit, LossThenGainNetwork) {
    const Params2x2 p = loss_then_gain_params();
    const SynthesisResult r = analytic_circuit(p);
    EXPECT_EQ(r.classification.n_modes, 4u);
    EXPECT_EQ(r.classification.modes[0].ancilla, 2u);
    EXPECT_EQ(r.classification.modes[1].ancilla, 3u);
    EXPECT_EQ(r.s_total.rows(), 8);
    EXPECT_EQ(r.counts.squeezers, 1u);
    EXPECT_LT(max_abs(upper_left_block(r.s_total, 2, 2), reconstruct_simplified(p)), 1e-12);
    EXPECT_LT(quasiunitarity_oracle(r.s_total), 1e-12);
}

TEST(AnalyticCircuit, RandomMatricesReconstruct) {
    std::mt19937_64 rng(52);
    for (int trial = 0; trial < 500; ++trial) {
        const ComplexMatrix t = random_matrix(rng, 2, 2, 2.0);
        const SynthesisResult r = analytic_circuit(analytic_params(t));
        EXPECT_LT(max_abs(upper_left_block(r.s_total, 2, 2), t), 1e-11);
        EXPECT_LE(r.mesh_counts.beam_splitters, 2u);
        EXPECT_LE(r.mesh_counts.phase_shifters, 6u);
        EXPECT_LE(r.singular_stage_elements, 2u);
    }
}

TEST(Elementary2x2, Conventions) {
    EXPECT_LT(max_abs(beam_splitter_2x2(0.3), real_matrix(2, 2, {std::cos(0.3), std::sin(0.3), -std::sin(0.3),
                                                                  std::cos(0.3)})),
              0.0 + 1e-16);
    ComplexMatrix ps2 = ComplexMatrix::Identity(2, 2);
    ps2(1, 1) = cis(0.7);
    EXPECT_EQ(phase_shift_2x2(1, 0.7), ps2);
}
