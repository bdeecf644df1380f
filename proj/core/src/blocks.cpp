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

#include "qsynth/blocks.hpp"

#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qsynth/errors.hpp"

namespace qsynth {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

void check_mode(std::size_t mode, std::size_t n_modes) {
    if (mode >= n_modes) {
        std::ostringstream msg;
        msg << "element mode " << mode << " out of range for " << n_modes << " modes";
        throw std::invalid_argument(msg.str());
    }
}

void check_pair(std::size_t a, std::size_t b, std::size_t n_modes) {
    check_mode(a, n_modes);
    check_mode(b, n_modes);
    if (a == b) {
        throw std::invalid_argument("two-mode element acts twice on mode " + std::to_string(a));
    }
}

// Row update for a 2×2 complex block acting on (i, j): [r_i; r_j] ← [[m00, m01]; [m10, m11]] [r_i; r_j].
void mix_rows(ComplexMatrix &s, Eigen::Index i, Eigen::Index j, Complex m00, Complex m01, Complex m10,
              Complex m11) {
    const Eigen::RowVectorXcd ri = s.row(i);
    const Eigen::RowVectorXcd rj = s.row(j);
    s.row(i) = m00 * ri + m01 * rj;
    s.row(j) = m10 * ri + m11 * rj;
}

}  // namespace

ComplexMatrix lift_loss(double sigma) {
    if (!(sigma >= 0.0 && sigma < 1.0)) {
        throw std::invalid_argument("lift_loss: sigma must lie in [0, 1)");
    }
    const double r = std::sqrt((1.0 - sigma) * (1.0 + sigma));
    ComplexMatrix s = ComplexMatrix::Zero(4, 4);
    s(0, 0) = sigma;
    s(0, 1) = r;
    s(1, 0) = -r;
    s(1, 1) = sigma;
    s.bottomRightCorner(2, 2) = s.topLeftCorner(2, 2);
    return s;
}

ComplexMatrix lift_gain(double sigma) {
    if (!(sigma > 1.0) || !std::isfinite(sigma)) {
        throw std::invalid_argument("lift_gain: sigma must be finite and > 1");
    }
    const double g = std::sqrt((sigma - 1.0) * (sigma + 1.0));
    ComplexMatrix s = ComplexMatrix::Identity(4, 4) * sigma;
    s(0, 3) = g;
    s(1, 2) = g;
    s(2, 1) = g;
    s(3, 0) = g;
    return s;
}

ComplexMatrix lift_phase(double phi) {
    if (!std::isfinite(phi)) {
        throw std::invalid_argument("lift_phase: phi must be finite");
    }
    ComplexMatrix s = ComplexMatrix::Zero(2, 2);
    s(0, 0) = std::polar(1.0, phi);
    s(1, 1) = std::polar(1.0, -phi);
    return s;
}

void validate_element(const Element &e, std::size_t n_modes) {
    std::visit(overloaded{
                   [&](const PhaseShifter &ps) { check_mode(ps.mode, n_modes); },
                   [&](const BeamSplitter &bs) { check_pair(bs.mode_a, bs.mode_b, n_modes); },
                   [&](const TwoModeSqueezer &tms) { check_pair(tms.mode_a, tms.mode_b, n_modes); },
               },
               e);
}

void validate_circuit(const Circuit &c) {
    if (c.n_nominal > c.n_modes) {
        throw std::invalid_argument("circuit: n_nominal exceeds n_modes");
    }
    std::set<std::size_t> full;
    for (auto m : c.full_ancillas) {
        if (m < c.n_nominal || m >= c.n_modes || !full.insert(m).second) {
            throw std::invalid_argument("circuit: full ancilla " + std::to_string(m) +
                                        " duplicated or outside n_nominal..n_modes-1");
        }
    }
    // Padding ancillas extend the nominal range on the short side only.
    for (const auto *padding : {&c.ancilla_inputs, &c.ancilla_outputs}) {
        std::set<std::size_t> seen;
        for (auto m : *padding) {
            if (m >= c.n_nominal || !seen.insert(m).second) {
                throw std::invalid_argument("circuit: padding ancilla " + std::to_string(m) +
                                            " duplicated or outside the nominal range");
            }
        }
    }
    if (!c.ancilla_inputs.empty() && !c.ancilla_outputs.empty()) {
        throw std::invalid_argument("circuit: both input and output padding ancillas present");
    }
    for (const auto &e : c.elements) {
        validate_element(e, c.n_modes);
    }
}

ComplexMatrix embed_element(const Element &e, std::size_t n_modes) {
    validate_element(e, n_modes);
    const auto n = static_cast<Eigen::Index>(n_modes);
    ComplexMatrix s = ComplexMatrix::Identity(2 * n, 2 * n);
    apply_element(e, s);
    return s;
}

void apply_element(const Element &e, ComplexMatrix &s) {
    if (s.rows() % 2 != 0) {
        throw std::invalid_argument("apply_element: matrix has odd row count");
    }
    const Eigen::Index n = s.rows() / 2;
    validate_element(e, static_cast<std::size_t>(n));
    std::visit(overloaded{
                   [&](const PhaseShifter &ps) {
                       const auto k = static_cast<Eigen::Index>(ps.mode);
                       s.row(k) *= std::polar(1.0, ps.phi);
                       s.row(k + n) *= std::polar(1.0, -ps.phi);
                   },
                   [&](const BeamSplitter &bs) {
                       const auto a = static_cast<Eigen::Index>(bs.mode_a);
                       const auto b = static_cast<Eigen::Index>(bs.mode_b);
                       const double c = std::cos(bs.theta);
                       const double sn = std::sin(bs.theta);
                       mix_rows(s, a, b, c, sn, -sn, c);
                       mix_rows(s, a + n, b + n, c, sn, -sn, c);
                   },
                   [&](const TwoModeSqueezer &tms) {
                       const auto a = static_cast<Eigen::Index>(tms.mode_a);
                       const auto b = static_cast<Eigen::Index>(tms.mode_b);
                       const double ch = std::cosh(tms.xi);
                       const double sh = std::sinh(tms.xi);
                       // a_a ↔ a_b†, a_b ↔ a_a†.
                       mix_rows(s, a, b + n, ch, sh, sh, ch);
                       mix_rows(s, b, a + n, ch, sh, sh, ch);
                   },
               },
               e);
}

ComplexMatrix circuit_smatrix(const Circuit &c) {
    validate_circuit(c);
    const auto n = static_cast<Eigen::Index>(c.n_modes);
    ComplexMatrix s = ComplexMatrix::Identity(2 * n, 2 * n);
    for (const auto &e : c.elements) {
        apply_element(e, s);
    }
    return s;
}

ComplexMatrix passive_unitary(const std::vector<Element> &elements, std::size_t n_modes) {
    const auto n = static_cast<Eigen::Index>(n_modes);
    ComplexMatrix u = ComplexMatrix::Identity(n, n);
    for (const auto &e : elements) {
        validate_element(e, n_modes);
        std::visit(overloaded{
                       [&](const PhaseShifter &ps) {
                           u.row(static_cast<Eigen::Index>(ps.mode)) *= std::polar(1.0, ps.phi);
                       },
                       [&](const BeamSplitter &bs) {
                           const double c = std::cos(bs.theta);
                           const double sn = std::sin(bs.theta);
                           mix_rows(u, static_cast<Eigen::Index>(bs.mode_a), static_cast<Eigen::Index>(bs.mode_b), c,
                                    sn, -sn, c);
                       },
                       [&](const TwoModeSqueezer &tms) {
                           throw NotPassiveError("passive_unitary: element list contains a two-mode squeezer",
                                                 tms.mode_a, tms.mode_b, std::sinh(tms.xi));
                       },
                   },
                   e);
    }
    return u;
}

ElementCounts count_elements(const std::vector<Element> &elements) {
    ElementCounts counts;
    for (const auto &e : elements) {
        std::visit(overloaded{
                       [&](const PhaseShifter &) { ++counts.phase_shifters; },
                       [&](const BeamSplitter &) { ++counts.beam_splitters; },
                       [&](const TwoModeSqueezer &) { ++counts.squeezers; },
                   },
                   e);
    }
    return counts;
}

}  // namespace qsynth
