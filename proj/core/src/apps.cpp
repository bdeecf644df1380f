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

#include "qsynth/apps.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qsynth/errors.hpp"
#include "qsynth/sim.hpp"

namespace qsynth::apps {

ComplexMatrix RankOnePovm::as_matrix() const {
    ComplexMatrix t(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(vectors.size()));
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (static_cast<std::size_t>(vectors[i].size()) != dim) {
            throw std::invalid_argument("povm: vector " + std::to_string(i) + " has the wrong dimension");
        }
        t.col(static_cast<Eigen::Index>(i)) = vectors[i];
    }
    return t;
}

RankOnePovm povm_from_effects(const std::vector<ComplexMatrix> &effects, double tol) {
    if (effects.empty()) {
        throw std::invalid_argument("povm: no effects given");
    }
    RankOnePovm p;
    p.dim = static_cast<std::size_t>(effects.front().rows());
    for (std::size_t i = 0; i < effects.size(); ++i) {
        const auto &e = effects[i];
        if (e.rows() != e.cols() || static_cast<std::size_t>(e.rows()) != p.dim) {
            throw std::invalid_argument("povm: effect " + std::to_string(i) + " has the wrong shape");
        }
        if (max_abs_diff(e, e.adjoint()) >= tol) {
            throw std::domain_error("povm: effect " + std::to_string(i) + " is not Hermitian");
        }
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(e);
        const auto &vals = eig.eigenvalues();  // ascending
        const Eigen::Index top = vals.size() - 1;
        if (vals(0) < -tol || (top > 0 && vals(top - 1) > tol)) {
            throw std::domain_error("povm: effect " + std::to_string(i) + " is not a rank-one positive operator");
        }
        p.vectors.push_back(std::sqrt(std::max(0.0, vals(top))) * eig.eigenvectors().col(top));
    }
    return p;
}

NaimarkExtension naimark_extension(const RankOnePovm &p, double tol) {
    const ComplexMatrix t = p.as_matrix();
    if (t.rows() < 1 || t.cols() < t.rows()) {
        throw std::domain_error("naimark_extension: need at least as many outcomes as dimensions");
    }
    const double completeness = max_abs_diff(t * t.adjoint(), ComplexMatrix::Identity(t.rows(), t.rows()));
    if (!(completeness < tol)) {
        std::ostringstream msg;
        msg << "naimark_extension: effects do not sum to identity (max |TT^H - I| = " << completeness << ")";
        throw std::domain_error(msg.str());
    }

    const SvdFactors f = svd(t);
    for (double s : f.singulars) {
        if (!(std::abs(s - 1.0) < tol)) {
            throw std::domain_error("naimark_extension: singular value differs from 1");
        }
    }
    const auto n = t.rows();
    const auto m = t.cols();
    // D pads to I_m, so the extension is diag(U, I_{m−n}) · W.
    ComplexMatrix u_padded = ComplexMatrix::Identity(m, m);
    u_padded.topLeftCorner(n, n) = f.u;

    NaimarkExtension ext;
    ext.unitary = u_padded * f.w;
    ext.ancilla_outputs = static_cast<std::size_t>(m - n);
    ext.singulars = f.singulars;
    return ext;
}

std::vector<double> povm_probabilities(const ComplexMatrix &extension, const ComplexVector &psi) {
    if (extension.rows() != extension.cols() || psi.size() > extension.rows()) {
        throw std::invalid_argument("povm_probabilities: state does not fit the extension");
    }
    ComplexVector embedded = ComplexVector::Zero(extension.rows());
    embedded.head(psi.size()) = psi;
    const ComplexVector amps = extension.adjoint() * embedded;
    std::vector<double> probs(static_cast<std::size_t>(amps.size()));
    for (Eigen::Index i = 0; i < amps.size(); ++i) {
        probs[static_cast<std::size_t>(i)] = std::norm(amps(i));
    }
    return probs;
}

ComplexMatrix cz_gate_target() {
    const double a = std::sqrt(1.0 / 3.0);
    const double b = std::sqrt(2.0 / 3.0);
    ComplexMatrix t(4, 4);
    t << a, 0, b, 0,  //
        0, a, 0, 0,   //
        b, 0, -a, 0,  //
        0, 0, 0, -a;
    return t;
}

double cz_k(const ComplexMatrix &target) { return -0.5 * (target(0, 2) * target(2, 0)).real(); }

CzReport evaluate_cz(const SynthesisResult &result, double tol) {
    const ComplexMatrix a = sim::passive_block(result.s_total, tol);
    CzReport report;
    report.n_full_ancillas = result.classification.n_ancillas();
    for (const auto &mode : result.classification.modes) {
        report.singular_values.push_back(mode.sigma);
    }
    report.k = cz_k(upper_left_block(result.s_total, 4, 4));

    const auto n = static_cast<std::size_t>(a.rows());
    if (n < 4) {
        throw std::invalid_argument("evaluate_cz: network has fewer than four modes");
    }
    const std::array<std::pair<std::size_t, std::size_t>, 4> inputs{{{0, 2}, {0, 3}, {1, 2}, {1, 3}}};
    const std::array<int, 4> expected_signs{-1, 1, 1, 1};
    const auto accept = sim::group_count_predicate({{{0, 1}, 1}, {{2, 3}, 1}});

    for (std::size_t i = 0; i < inputs.size(); ++i) {
        sim::Occupation occ(n, 0);
        occ[inputs[i].first] = 1;
        occ[inputs[i].second] = 1;
        const sim::FockState out = sim::fock_evolve(a, occ, tol);
        const auto [kept, mass] = sim::postselect(out, accept);
        report.success_prob[i] = mass;
        report.amplitudes[i] = out.amplitude(occ);
        report.max_amplitude_error =
            std::max(report.max_amplitude_error, std::abs(report.amplitudes[i] - report.k * expected_signs[i]));
        report.max_probability_error = std::max(report.max_probability_error, std::abs(mass - report.k * report.k));
        // Any accepted outcome other than the input pattern would be a logical error.
        report.max_probability_error =
            std::max(report.max_probability_error, std::abs(mass - std::norm(report.amplitudes[i])));
    }

    // Divide out the global phase using the VV branch.
    const Complex ref = report.amplitudes[3] / std::abs(report.amplitudes[3]);
    for (std::size_t i = 0; i < 4; ++i) {
        report.sign_pattern[i] = (report.amplitudes[i] / ref).real() < 0.0 ? -1 : 1;
    }

    std::ostringstream why;
    if (report.sign_pattern != expected_signs) {
        why << "sign pattern mismatch; ";
    }
    if (!(report.max_amplitude_error < tol)) {
        why << "amplitude error " << report.max_amplitude_error << "; ";
    }
    if (!(report.max_probability_error < tol)) {
        why << "success probability error " << report.max_probability_error << "; ";
    }
    report.failure = why.str();
    report.passed = report.failure.empty();
    return report;
}

CzReport verify_cz(const SynthesisResult &result, double tol) {
    CzReport report = evaluate_cz(result, tol);
    if (!report.passed) {
        throw VerificationError("verify_cz: " + report.failure, result.quasiunitarity_deviation,
                                report.max_amplitude_error);
    }
    return report;
}

}  // namespace qsynth::apps
