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

#include "qsynth/synth.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qsynth/errors.hpp"
#include "qsynth/mesh.hpp"

namespace qsynth {

namespace {

Eigen::Index idx(std::size_t k) { return static_cast<Eigen::Index>(k); }

void check_factor_shapes(const SvdFactors &f, std::size_t n, std::size_t m) {
    if (f.u.rows() != idx(n) || f.u.cols() != idx(n) || f.w.rows() != idx(m) || f.w.cols() != idx(m) ||
        f.singulars.size() != std::min(n, m)) {
        std::ostringstream msg;
        msg << "SVD factors do not match a " << n << "x" << m << " matrix";
        throw std::invalid_argument(msg.str());
    }
}

void validate_injected(const ComplexMatrix &t, const SvdFactors &f, double tol) {
    check_factor_shapes(f, static_cast<std::size_t>(t.rows()), static_cast<std::size_t>(t.cols()));
    for (double s : f.singulars) {
        if (!(s >= 0.0) || !std::isfinite(s)) {
            throw std::invalid_argument("injected singular values must be finite and non-negative");
        }
    }
    const double unitary = std::max(unitarity_deviation(f.u), unitarity_deviation(f.w));
    const double recon = max_abs_diff(f.reconstruct(), t);
    if (unitary >= tol || recon >= tol) {
        std::ostringstream msg;
        msg << "injected SVD factors are inconsistent (unitarity " << unitary << ", reconstruction " << recon << ")";
        throw std::invalid_argument(msg.str());
    }
}

}  // namespace

std::vector<double> padded_singulars(const SvdFactors &f, std::size_t n, std::size_t m) {
    check_factor_shapes(f, n, m);
    std::vector<double> out = f.singulars;
    out.resize(std::max(n, m), 1.0);
    return out;
}

PaddedFactors pad_factors(const SvdFactors &f, std::size_t n, std::size_t m) {
    check_factor_shapes(f, n, m);
    const auto k = idx(std::max(n, m));
    PaddedFactors p{ComplexMatrix::Identity(k, k), ComplexMatrix::Identity(k, k), ComplexMatrix::Identity(k, k)};
    p.u.topLeftCorner(idx(n), idx(n)) = f.u;
    p.w.topLeftCorner(idx(m), idx(m)) = f.w;
    for (std::size_t j = 0; j < f.singulars.size(); ++j) {
        p.d(idx(j), idx(j)) = f.singulars[j];
    }
    return p;
}

SingularClassification classify_singulars(const std::vector<double> &singulars, double eps_sigma,
                                          std::size_t n_nominal) {
    if (singulars.size() > n_nominal) {
        throw std::invalid_argument("classify_singulars: more singular values than nominal modes");
    }
    if (!(eps_sigma > 0.0)) {
        throw std::invalid_argument("classify_singulars: eps_sigma must be positive");
    }
    SingularClassification c;
    c.n_nominal = n_nominal;
    c.n_modes = n_nominal;
    c.modes.resize(n_nominal);
    for (std::size_t j = 0; j < n_nominal; ++j) {
        const double sigma = j < singulars.size() ? singulars[j] : 1.0;
        if (!(sigma >= 0.0) || !std::isfinite(sigma)) {
            throw std::invalid_argument("classify_singulars: singular value " + std::to_string(j) +
                                        " is negative or not finite");
        }
        auto &mode = c.modes[j];
        mode.sigma = sigma;
        if (std::abs(sigma - 1.0) <= eps_sigma) {
            mode.kind = SingularClass::unit;
            continue;
        }
        mode.kind = sigma < 1.0 ? SingularClass::loss : SingularClass::gain;
        mode.ancilla = c.n_modes++;
    }
    return c;
}

ComplexMatrix lift_unitary_factor(const ComplexMatrix &u_piece, std::size_t n_a) {
    if (u_piece.rows() != u_piece.cols()) {
        throw std::invalid_argument("lift_unitary_factor: piece is not square");
    }
    const Eigen::Index nn = u_piece.rows();
    const Eigen::Index n = nn + idx(n_a);
    ComplexMatrix s = ComplexMatrix::Identity(2 * n, 2 * n);
    s.block(0, 0, nn, nn) = u_piece;
    s.block(n, n, nn, nn) = u_piece.conjugate();
    return s;
}

ComplexMatrix lift_singular(std::size_t j, std::size_t m_aj, double sigma, std::size_t n_modes, double eps_sigma) {
    if (j >= n_modes || m_aj >= n_modes || j == m_aj) {
        throw std::invalid_argument("lift_singular: mode indices out of range or equal");
    }
    if (!(sigma >= 0.0) || !std::isfinite(sigma)) {
        throw std::invalid_argument("lift_singular: sigma must be finite and non-negative");
    }
    if (std::abs(sigma - 1.0) <= eps_sigma) {
        throw std::invalid_argument("lift_singular: unit singular value needs no ancilla");
    }
    const ComplexMatrix block = sigma < 1.0 ? lift_loss(sigma) : lift_gain(sigma);
    const auto n = idx(n_modes);
    const std::array<Eigen::Index, 4> at{idx(j), idx(m_aj), idx(j) + n, idx(m_aj) + n};
    ComplexMatrix s = ComplexMatrix::Identity(2 * n, 2 * n);
    for (Eigen::Index r = 0; r < 4; ++r) {
        for (Eigen::Index c = 0; c < 4; ++c) {
            s(at[r], at[c]) = block(r, c);
        }
    }
    return s;
}

SynthesisResult synthesize(const ComplexMatrix &t, const SynthesisConfig &cfg,
                           const std::optional<SvdFactors> &factors) {
    if (t.rows() < 1 || t.cols() < 1) {
        throw std::invalid_argument("synthesize: empty transformation matrix");
    }
    if (!(cfg.tol > 0.0) || !(cfg.eps_sigma > 0.0)) {
        throw std::invalid_argument("synthesize: tol and eps_sigma must be positive");
    }
    require_finite(t, "synthesize");

    const auto n = static_cast<std::size_t>(t.rows());
    const auto m = static_cast<std::size_t>(t.cols());
    const std::size_t k = std::max(n, m);

    SvdFactors f;
    if (factors) {
        validate_injected(t, *factors, std::max(cfg.tol, kDefaultTolerance));
        f = *factors;
    } else {
        f = svd(t);
    }
    for (double s : f.singulars) {
        if (s > cfg.max_sigma) {
            std::ostringstream msg;
            msg << "synthesize: singular value " << s << " exceeds the gain ceiling " << cfg.max_sigma;
            throw std::domain_error(msg.str());
        }
    }

    SynthesisResult result;
    result.rows = n;
    result.cols = m;
    result.classification = classify_singulars(padded_singulars(f, n, m), cfg.eps_sigma, k);
    const std::size_t n_modes = result.classification.n_modes;
    const std::size_t n_a = n_modes - k;

    // Matrix route: S_U · ∏ S_Dj · S_W.
    const PaddedFactors p = pad_factors(f, n, m);
    ComplexMatrix s_d = ComplexMatrix::Identity(2 * idx(n_modes), 2 * idx(n_modes));
    for (std::size_t j = 0; j < k; ++j) {
        const auto &mode = result.classification.modes[j];
        if (mode.ancilla) {
            s_d = lift_singular(j, *mode.ancilla, mode.sigma, n_modes, cfg.eps_sigma) * s_d;
        }
    }
    result.s_total = lift_unitary_factor(p.u, n_a) * s_d * lift_unitary_factor(p.w, n_a);

    // Netlist route: mesh(W), then the singular stage, then mesh(U).
    Circuit &c = result.circuit;
    c.n_modes = n_modes;
    c.n_nominal = k;
    for (std::size_t a = std::min(n, m); a < k; ++a) {
        (m > n ? c.ancilla_outputs : c.ancilla_inputs).push_back(a);
    }
    for (std::size_t a = k; a < n_modes; ++a) {
        c.full_ancillas.push_back(a);
    }
    // The factors are gated at no less than the library default so a very tight
    // tol surfaces as a VerificationError from the post-check.
    const double factor_tol = std::max(cfg.tol, kDefaultTolerance);
    c.elements = reck_decompose(f.w, factor_tol);
    const std::size_t w_end = c.elements.size();
    for (std::size_t j = 0; j < k; ++j) {
        const auto &mode = result.classification.modes[j];
        if (!mode.ancilla) {
            continue;
        }
        if (mode.kind == SingularClass::loss) {
            c.elements.emplace_back(BeamSplitter{j, *mode.ancilla, std::acos(mode.sigma)});
        } else {
            c.elements.emplace_back(TwoModeSqueezer{j, *mode.ancilla, std::acosh(mode.sigma)});
        }
    }
    const auto u_elements = reck_decompose(f.u, factor_tol);
    result.singular_stage_elements = c.elements.size() - w_end;
    c.elements.insert(c.elements.end(), u_elements.begin(), u_elements.end());
    result.counts = count_elements(c.elements);
    result.mesh_counts = result.counts;
    result.mesh_counts.squeezers = 0;
    result.mesh_counts.beam_splitters -= result.singular_stage_elements - result.counts.squeezers;

    result.quasiunitarity_deviation = quasiunitarity_deviation(result.s_total);
    result.block_deviation = max_abs_diff(upper_left_block(result.s_total, n, m), t);
    result.circuit_deviation = max_abs_diff(circuit_smatrix(c), result.s_total);
    if (!(result.quasiunitarity_deviation < cfg.tol) || !(result.block_deviation < cfg.tol) ||
        !(result.circuit_deviation < cfg.tol)) {
        std::ostringstream msg;
        msg << "synthesize: post-check failed (quasiunitarity " << result.quasiunitarity_deviation << ", block "
            << result.block_deviation << ", netlist " << result.circuit_deviation << ", tol " << cfg.tol << ")";
        throw VerificationError(msg.str(), result.quasiunitarity_deviation, result.block_deviation);
    }
    return result;
}

CountBounds count_bounds(std::size_t n, std::size_t m) {
    if (n < 1 || m < 1) {
        throw std::invalid_argument("count_bounds: dimensions must be positive");
    }
    return {n * (n - 1) / 2 + m * (m - 1) / 2, n * (n + 1) / 2 + m * (m + 1) / 2, std::min(n, m)};
}

}  // namespace qsynth
