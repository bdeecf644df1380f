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

#include "qsynth/numkit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>

#include "qsynth/errors.hpp"

namespace qsynth {

namespace {

// Loose sanity bound on the backend; the real verification happens downstream.
constexpr double kSvdSanityTolerance = 1e-8;

const char *describe(Eigen::ComputationInfo info) {
    switch (info) {
        case Eigen::Success:
            return "success";
        case Eigen::NumericalIssue:
            return "numerical issue";
        case Eigen::NoConvergence:
            return "no convergence";
        case Eigen::InvalidInput:
            return "invalid input";
    }
    return "unknown";
}

}  // namespace

ComplexMatrix SvdFactors::diagonal() const {
    ComplexMatrix d = ComplexMatrix::Zero(u.cols(), w.rows());
    for (std::size_t k = 0; k < singulars.size(); ++k) {
        d(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)) = singulars[k];
    }
    return d;
}

ComplexMatrix SvdFactors::reconstruct() const { return u * diagonal() * w; }

void require_finite(const ComplexMatrix &m, const char *what) {
    if (!m.allFinite()) {
        throw std::invalid_argument(std::string(what) + ": matrix contains NaN or infinite entries");
    }
}

SvdFactors svd(const ComplexMatrix &t) {
    if (t.rows() < 1 || t.cols() < 1) {
        throw std::invalid_argument("svd: matrix must have at least one row and one column");
    }
    require_finite(t, "svd");

    Eigen::JacobiSVD<ComplexMatrix, Eigen::ColPivHouseholderQRPreconditioner> solver(
        t, Eigen::ComputeFullU | Eigen::ComputeFullV);
    if (solver.info() != Eigen::Success) {
        throw SvdError(std::string("svd: backend failed (") + describe(solver.info()) + ")");
    }

    SvdFactors f;
    f.u = solver.matrixU();
    f.w = solver.matrixV().adjoint();
    const auto &values = solver.singularValues();
    f.singulars.assign(values.data(), values.data() + values.size());

    const double scale = std::max(1.0, f.singulars.empty() ? 0.0 : f.singulars.front());
    const double recon = max_abs_diff(f.reconstruct(), t);
    const double unitary = std::max(unitarity_deviation(f.u), unitarity_deviation(f.w));
    if (recon > kSvdSanityTolerance * scale || unitary > kSvdSanityTolerance ||
        !std::is_sorted(f.singulars.rbegin(), f.singulars.rend())) {
        std::ostringstream msg;
        msg << "svd: factorization failed sanity check (reconstruction " << recon << ", unitarity " << unitary
            << ")";
        throw SvdError(msg.str());
    }
    return f;
}

ComplexMatrix g_metric(std::size_t n_modes) {
    if (n_modes < 1) {
        throw std::invalid_argument("g_metric: need at least one mode");
    }
    const auto n = static_cast<Eigen::Index>(n_modes);
    ComplexMatrix g = ComplexMatrix::Zero(2 * n, 2 * n);
    for (Eigen::Index k = 0; k < n; ++k) {
        g(k, k) = 1.0;
        g(k + n, k + n) = -1.0;
    }
    return g;
}

double quasiunitarity_deviation(const ComplexMatrix &s) {
    if (s.rows() != s.cols() || s.rows() % 2 != 0 || s.rows() == 0) {
        std::ostringstream msg;
        msg << "quasiunitarity_deviation: expected a square matrix of even dimension, got " << s.rows() << "x"
            << s.cols();
        throw std::invalid_argument(msg.str());
    }
    const ComplexMatrix g = g_metric(static_cast<std::size_t>(s.rows() / 2));
    return max_abs_diff(s * g * s.adjoint(), g);
}

ComplexMatrix upper_left_block(const ComplexMatrix &s, std::size_t n, std::size_t m) {
    if (n > static_cast<std::size_t>(s.rows()) || m > static_cast<std::size_t>(s.cols())) {
        std::ostringstream msg;
        msg << "upper_left_block: requested " << n << "x" << m << " block of a " << s.rows() << "x" << s.cols()
            << " matrix";
        throw std::out_of_range(msg.str());
    }
    return s.topLeftCorner(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(m));
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("max_abs_diff: shape mismatch");
    }
    if (a.size() == 0) {
        return 0.0;
    }
    return (a - b).cwiseAbs().maxCoeff();
}

double unitarity_deviation(const ComplexMatrix &u) {
    if (u.rows() != u.cols()) {
        throw std::invalid_argument("unitarity_deviation: matrix is not square");
    }
    return max_abs_diff(u.adjoint() * u, ComplexMatrix::Identity(u.rows(), u.cols()));
}

double wrap_angle(double phi) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double r = std::remainder(phi, two_pi);  // [−π, π]
    if (r <= -std::numbers::pi) {
        r += two_pi;
    }
    return r;
}

double safe_arg(Complex z) { return (z == Complex{0.0, 0.0}) ? 0.0 : std::arg(z); }

}  // namespace qsynth
