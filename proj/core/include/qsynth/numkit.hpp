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
 * Dense complex matrices, the SVD used by the synthesizer, and the
 * quasiunitarity metric S·G·S† = G that every enlarged scattering matrix
 * has to satisfy.
 */

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace qsynth {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Absolute max-entry tolerance used for every verification unless overridden.
inline constexpr double kDefaultTolerance = 1e-10;

/**
 * T = u · diag(singulars) · w, with u (n×n) and w (m×m) unitary and the
 * singular values sorted in descending order.
 *
 * `w` is the factor applied first (it is the adjoint of the conventional
 * right singular-vector matrix V).
 */
struct SvdFactors {
    ComplexMatrix u;
    std::vector<double> singulars;
    ComplexMatrix w;

    /// The rectangular n×m diagonal matrix D.
    ComplexMatrix diagonal() const;
    /// u · D · w.
    ComplexMatrix reconstruct() const;
};

/// Throws std::invalid_argument if any entry is NaN or infinite.
void require_finite(const ComplexMatrix &m, const char *what);

SvdFactors svd(const ComplexMatrix &t);

/// 2N×2N diag(+1 ×N, −1 ×N).
ComplexMatrix g_metric(std::size_t n_modes);

/// max |S·G·S† − G|; zero iff S is quasiunitary. Throws on odd or non-square S.
double quasiunitarity_deviation(const ComplexMatrix &s);

/// The n×m submatrix of rows 0..n−1 and columns 0..m−1.
ComplexMatrix upper_left_block(const ComplexMatrix &s, std::size_t n, std::size_t m);

/// max |a − b| entrywise. Throws on shape mismatch.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

/// max |u†u − I|. Throws on non-square input.
double unitarity_deviation(const ComplexMatrix &u);

/// Normalizes an angle to (−π, π].
double wrap_angle(double phi);

/// arg(z) with arg(0) = 0.
double safe_arg(Complex z);

}  // namespace qsynth
