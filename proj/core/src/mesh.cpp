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

#include "qsynth/mesh.hpp"

#include <cmath>
#include <sstream>

#include "qsynth/errors.hpp"

namespace qsynth {

namespace {

// Entries of a unitary are O(1); anything this small is treated as already nulled.
constexpr double kNegligible = 1e-15;

}  // namespace

std::vector<Element> reck_decompose(const ComplexMatrix &u, double tol) {
    if (u.rows() != u.cols()) {
        throw std::invalid_argument("reck_decompose: matrix is not square");
    }
    require_finite(u, "reck_decompose");
    const double deviation = unitarity_deviation(u);
    if (!(deviation < tol)) {
        std::ostringstream msg;
        msg << "reck_decompose: input is not unitary (max |u^H u - I| = " << deviation << ")";
        throw NotUnitaryError(msg.str(), deviation);
    }

    const Eigen::Index n = u.rows();
    ComplexMatrix v = u;
    std::vector<Element> elements;

    // v · T_1† ··· T_K† = diag(d)  ⇒  u = diag(d) · T_K ··· T_1.
    for (Eigen::Index row = n - 1; row >= 1; --row) {
        const Eigen::Index a = row;
        for (Eigen::Index b = 0; b < row; ++b) {
            const Complex x = v(row, a);
            const Complex y = v(row, b);
            if (std::abs(y) <= kNegligible) {
                continue;
            }
            const double theta = std::atan2(std::abs(y), std::abs(x));
            const double phi = wrap_angle(safe_arg(x) - safe_arg(y));
            const double c = std::cos(theta);
            const double s = std::sin(theta);
            const Complex rot = std::polar(1.0, -phi);

            const Eigen::VectorXcd col_a = v.col(a);
            const Eigen::VectorXcd col_b = v.col(b);
            v.col(a) = (c * rot) * col_a + s * col_b;
            v.col(b) = (-s * rot) * col_a + c * col_b;
            v(row, b) = 0.0;

            if (std::abs(phi) > kNegligible) {
                elements.emplace_back(PhaseShifter{static_cast<std::size_t>(a), phi});
            }
            elements.emplace_back(BeamSplitter{static_cast<std::size_t>(a), static_cast<std::size_t>(b), theta});
        }
    }
    for (Eigen::Index k = 0; k < n; ++k) {
        const double phi = safe_arg(v(k, k));
        if (std::abs(phi) > kNegligible) {
            elements.emplace_back(PhaseShifter{static_cast<std::size_t>(k), phi});
        }
    }
    return elements;
}

double mesh_verify(const std::vector<Element> &elements, const ComplexMatrix &u) {
    if (u.rows() != u.cols()) {
        throw std::invalid_argument("mesh_verify: matrix is not square");
    }
    return max_abs_diff(passive_unitary(elements, static_cast<std::size_t>(u.rows())), u);
}

}  // namespace qsynth
