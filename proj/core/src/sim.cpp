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

#include "qsynth/sim.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "qsynth/errors.hpp"

namespace qsynth::sim {

namespace {

double factorial(int k) {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) {
        f *= i;
    }
    return f;
}

double occupation_weight(const Occupation &occ) {
    double w = 1.0;
    for (int k : occ) {
        w *= factorial(k);
    }
    return w;
}

void check_moments_shape(const GaussianMoments &g) {
    const auto d = g.mean.size();
    if (d == 0 || d % 2 != 0 || g.second.rows() != d || g.second.cols() != d) {
        throw std::invalid_argument("moments: mean/second dimensions are inconsistent");
    }
}

}  // namespace

double FockState::norm_squared() const {
    double total = 0.0;
    for (const auto &[occ, amp] : amplitudes) {
        total += std::norm(amp);
    }
    return total;
}

double FockState::probability(const Occupation &occ) const { return std::norm(amplitude(occ)); }

Complex FockState::amplitude(const Occupation &occ) const {
    const auto it = amplitudes.find(occ);
    return it == amplitudes.end() ? Complex{} : it->second;
}

OccupationPredicate mode_bounds_predicate(Occupation min, Occupation max) {
    if (min.size() != max.size()) {
        throw std::invalid_argument("mode_bounds_predicate: min and max lengths differ");
    }
    return [min = std::move(min), max = std::move(max)](const Occupation &occ) {
        if (occ.size() != min.size()) {
            return false;
        }
        for (std::size_t k = 0; k < occ.size(); ++k) {
            if (occ[k] < min[k] || occ[k] > max[k]) {
                return false;
            }
        }
        return true;
    };
}

OccupationPredicate group_count_predicate(std::vector<std::pair<std::vector<std::size_t>, int>> groups) {
    return [groups = std::move(groups)](const Occupation &occ) {
        for (const auto &[modes, target] : groups) {
            int count = 0;
            for (auto k : modes) {
                if (k >= occ.size()) {
                    return false;
                }
                count += occ[k];
            }
            if (count != target) {
                return false;
            }
        }
        return true;
    };
}

ComplexMatrix passive_block(const ComplexMatrix &s_total, double tol) {
    if (s_total.rows() != s_total.cols() || s_total.rows() % 2 != 0 || s_total.rows() == 0) {
        throw std::invalid_argument("passive_block: expected a square matrix of even dimension");
    }
    const Eigen::Index n = s_total.rows() / 2;
    double worst = 0.0;
    Eigen::Index wr = 0;
    Eigen::Index wc = 0;
    for (Eigen::Index r = 0; r < 2 * n; ++r) {
        for (Eigen::Index c = 0; c < 2 * n; ++c) {
            if ((r < n) == (c < n)) {
                continue;
            }
            const double mag = std::abs(s_total(r, c));
            if (mag > worst) {
                worst = mag;
                wr = r;
                wc = c;
            }
        }
    }
    if (worst > tol) {
        std::ostringstream msg;
        msg << "not passive: off-diagonal block entry (" << wr << ", " << wc << ") has magnitude " << worst;
        throw NotPassiveError(msg.str(), static_cast<std::size_t>(wr), static_cast<std::size_t>(wc), worst);
    }
    return s_total.topLeftCorner(n, n);
}

FockState fock_evolve(const ComplexMatrix &a, const Occupation &input, double tol) {
    if (a.rows() != a.cols()) {
        throw std::invalid_argument("fock_evolve: transfer matrix is not square");
    }
    const auto n = static_cast<std::size_t>(a.rows());
    if (n == 0 || n > kMaxFockModes) {
        throw std::invalid_argument("fock_evolve: mode count must be 1.." + std::to_string(kMaxFockModes));
    }
    if (input.size() != n) {
        throw std::invalid_argument("fock_evolve: input occupation has wrong length");
    }
    int photons = 0;
    for (int k : input) {
        if (k < 0) {
            throw std::invalid_argument("fock_evolve: negative occupation");
        }
        photons += k;
    }
    if (static_cast<std::size_t>(photons) > kMaxFockPhotons) {
        throw std::invalid_argument("fock_evolve: at most " + std::to_string(kMaxFockPhotons) + " photons");
    }
    const double deviation = unitarity_deviation(a);
    if (!(deviation < tol)) {
        std::ostringstream msg;
        msg << "fock_evolve: transfer matrix is not unitary (deviation " << deviation << ")";
        throw NotUnitaryError(msg.str(), deviation);
    }

    // Monomials in the output creation operators, keyed by exponent vector.
    std::map<Occupation, Complex> poly{{Occupation(n, 0), Complex{1.0, 0.0}}};
    for (std::size_t k = 0; k < n; ++k) {
        for (int rep = 0; rep < input[k]; ++rep) {
            std::map<Occupation, Complex> next;
            for (const auto &[mono, coeff] : poly) {
                for (std::size_t j = 0; j < n; ++j) {
                    const Complex ajk = a(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k));
                    if (ajk == Complex{}) {
                        continue;
                    }
                    Occupation grown = mono;
                    ++grown[j];
                    next[grown] += coeff * ajk;
                }
            }
            poly = std::move(next);
        }
    }

    FockState out;
    out.n_modes = n;
    const double in_norm = std::sqrt(occupation_weight(input));
    for (const auto &[mono, coeff] : poly) {
        // (a†)^m |0⟩ = √(m!) |m⟩
        const Complex amp = coeff * std::sqrt(occupation_weight(mono)) / in_norm;
        if (std::abs(amp) >= kAmplitudeFloor) {
            out.amplitudes.emplace(mono, amp);
        }
    }
    return out;
}

std::pair<FockState, double> postselect(const FockState &state, const OccupationPredicate &accept) {
    FockState kept;
    kept.n_modes = state.n_modes;
    double mass = 0.0;
    for (const auto &[occ, amp] : state.amplitudes) {
        if (accept(occ)) {
            kept.amplitudes.emplace(occ, amp);
            mass += std::norm(amp);
        }
    }
    if (!(mass > 0.0)) {
        throw std::domain_error("postselect: no probability mass satisfies the predicate");
    }
    const double scale = 1.0 / std::sqrt(mass);
    for (auto &[occ, amp] : kept.amplitudes) {
        amp *= scale;
    }
    return {std::move(kept), mass};
}

GaussianMoments vacuum_moments(std::size_t n_modes) {
    if (n_modes < 1) {
        throw std::invalid_argument("vacuum_moments: need at least one mode");
    }
    const auto n = static_cast<Eigen::Index>(n_modes);
    GaussianMoments g;
    g.mean = ComplexVector::Zero(2 * n);
    g.second = ComplexMatrix::Zero(2 * n, 2 * n);
    g.second.topLeftCorner(n, n).setIdentity();  // ⟨a a†⟩ = 1
    return g;
}

GaussianMoments coherent_moments(const ComplexVector &alpha, std::size_t n_modes) {
    if (static_cast<std::size_t>(alpha.size()) > n_modes) {
        throw std::invalid_argument("coherent_moments: more amplitudes than modes");
    }
    GaussianMoments g = vacuum_moments(n_modes);
    const auto n = static_cast<Eigen::Index>(n_modes);
    for (Eigen::Index k = 0; k < alpha.size(); ++k) {
        g.mean(k) = alpha(k);
        g.mean(k + n) = std::conj(alpha(k));
    }
    return g;
}

GaussianMoments evolve_moments(const ComplexMatrix &s_total, const GaussianMoments &g) {
    check_moments_shape(g);
    if (s_total.rows() != g.mean.size() || s_total.cols() != g.mean.size()) {
        throw std::invalid_argument("evolve_moments: scattering matrix and moments have different dimensions");
    }
    return {s_total * g.mean, s_total * g.second * s_total.adjoint()};
}

double physicality_residual(const GaussianMoments &g) {
    check_moments_shape(g);
    const Eigen::Index n = g.mean.size() / 2;
    ComplexMatrix swapped(2 * n, 2 * n);
    swapped.topLeftCorner(n, n) = g.second.bottomRightCorner(n, n);
    swapped.topRightCorner(n, n) = g.second.bottomLeftCorner(n, n);
    swapped.bottomLeftCorner(n, n) = g.second.topRightCorner(n, n);
    swapped.bottomRightCorner(n, n) = g.second.topLeftCorner(n, n);
    return max_abs_diff(g.second - swapped.transpose(), g_metric(static_cast<std::size_t>(n)));
}

double mean_conjugacy_residual(const GaussianMoments &g) {
    check_moments_shape(g);
    const Eigen::Index n = g.mean.size() / 2;
    return (g.mean.head(n) - g.mean.tail(n).conjugate()).cwiseAbs().maxCoeff();
}

}  // namespace qsynth::sim
