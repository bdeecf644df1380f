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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qsynth {

/// The SVD backend did not produce a usable factorization.
class SvdError : public std::runtime_error {
   public:
    explicit SvdError(const std::string &what) : std::runtime_error(what) {}
};

/// A matrix that must be unitary (to a tolerance) is not.
class NotUnitaryError : public std::domain_error {
   public:
    NotUnitaryError(const std::string &what, double deviation)
        : std::domain_error(what), deviation_(deviation) {}
    double deviation() const noexcept { return deviation_; }

   private:
    double deviation_;
};

/// A scattering matrix couples annihilation and creation operators.
class NotPassiveError : public std::domain_error {
   public:
    NotPassiveError(const std::string &what, std::size_t row, std::size_t col, double magnitude)
        : std::domain_error(what), row_(row), col_(col), magnitude_(magnitude) {}
    std::size_t row() const noexcept { return row_; }
    std::size_t col() const noexcept { return col_; }
    double magnitude() const noexcept { return magnitude_; }

   private:
    std::size_t row_;
    std::size_t col_;
    double magnitude_;
};

/// A synthesized network failed its own post-checks. Indicates a bug or a
/// numerically hopeless input rather than a user error.
class VerificationError : public std::runtime_error {
   public:
    VerificationError(const std::string &what, double quasiunitarity_deviation, double block_deviation)
        : std::runtime_error(what),
          quasiunitarity_deviation_(quasiunitarity_deviation),
          block_deviation_(block_deviation) {}
    double quasiunitarity_deviation() const noexcept { return quasiunitarity_deviation_; }
    double block_deviation() const noexcept { return block_deviation_; }

   private:
    double quasiunitarity_deviation_;
    double block_deviation_;
};

}  // namespace qsynth
