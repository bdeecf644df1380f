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
 * Subcommands of the `qsynth` tool. Each returns a process exit status and
 * writes JSON to `out`, diagnostics to `err`.
 *
 * Exit codes: 0 ok, 2 parse error, 3 verification failure, 4 domain error
 * (not passive, not unitary, invalid POVM, out-of-range parameters).
 */

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

#include "qsynth/numkit.hpp"

namespace qsynth::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;
inline constexpr int kExitVerify = 3;
inline constexpr int kExitDomain = 4;

enum class MeshScheme { reck };

struct Config {
    double tol = kDefaultTolerance;
    double eps_sigma = 1e-9;
    MeshScheme mesh = MeshScheme::reck;
    std::optional<std::uint64_t> seed;
};

using Path = std::filesystem::path;

int cmd_synth(const Path &matrix_file, const std::optional<Path> &out_netlist, const std::optional<Path> &out_report,
              const Config &config, std::ostream &out, std::ostream &err);

struct SimulateOptions {
    /// Comma-separated photon counts; missing trailing modes are vacuum.
    std::string input;
    /// JSON {"min": [...], "max": [...]} or "@path" to such a file.
    std::optional<std::string> predicate;
    /// Moments mode when set: JSON array of [re, im] coherent amplitudes.
    std::optional<std::string> coherent;
};

int cmd_simulate(const Path &netlist_file, const SimulateOptions &options, const Config &config, std::ostream &out,
                 std::ostream &err);

int cmd_naimark(const Path &povm_file, const std::optional<Path> &out_file, const Config &config, std::ostream &out,
                std::ostream &err);

int cmd_analytic2x2(const Path &matrix_file, const std::optional<Path> &out_file, const Config &config,
                    std::ostream &out, std::ostream &err);

int cmd_cz(const std::optional<Path> &out_file, const Config &config, std::ostream &out, std::ostream &err);

/// Synthesizes `trials` random matrices drawn from `config.seed` and checks them.
int cmd_selftest(std::size_t trials, const Config &config, std::ostream &out, std::ostream &err);

}  // namespace qsynth::cli
