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
 * JSON wire formats. Every document written carries "schema": "qsynth/1";
 * on input the key is optional but must match when present.
 *
 *   matrix   {"rows": n, "cols": m, "data": [[re, im], ...]}   (row-major)
 *   netlist  {"n_modes", "n_nominal", "ancilla_inputs", "ancilla_outputs",
 *             "full_ancillas", "elements": [
 *               {"type": "ps",  "mode": i,        "phi": x}
 *               {"type": "bs",  "modes": [i, j],  "theta": x}
 *               {"type": "tms", "modes": [i, j],  "xi": x} ]}
 *            Modes are 0-based; elements apply in array order.
 *   povm     {"dim": n, "vectors": [[[re, im], ...], ...]}
 *            or {"dim": n, "effects": [matrix, ...]} for rank-one operators.
 */

#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "qsynth/apps.hpp"
#include "qsynth/blocks.hpp"
#include "qsynth/closed_form.hpp"
#include "qsynth/numkit.hpp"
#include "qsynth/synth.hpp"

namespace qsynth::io {

using json = nlohmann::json;

inline constexpr const char *kSchema = "qsynth/1";

/// Malformed or schema-violating input.
class ParseError : public std::runtime_error {
   public:
    explicit ParseError(const std::string &what) : std::runtime_error(what) {}
};

json read_json_file(const std::filesystem::path &path);
void write_json_file(const std::filesystem::path &path, const json &doc);

json matrix_to_json(const ComplexMatrix &m);
ComplexMatrix matrix_from_json(const json &j);

json complex_vector_to_json(const ComplexVector &v);
ComplexVector complex_vector_from_json(const json &j);

json circuit_to_json(const Circuit &c);
Circuit circuit_from_json(const json &j);

json report_to_json(const SynthesisResult &r);
json params_to_json(const analytic::Params2x2 &p);

apps::RankOnePovm povm_from_json(const json &j, double tol = kDefaultTolerance);

}  // namespace qsynth::io
