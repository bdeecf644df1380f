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

#include "qsynth_cli/json_io.hpp"

#include <cmath>
#include <fstream>
#include <variant>

namespace qsynth::io {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

void check_schema(const json &j) {
    if (!j.is_object()) {
        throw ParseError("expected a JSON object");
    }
    if (const auto it = j.find("schema"); it != j.end() && *it != kSchema) {
        throw ParseError("unsupported schema " + it->dump() + " (expected \"" + kSchema + "\")");
    }
}

const json &field(const json &j, const char *key) {
    const auto it = j.find(key);
    if (it == j.end()) {
        throw ParseError(std::string("missing key \"") + key + "\"");
    }
    return *it;
}

std::size_t count_field(const json &j, const char *key) {
    const json &v = field(j, key);
    if (!v.is_number_integer() || v.get<long long>() < 0) {
        throw ParseError(std::string("\"") + key + "\" must be a non-negative integer");
    }
    return v.get<std::size_t>();
}

double real_field(const json &j, const char *key) {
    const json &v = field(j, key);
    if (!v.is_number()) {
        throw ParseError(std::string("\"") + key + "\" must be a number");
    }
    return v.get<double>();
}

std::vector<std::size_t> index_list(const json &j, const char *key) {
    const auto it = j.find(key);
    if (it == j.end()) {
        return {};
    }
    if (!it->is_array()) {
        throw ParseError(std::string("\"") + key + "\" must be an array of indices");
    }
    std::vector<std::size_t> out;
    for (const auto &v : *it) {
        if (!v.is_number_integer() || v.get<long long>() < 0) {
            throw ParseError(std::string("\"") + key + "\" must contain non-negative integers");
        }
        out.push_back(v.get<std::size_t>());
    }
    return out;
}

Complex complex_from_json(const json &v) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
        throw ParseError("complex entries must be [re, im] pairs");
    }
    return {v[0].get<double>(), v[1].get<double>()};
}

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

std::pair<std::size_t, std::size_t> mode_pair(const json &e) {
    const json &modes = field(e, "modes");
    if (!modes.is_array() || modes.size() != 2 || !modes[0].is_number_integer() || !modes[1].is_number_integer() ||
        modes[0].get<long long>() < 0 || modes[1].get<long long>() < 0) {
        throw ParseError("\"modes\" must be a pair of non-negative integers");
    }
    return {modes[0].get<std::size_t>(), modes[1].get<std::size_t>()};
}

}  // namespace

json read_json_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open " + path.string());
    }
    try {
        return json::parse(in);
    } catch (const json::exception &e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

void write_json_file(const std::filesystem::path &path, const json &doc) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out << doc.dump(2) << '\n';
}

json matrix_to_json(const ComplexMatrix &m) {
    json data = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            data.push_back(complex_to_json(m(r, c)));
        }
    }
    return {{"schema", kSchema}, {"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

ComplexMatrix matrix_from_json(const json &j) {
    check_schema(j);
    const std::size_t rows = count_field(j, "rows");
    const std::size_t cols = count_field(j, "cols");
    const json &data = field(j, "data");
    if (!data.is_array() || data.size() != rows * cols) {
        throw ParseError("\"data\" must hold rows*cols = " + std::to_string(rows * cols) + " entries");
    }
    ComplexMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (std::size_t k = 0; k < data.size(); ++k) {
        const Complex z = complex_from_json(data[k]);
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw ParseError("matrix entries must be finite");
        }
        m(static_cast<Eigen::Index>(k / cols), static_cast<Eigen::Index>(k % cols)) = z;
    }
    return m;
}

json complex_vector_to_json(const ComplexVector &v) {
    json out = json::array();
    for (Eigen::Index k = 0; k < v.size(); ++k) {
        out.push_back(complex_to_json(v(k)));
    }
    return out;
}

ComplexVector complex_vector_from_json(const json &j) {
    if (!j.is_array()) {
        throw ParseError("expected an array of [re, im] pairs");
    }
    ComplexVector v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t k = 0; k < j.size(); ++k) {
        v(static_cast<Eigen::Index>(k)) = complex_from_json(j[k]);
    }
    return v;
}

json circuit_to_json(const Circuit &c) {
    json elements = json::array();
    for (const auto &e : c.elements) {
        elements.push_back(std::visit(
            overloaded{
                [](const PhaseShifter &ps) -> json { return {{"type", "ps"}, {"mode", ps.mode}, {"phi", ps.phi}}; },
                [](const BeamSplitter &bs) -> json {
                    return {{"type", "bs"}, {"modes", {bs.mode_a, bs.mode_b}}, {"theta", bs.theta}};
                },
                [](const TwoModeSqueezer &tms) -> json {
                    return {{"type", "tms"}, {"modes", {tms.mode_a, tms.mode_b}}, {"xi", tms.xi}};
                },
            },
            e));
    }
    return {{"schema", kSchema},
            {"n_modes", c.n_modes},
            {"n_nominal", c.n_nominal},
            {"ancilla_inputs", c.ancilla_inputs},
            {"ancilla_outputs", c.ancilla_outputs},
            {"full_ancillas", c.full_ancillas},
            {"elements", std::move(elements)}};
}

Circuit circuit_from_json(const json &j) {
    check_schema(j);
    Circuit c;
    c.n_modes = count_field(j, "n_modes");
    c.n_nominal = count_field(j, "n_nominal");
    c.ancilla_inputs = index_list(j, "ancilla_inputs");
    c.ancilla_outputs = index_list(j, "ancilla_outputs");
    c.full_ancillas = index_list(j, "full_ancillas");
    const json &elements = field(j, "elements");
    if (!elements.is_array()) {
        throw ParseError("\"elements\" must be an array");
    }
    for (const auto &e : elements) {
        if (!e.is_object()) {
            throw ParseError("each element must be an object");
        }
        const json &type = field(e, "type");
        if (type == "ps") {
            c.elements.emplace_back(PhaseShifter{count_field(e, "mode"), real_field(e, "phi")});
        } else if (type == "bs") {
            const auto [a, b] = mode_pair(e);
            c.elements.emplace_back(BeamSplitter{a, b, real_field(e, "theta")});
        } else if (type == "tms") {
            const auto [a, b] = mode_pair(e);
            c.elements.emplace_back(TwoModeSqueezer{a, b, real_field(e, "xi")});
        } else {
            throw ParseError("unknown element type " + type.dump());
        }
    }
    try {
        validate_circuit(c);
    } catch (const std::invalid_argument &err) {
        throw ParseError(std::string("invalid netlist: ") + err.what());
    }
    return c;
}

json report_to_json(const SynthesisResult &r) {
    const CountBounds bounds = count_bounds(r.rows, r.cols);
    json modes = json::array();
    json singulars = json::array();
    for (std::size_t j = 0; j < r.classification.modes.size(); ++j) {
        const auto &m = r.classification.modes[j];
        const char *kind = m.kind == SingularClass::unit ? "unit" : (m.kind == SingularClass::loss ? "loss" : "gain");
        json entry = {{"mode", j}, {"class", kind}, {"sigma", m.sigma}};
        entry["ancilla"] = m.ancilla ? json(*m.ancilla) : json(nullptr);
        modes.push_back(std::move(entry));
        if (j < std::min(r.rows, r.cols)) {
            singulars.push_back(m.sigma);
        }
    }
    return {{"schema", kSchema},
            {"rows", r.rows},
            {"cols", r.cols},
            {"n_modes", r.classification.n_modes},
            {"quasiunitarity_deviation", r.quasiunitarity_deviation},
            {"block_deviation", r.block_deviation},
            {"netlist_deviation", r.circuit_deviation},
            {"n_full_ancillas", r.classification.n_ancillas()},
            {"counts",
             {{"beam_splitters", r.counts.beam_splitters},
              {"phase_shifters", r.counts.phase_shifters},
              {"squeezers", r.counts.squeezers}}},
            {"mesh_counts",
             {{"beam_splitters", r.mesh_counts.beam_splitters}, {"phase_shifters", r.mesh_counts.phase_shifters}}},
            {"singular_stage_elements", r.singular_stage_elements},
            {"bounds", {{"max_bs", bounds.max_bs}, {"max_ps", bounds.max_ps}, {"max_d", bounds.max_d}}},
            {"singular_values", std::move(singulars)},
            {"classification", std::move(modes)}};
}

json params_to_json(const analytic::Params2x2 &p) {
    return {{"phi11", p.phi11},   {"phi21", p.phi21},   {"vartheta", p.vartheta}, {"xi1", p.xi1},
            {"xi2", p.xi2},       {"theta1", p.theta1}, {"theta2", p.theta2},     {"sigma1", p.sigma1},
            {"sigma2", p.sigma2}, {"alpha", p.alpha},   {"beta", p.beta},         {"gamma", p.gamma},
            {"alpha1", p.alpha1}, {"alpha2", p.alpha2}, {"beta1", p.beta1},       {"beta2", p.beta2}};
}

apps::RankOnePovm povm_from_json(const json &j, double tol) {
    check_schema(j);
    const std::size_t dim = count_field(j, "dim");
    if (dim == 0) {
        throw ParseError("\"dim\" must be positive");
    }
    if (j.contains("vectors")) {
        const json &vectors = j["vectors"];
        if (!vectors.is_array() || vectors.empty()) {
            throw ParseError("\"vectors\" must be a non-empty array");
        }
        apps::RankOnePovm p;
        p.dim = dim;
        for (const auto &v : vectors) {
            ComplexVector phi = complex_vector_from_json(v);
            if (static_cast<std::size_t>(phi.size()) != dim) {
                throw ParseError("POVM vector length differs from \"dim\"");
            }
            p.vectors.push_back(std::move(phi));
        }
        return p;
    }
    if (j.contains("effects")) {
        const json &effects = j["effects"];
        if (!effects.is_array() || effects.empty()) {
            throw ParseError("\"effects\" must be a non-empty array of matrices");
        }
        std::vector<ComplexMatrix> ops;
        for (const auto &e : effects) {
            ComplexMatrix op = matrix_from_json(e);
            if (static_cast<std::size_t>(op.rows()) != dim || op.rows() != op.cols()) {
                throw ParseError("POVM effect shape differs from \"dim\"");
            }
            ops.push_back(std::move(op));
        }
        return apps::povm_from_effects(ops, tol);
    }
    throw ParseError("POVM needs either \"vectors\" or \"effects\"");
}

}  // namespace qsynth::io
