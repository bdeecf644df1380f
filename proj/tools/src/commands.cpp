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

#include "qsynth_cli/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include "qsynth/apps.hpp"
#include "qsynth/closed_form.hpp"
#include "qsynth/errors.hpp"
#include "qsynth/mesh.hpp"
#include "qsynth/sim.hpp"
#include "qsynth/synth.hpp"
#include "qsynth_cli/json_io.hpp"

namespace qsynth::cli {

namespace {

using io::json;

void check_config(const Config &config) {
    if (!(config.tol > 0.0) || !(config.eps_sigma > 0.0)) {
        throw std::invalid_argument("--tol and --eps-sigma must be positive");
    }
}

SynthesisConfig synthesis_config(const Config &config) {
    SynthesisConfig cfg;
    cfg.tol = config.tol;
    cfg.eps_sigma = config.eps_sigma;
    return cfg;
}

void emit(const json &doc, const std::optional<Path> &file, std::ostream &out) {
    if (file) {
        io::write_json_file(*file, doc);
    } else {
        out << doc.dump(2) << '\n';
    }
}

int guarded(std::ostream &err, const std::function<int()> &body) {
    try {
        return body();
    } catch (const io::ParseError &e) {
        err << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const json::exception &e) {
        err << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const VerificationError &e) {
        err << "verification failed: " << e.what() << '\n';
        return kExitVerify;
    } catch (const SvdError &e) {
        err << "verification failed: " << e.what() << '\n';
        return kExitVerify;
    } catch (const NotPassiveError &e) {
        err << e.what() << '\n';
        return kExitDomain;
    } catch (const std::domain_error &e) {
        err << "domain error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::invalid_argument &e) {
        err << "domain error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::out_of_range &e) {
        err << "domain error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

ComplexVector random_disk_vector(std::mt19937_64 &rng, Eigen::Index size, double radius) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    ComplexVector v(size);
    for (Eigen::Index k = 0; k < size; ++k) {
        v(k) = std::polar(radius * std::sqrt(unit(rng)), 2.0 * std::numbers::pi * unit(rng));
    }
    return v;
}

struct MeanFieldCheck {
    ComplexVector alpha;
    ComplexVector expected;
    ComplexVector actual;
    double deviation = 0.0;
};

// Coherent amplitudes on the m nominal inputs, vacuum everywhere else.
MeanFieldCheck mean_field_check(const ComplexMatrix &t, const SynthesisResult &r, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    MeanFieldCheck check;
    check.alpha = random_disk_vector(rng, t.cols(), 1.0);
    check.expected = t * check.alpha;
    const auto moments = sim::evolve_moments(
        r.s_total, sim::coherent_moments(check.alpha, r.classification.n_modes));
    check.actual = moments.mean.head(t.rows());
    check.deviation = (check.actual - check.expected).cwiseAbs().maxCoeff();
    return check;
}

sim::Occupation parse_occupation(const std::string &spec, std::size_t n_modes) {
    sim::Occupation occ;
    std::stringstream ss(spec);
    std::string token;
    while (std::getline(ss, token, ',')) {
        const auto first = token.find_first_not_of(" \t");
        const auto last = token.find_last_not_of(" \t");
        if (first == std::string::npos) {
            throw io::ParseError("empty entry in occupation list \"" + spec + "\"");
        }
        int value = 0;
        const char *begin = token.data() + first;
        const char *end = token.data() + last + 1;
        const auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc{} || ptr != end || value < 0) {
            throw io::ParseError("invalid photon count \"" + token + "\"");
        }
        occ.push_back(value);
    }
    if (occ.empty()) {
        throw io::ParseError("empty occupation list");
    }
    if (occ.size() > n_modes) {
        throw io::ParseError("occupation lists " + std::to_string(occ.size()) + " modes but the netlist has " +
                             std::to_string(n_modes));
    }
    occ.resize(n_modes, 0);
    return occ;
}

json parse_inline_or_file(const std::string &spec) {
    if (!spec.empty() && spec.front() == '@') {
        return io::read_json_file(spec.substr(1));
    }
    try {
        return json::parse(spec);
    } catch (const json::exception &e) {
        throw io::ParseError(std::string("invalid JSON argument: ") + e.what());
    }
}

sim::OccupationPredicate parse_predicate(const std::string &spec, std::size_t n_modes) {
    const json j = parse_inline_or_file(spec);
    if (!j.is_object()) {
        throw io::ParseError("predicate must be an object with \"min\" and/or \"max\"");
    }
    constexpr int kUnbounded = 1 << 20;
    sim::Occupation min(n_modes, 0);
    sim::Occupation max(n_modes, kUnbounded);
    for (const auto &[key, target] : {std::pair{"min", &min}, std::pair{"max", &max}}) {
        if (!j.contains(key)) {
            continue;
        }
        const json &list = j[key];
        if (!list.is_array() || list.size() > n_modes) {
            throw io::ParseError(std::string("predicate \"") + key + "\" must be an array of at most n_modes counts");
        }
        for (std::size_t k = 0; k < list.size(); ++k) {
            if (!list[k].is_number_integer() || list[k].get<int>() < 0) {
                throw io::ParseError(std::string("predicate \"") + key + "\" entries must be non-negative integers");
            }
            (*target)[k] = list[k].get<int>();
        }
    }
    return sim::mode_bounds_predicate(std::move(min), std::move(max));
}

}  // namespace

int cmd_synth(const Path &matrix_file, const std::optional<Path> &out_netlist, const std::optional<Path> &out_report,
              const Config &config, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        check_config(config);
        const ComplexMatrix t = io::matrix_from_json(io::read_json_file(matrix_file));
        if (t.size() == 0) {
            throw io::ParseError("matrix must have at least one row and one column");
        }
        const SynthesisResult r = synthesize(t, synthesis_config(config));

        const MeanFieldCheck mf = mean_field_check(t, r, config.seed.value_or(0));
        json report = io::report_to_json(r);
        report["mean_field"] = {{"alpha", io::complex_vector_to_json(mf.alpha)},
                                {"expected", io::complex_vector_to_json(mf.expected)},
                                {"deviation", mf.deviation}};
        const json netlist = io::circuit_to_json(r.circuit);

        if (out_netlist) {
            io::write_json_file(*out_netlist, netlist);
        }
        if (out_report) {
            io::write_json_file(*out_report, report);
        }
        if (!out_netlist && !out_report) {
            out << json{{"schema", io::kSchema}, {"netlist", netlist}, {"report", report}}.dump(2) << '\n';
        }
        if (!(mf.deviation < config.tol)) {
            err << "verification failed: mean-field deviation " << mf.deviation << '\n';
            return kExitVerify;
        }
        return kExitOk;
    });
}

int cmd_simulate(const Path &netlist_file, const SimulateOptions &options, const Config &config, std::ostream &out,
                 std::ostream &err) {
    return guarded(err, [&] {
        check_config(config);
        const Circuit c = io::circuit_from_json(io::read_json_file(netlist_file));
        const ComplexMatrix s = circuit_smatrix(c);

        if (options.coherent) {
            const ComplexVector alpha = io::complex_vector_from_json(parse_inline_or_file(*options.coherent));
            if (static_cast<std::size_t>(alpha.size()) > c.n_modes) {
                throw io::ParseError("more coherent amplitudes than netlist modes");
            }
            const auto g = sim::evolve_moments(s, sim::coherent_moments(alpha, c.n_modes));
            json means = json::array();
            for (std::size_t k = 0; k < c.n_modes; ++k) {
                const Complex z = g.mean(static_cast<Eigen::Index>(k));
                means.push_back({{"mode", k}, {"re", z.real()}, {"im", z.imag()}});
            }
            out << json{{"schema", io::kSchema},
                        {"mode", "moments"},
                        {"means", std::move(means)},
                        {"physicality_residual", sim::physicality_residual(g)}}
                       .dump(2)
                << '\n';
            return kExitOk;
        }

        const ComplexMatrix a = sim::passive_block(s, config.tol);
        const sim::Occupation input = parse_occupation(options.input, c.n_modes);
        const sim::FockState state = sim::fock_evolve(a, input, config.tol);
        const auto accept = options.predicate ? parse_predicate(*options.predicate, c.n_modes)
                                              : sim::OccupationPredicate([](const sim::Occupation &) { return true; });

        json outcomes = json::array();
        double success = 0.0;
        for (const auto &[occ, amp] : state.amplitudes) {
            if (!accept(occ)) {
                continue;
            }
            success += std::norm(amp);
            outcomes.push_back({{"occupation", occ}, {"re", amp.real()}, {"im", amp.imag()}, {"prob", std::norm(amp)}});
        }
        out << json{{"schema", io::kSchema},
                    {"mode", "fock"},
                    {"input", input},
                    {"success_prob", success},
                    {"outcomes", std::move(outcomes)}}
                   .dump(2)
            << '\n';
        return kExitOk;
    });
}

int cmd_naimark(const Path &povm_file, const std::optional<Path> &out_file, const Config &config, std::ostream &out,
                std::ostream &err) {
    return guarded(err, [&] {
        check_config(config);
        const apps::RankOnePovm povm = io::povm_from_json(io::read_json_file(povm_file), config.tol);
        const apps::NaimarkExtension ext = apps::naimark_extension(povm, config.tol);

        const auto m = static_cast<std::size_t>(ext.unitary.rows());
        Circuit c;
        c.n_modes = m;
        c.n_nominal = m;
        for (std::size_t k = povm.dim; k < m; ++k) {
            c.ancilla_outputs.push_back(k);
        }
        c.elements = reck_decompose(ext.unitary, config.tol);
        const double mesh_dev = mesh_verify(c.elements, ext.unitary);

        emit(
            {{"schema", io::kSchema},
             {"extension", io::matrix_to_json(ext.unitary)},
             {"ancilla_outputs", ext.ancilla_outputs},
             {"singular_values", ext.singulars},
             {"unitarity_deviation", unitarity_deviation(ext.unitary)},
             {"mesh_deviation", mesh_dev},
             {"netlist", io::circuit_to_json(c)}},
            out_file, out);
        if (!(mesh_dev < config.tol)) {
            err << "verification failed: mesh deviation " << mesh_dev << '\n';
            return kExitVerify;
        }
        return kExitOk;
    });
}

int cmd_analytic2x2(const Path &matrix_file, const std::optional<Path> &out_file, const Config &config,
                    std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        check_config(config);
        const ComplexMatrix t = io::matrix_from_json(io::read_json_file(matrix_file));
        if (t.rows() != 2 || t.cols() != 2) {
            throw std::invalid_argument("analytic2x2 needs a 2x2 matrix, got " + std::to_string(t.rows()) + "x" +
                                        std::to_string(t.cols()));
        }
        const analytic::Params2x2 p = analytic::analytic_params(t);
        const SynthesisResult r = analytic::analytic_circuit(p, synthesis_config(config));
        const double deviation = max_abs_diff(upper_left_block(r.s_total, 2, 2), t);

        json report = io::report_to_json(r);
        report["block_deviation"] = deviation;
        emit({{"schema", io::kSchema},
              {"params", io::params_to_json(p)},
              {"netlist", io::circuit_to_json(r.circuit)},
              {"report", std::move(report)}},
             out_file, out);
        if (!(deviation < config.tol)) {
            err << "verification failed: analytic reconstruction deviation " << deviation << '\n';
            return kExitVerify;
        }
        return kExitOk;
    });
}

int cmd_cz(const std::optional<Path> &out_file, const Config &config, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        check_config(config);
        const SynthesisResult r = synthesize(apps::cz_gate_target(), synthesis_config(config));
        const apps::CzReport cz = apps::evaluate_cz(r, config.tol);

        json amplitudes = json::array();
        for (const auto &a : cz.amplitudes) {
            amplitudes.push_back(json::array({a.real(), a.imag()}));
        }
        json doc = {{"schema", io::kSchema},
                    {"inputs", {"HH", "HV", "VH", "VV"}},
                    {"passive", true},
                    {"passed", cz.passed},
                    {"k", cz.k},
                    {"success_prob", cz.success_prob},
                    {"amplitudes", std::move(amplitudes)},
                    {"sign_pattern", cz.sign_pattern},
                    {"n_full_ancillas", cz.n_full_ancillas},
                    {"singular_values", cz.singular_values},
                    {"netlist", io::circuit_to_json(r.circuit)}};
        if (!cz.passed) {
            doc["failure"] = cz.failure;
        }
        emit(doc, out_file, out);
        if (!cz.passed) {
            err << "verification failed: " << cz.failure << '\n';
            return kExitVerify;
        }
        return kExitOk;
    });
}

int cmd_selftest(std::size_t trials, const Config &config, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        check_config(config);
        const std::uint64_t seed = config.seed.value_or(0);
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> dim(1, 6);
        std::uniform_real_distribution<double> scale(0.3, 2.5);

        std::size_t failures = 0;
        double worst_quasi = 0.0;
        double worst_block = 0.0;
        double worst_mean = 0.0;
        for (std::size_t trial = 0; trial < trials; ++trial) {
            const int n = dim(rng);
            const int m = dim(rng);
            const double radius = scale(rng);
            ComplexMatrix t(n, m);
            for (int r = 0; r < n; ++r) {
                t.row(r) = random_disk_vector(rng, m, radius).transpose();
            }
            try {
                const SynthesisResult res = synthesize(t, synthesis_config(config));
                const MeanFieldCheck mf = mean_field_check(t, res, rng());
                worst_quasi = std::max(worst_quasi, res.quasiunitarity_deviation);
                worst_block = std::max(worst_block, res.block_deviation);
                worst_mean = std::max(worst_mean, mf.deviation);
                if (!(mf.deviation < config.tol)) {
                    ++failures;
                }
            } catch (const VerificationError &e) {
                err << "trial " << trial << ": " << e.what() << '\n';
                ++failures;
            }
        }
        out << json{{"schema", io::kSchema},
                    {"seed", seed},
                    {"trials", trials},
                    {"failures", failures},
                    {"max_quasiunitarity_deviation", worst_quasi},
                    {"max_block_deviation", worst_block},
                    {"max_mean_field_deviation", worst_mean}}
                   .dump(2)
            << '\n';
        return failures == 0 ? kExitOk : kExitVerify;
    });
}

}  // namespace qsynth::cli
