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

#include <iostream>

#include "CLI11.hpp"
#include "qsynth_cli/commands.hpp"

using namespace qsynth::cli;

int main(int argc, char **argv) {
    CLI::App app{"qsynth: compile complex matrices into optical element netlists"};
    app.require_subcommand(1);
    // Global options may also follow the subcommand.
    app.fallthrough();

    Config config;
    std::string format = "json";
    app.add_option("--tol", config.tol, "Verification tolerance")->capture_default_str();
    app.add_option("--eps-sigma", config.eps_sigma, "Threshold for treating a singular value as 1")
        ->capture_default_str();
    app.add_option("--seed", config.seed, "Seed for randomized checks");
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json"}))->capture_default_str();
    std::string mesh = "reck";
    app.add_option("--mesh", mesh, "Unitary mesh scheme")->check(CLI::IsMember({"reck"}))->capture_default_str();

    std::optional<Path> input;
    std::optional<Path> out_netlist;
    std::optional<Path> out_report;
    std::optional<Path> out_file;
    SimulateOptions sim_options;
    std::size_t trials = 100;

    auto *synth = app.add_subcommand("synth", "Synthesize a netlist for a matrix file");
    synth->add_option("matrix", input, "Matrix JSON file")->required();
    synth->add_option("--out-netlist", out_netlist, "Write the netlist here");
    synth->add_option("--out-report", out_report, "Write the verification report here");

    auto *simulate = app.add_subcommand("simulate", "Run a Fock-state or Gaussian-moment simulation of a netlist");
    simulate->add_option("netlist", input, "Netlist JSON file")->required();
    auto *fock_input = simulate->add_option("--input", sim_options.input, "Input photon counts, e.g. 1,1,0");
    simulate->add_option("--predicate", sim_options.predicate,
                         R"(Postselection as JSON {"min": [...], "max": [...]} or @file)");
    auto *coherent = simulate->add_option("--coherent", sim_options.coherent,
                                          "Coherent amplitudes as JSON [[re, im], ...]; switches to moments mode");
    fock_input->excludes(coherent);
    coherent->excludes(fock_input);

    auto *naimark = app.add_subcommand("naimark", "Build a unitary dilation of a rank-one POVM");
    naimark->add_option("povm", input, "POVM JSON file")->required();
    naimark->add_option("--out", out_file, "Write the result here");

    auto *analytic = app.add_subcommand("analytic2x2", "Closed-form parameters and netlist for a 2x2 matrix");
    analytic->add_option("matrix", input, "Matrix JSON file")->required();
    analytic->add_option("--out", out_file, "Write the result here");

    auto *cz = app.add_subcommand("cz", "Synthesize and check the postselected CZ gate");
    cz->add_option("--out", out_file, "Write the result here");

    auto *selftest = app.add_subcommand("selftest", "Synthesize random matrices and verify them");
    selftest->add_option("--trials", trials, "Number of random matrices")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitParse;
    }

    if (*synth) {
        return cmd_synth(*input, out_netlist, out_report, config, std::cout, std::cerr);
    }
    if (*simulate) {
        if (sim_options.input.empty() && !sim_options.coherent) {
            std::cerr << "simulate: one of --input or --coherent is required\n";
            return kExitParse;
        }
        return cmd_simulate(*input, sim_options, config, std::cout, std::cerr);
    }
    if (*naimark) {
        return cmd_naimark(*input, out_file, config, std::cout, std::cerr);
    }
    if (*analytic) {
        return cmd_analytic2x2(*input, out_file, config, std::cout, std::cerr);
    }
    if (*cz) {
        return cmd_cz(out_file, config, std::cout, std::cerr);
    }
    return cmd_selftest(trials, config, std::cout, std::cerr);
}
