// Copyright 2026 The relsvet Authors
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

#include "commands.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <numbers>

int main(int argc, char **argv) {
    using namespace relsvet;
    using namespace relsvet::cli;

    CLI::App app{"Relaxed Svetlichny bounds: metrics, closed forms, exact minimization and GHZ requirements"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json = false;
    app.add_flag("--json", json, "print the machine-readable document instead of the text rendering");

    auto *metrics = app.add_subcommand("metrics", "signaling and indeterminism degrees of a behavior file");
    std::string behavior_file;
    std::string pair_rule = "all";
    metrics->add_option("file", behavior_file, "behavior JSON file")->required();
    metrics->add_option("--pair-rule", pair_rule, "pair indeterminism reading: all, min or plusplus");

    auto *bound = app.add_subcommand("bound", "closed-form relaxed bound");
    double I = 0.0, S = 0.0;
    std::string scenario = "simultaneous";
    bound->add_option("-I,--indeterminism", I)->required();
    bound->add_option("-S,--signaling", S)->required();
    bound->add_option("--scenario", scenario, "simultaneous, send or receive");

    auto *req = app.add_subcommand("requirements", "minimal relaxation and communication to simulate GHZ");
    std::string req_scenario;
    double violation = 0.0;
    req->add_flag("--all", "every scenario (default)");
    auto *req_sc = req->add_option("--scenario", req_scenario);
    auto *req_v = req->add_option("--violation", violation, "violation to absorb (default 4 sqrt 2 - 4)");

    auto *fig = app.add_subcommand("figure1", "bound curves against indeterminism below the gap, as CSV");
    double fig_step = 0.005;
    std::string fig_out;
    fig->add_option("--step", fig_step);
    auto *fig_out_opt = fig->add_option("--out", fig_out, "write CSV here instead of stdout");

    auto *orc = app.add_subcommand("oracle", "exact minimization of the penalty J for a budget");
    OracleConfig cfg;
    std::string mode = "endpoint";
    bool timing = false;
    orc->add_option("-I,--indeterminism", I)->required();
    orc->add_option("-S,--signaling", S)->required();
    orc->add_option("--scenario", scenario);
    orc->add_option("--mode", mode, "endpoint or grid");
    orc->add_option("--step", cfg.grid_step, "grid step for --mode grid");
    orc->add_option("--threads", cfg.parallel_width);
    orc->add_option("--budget", cfg.node_budget, "node budget");
    orc->add_flag("--timing", timing, "include wall-clock time (output is then not byte-stable)");

    auto *ghz = app.add_subcommand("ghz", "GHZ correlations under equatorial measurements");
    std::string emit_path;
    double resolution = std::numbers::pi / 24.0;
    auto *emit = ghz->add_option("--emit", emit_path, "write the optimal GHZ behavior file");
    auto *maxi = ghz->add_flag("--maximize", "maximize the Svetlichny value over angles");
    ghz->add_option("--resolution", resolution, "angle grid step for --maximize");
    emit->excludes(maxi);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        // --help exits 0; malformed arguments are validation errors.
        return app.exit(e) == 0 ? kOk : kValidation;
    }

    CommandOutcome out;
    if (*metrics) {
        out = guarded([&] { return cmd_metrics(behavior_file, pair_rule); });
    } else if (*bound) {
        out = guarded([&] { return cmd_bound(I, S, scenario); });
    } else if (*req) {
        out = guarded([&] {
            return cmd_requirements(*req_sc ? std::optional<std::string>(req_scenario) : std::nullopt,
                                    *req_v ? std::optional<double>(violation) : std::nullopt);
        });
    } else if (*fig) {
        out = guarded([&] { return cmd_figure1(fig_step, *fig_out_opt ? std::optional<std::string>(fig_out) : std::nullopt); });
    } else if (*orc) {
        out = guarded([&] {
            cfg.mode = parse_mode(mode);
            return cmd_oracle(I, S, scenario, cfg, timing);
        });
    } else if (*ghz) {
        out = guarded([&] {
            if (*emit) return cmd_ghz_emit(emit_path);
            return cmd_ghz_maximize(resolution);
        });
    }

    if (json) {
        std::cout << out.doc.dump(2) << "\n";
    } else {
        (out.exit == kOk || out.exit == kMismatch ? std::cout : std::cerr) << out.text;
    }
    return out.exit;
}
