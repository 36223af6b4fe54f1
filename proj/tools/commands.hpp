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

#pragma once

// Command bodies for relsvet_cli. Each returns a JSON document, a human
// rendering and an exit status; argument parsing lives in relsvet_cli.cpp.

#include "relsvet/relsvet.hpp"

#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>

namespace relsvet::cli {

enum ExitStatus : int { kOk = 0, kValidation = 2, kInfeasible = 3, kMismatch = 4 };

struct CommandOutcome {
    ojson doc;
    std::string text;
    int exit = kOk;
};

inline int exit_status_for(ErrorKind k) {
    switch (k) {
    case ErrorKind::InfeasibleConstraints:
    case ErrorKind::BudgetExceeded: return kInfeasible;
    case ErrorKind::CrossCheckMismatch: return kMismatch;
    default: return kValidation;
    }
}

/// Runs a command, turning library errors into an error document.
inline CommandOutcome guarded(const std::function<CommandOutcome()> &body) {
    try {
        return body();
    } catch (const Error &e) {
        CommandOutcome out;
        out.doc = ojson{{"error", to_string(e.kind())}, {"message", e.what()}};
        out.text = std::string("error: ") + e.what() + "\n";
        out.exit = exit_status_for(e.kind());
        return out;
    }
}

inline std::string fixed4(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

inline std::string full(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline PairIndeterminismRule parse_pair_rule(const std::string &s) {
    if (s == "all") return PairIndeterminismRule::AllOutcomes;
    if (s == "min") return PairIndeterminismRule::MinOverOutcomes;
    if (s == "plusplus") return PairIndeterminismRule::PlusPlusOnly;
    throw Error(ErrorKind::DomainError, "unknown pair rule '" + s + "' (expected all, min or plusplus)");
}

inline CommandOutcome cmd_metrics(const std::string &path, const std::string &pair_rule = "all") {
    const auto rule = parse_pair_rule(pair_rule);
    const Behavior b = load_behavior(path);
    const auto sig = signaling_degrees(b);
    const auto ind = indeterminism_degrees(b, rule);
    const auto comp = complementarity_check(b, rule);
    CommandOutcome out;
    out.doc = ojson{{"signaling", to_json(sig)},
                    {"indeterminism", to_json(ind)},
                    {"pair_rule", pair_rule},
                    {"complementarity", to_json(comp)},
                    {"svetlichny", svetlichny_value(b)}};
    std::ostringstream t;
    t << "signaling\n";
    for (const auto d : kAllDirections) t << "  " << d.name() << "  " << fixed4(sig.of(d)) << "\n";
    t << "  overall S = " << fixed4(sig.overall) << "\n";
    t << "indeterminism (pair rule " << pair_rule << ")\n";
    t << "  pairs 23/13/12   " << fixed4(ind.pair[0]) << " " << fixed4(ind.pair[1]) << " " << fixed4(ind.pair[2]) << "\n";
    t << "  singles 1/2/3    " << fixed4(ind.single[0]) << " " << fixed4(ind.single[1]) << " " << fixed4(ind.single[2])
      << "\n";
    t << "  overall I = " << fixed4(ind.overall) << "\n";
    t << "complementarity I >= min{S, (1-S)/2}: " << (comp.holds ? "holds" : "violated") << "\n";
    t << "Svetlichny value " << fixed4(svetlichny_value(b)) << "\n";
    out.text = t.str();
    return out;
}

inline CommandOutcome cmd_bound(double I, double S, const std::string &scenario) {
    const Scenario sc = parse_scenario(scenario);
    const double v = relaxed_bound(I, S, sc);
    const Regime r = regime_of(I, S, sc);
    CommandOutcome out;
    out.doc = ojson{{"I", I}, {"S", S}, {"scenario", scenario}, {"regime", r.name()}, {"bound", v}};
    out.text = "bound(" + fixed4(I) + ", " + fixed4(S) + ", " + scenario + ") = " + fixed4(v) + "  [" + r.name() + "]\n";
    return out;
}

inline CommandOutcome cmd_requirements(std::optional<std::string> scenario, std::optional<double> violation) {
    const double V = violation.value_or(ghz_violation());
    CommandOutcome out;
    ojson rows = ojson::array();
    std::ostringstream t;
    t << "violation V = " << fixed4(V) << "\n";
    t << "scenario      branch  I_V      S_V      bits     local    in band\n";
    for (const auto sc : kAllScenarios) {
        if (scenario && scenario_name(sc) != *scenario) continue;
        for (const auto &g : requirements_for(V, sc)) {
            ojson row = to_json(g);
            const auto pub = violation ? std::nullopt : published_requirement(sc, g.relaxation.branch);
            char line[160];
            std::snprintf(line, sizeof line, "%-13s %-7d %-8s %-8s %-8s %-8s %s\n", std::string(scenario_name(sc)).c_str(),
                          g.relaxation.branch, fixed4(g.relaxation.I_V).c_str(), fixed4(g.relaxation.S_V).c_str(),
                          fixed4(g.signaling_bits).c_str(), fixed4(g.local_bits).c_str(),
                          g.relaxation.within_band ? "yes" : "no");
            t << line;
            if (pub) {
                ojson p{{"I_V", pub->I_V}, {"S_V", pub->S_V}};
                ojson delta{{"I_V", g.relaxation.I_V - pub->I_V}, {"S_V", g.relaxation.S_V - pub->S_V}};
                std::string ptxt = "  printed      I_V " + fixed4(pub->I_V) + " (delta " + fixed4(g.relaxation.I_V - pub->I_V) +
                                   ")  S_V " + fixed4(pub->S_V) + " (delta " + fixed4(g.relaxation.S_V - pub->S_V) + ")";
                if (pub->signaling_bits) {
                    p["signaling_bits"] = *pub->signaling_bits;
                    delta["signaling_bits"] = g.signaling_bits - *pub->signaling_bits;
                    ptxt += "  bits " + fixed4(*pub->signaling_bits) + " (delta " +
                            fixed4(g.signaling_bits - *pub->signaling_bits) + ")";
                }
                if (pub->local_bits) {
                    p["local_bits"] = *pub->local_bits;
                    delta["local_bits"] = g.local_bits - *pub->local_bits;
                    ptxt += "  local " + fixed4(*pub->local_bits) + " (delta " + fixed4(g.local_bits - *pub->local_bits) + ")";
                }
                row["printed"] = p;
                row["delta"] = delta;
                t << ptxt << "\n";
            }
            rows.push_back(row);
        }
    }
    if (rows.empty()) throw Error(ErrorKind::DomainError, "unknown scenario '" + scenario.value_or("") + "'");
    out.doc = ojson{{"violation", V}, {"rows", rows}};
    out.text = t.str();
    return out;
}

/// CSV with I, X (simultaneous), Y (send), Z (receive) at 17 significant digits.
inline CommandOutcome cmd_figure1(double step, const std::optional<std::string> &out_path) {
    const auto rows = figure1_curve(step);
    std::ostringstream csv;
    csv << "I,X,Y,Z\n";
    for (const auto &r : rows) csv << full(r.I) << "," << full(r.X) << "," << full(r.Y) << "," << full(r.Z) << "\n";
    CommandOutcome out;
    out.doc = ojson{{"step", step}, {"rows", rows.size()}};
    if (out_path) {
        std::ofstream f(*out_path);
        if (!f) throw Error(ErrorKind::DomainError, "cannot write '" + *out_path + "'");
        f << csv.str();
        out.doc["out"] = *out_path;
        out.text = "wrote " + std::to_string(rows.size()) + " rows to " + *out_path + "\n";
    } else {
        out.text = csv.str();
    }
    return out;
}

inline CommandOutcome cmd_oracle(double I, double S, const std::string &scenario, const OracleConfig &cfg,
                                 bool timing) {
    const OracleReport r = minimize_j(I, S, parse_scenario(scenario), cfg);
    CommandOutcome out;
    out.doc = to_json(r, timing);
    std::ostringstream t;
    t << "regime " << r.regime.name() << ", mode " << mode_name(r.mode);
    if (r.mode == OracleMode::GridSearch) t << " (step " << r.grid_step << ")";
    t << "\n";
    t << "J_min = " << fixed4(r.J_min) << "  bound 8 - 2J = " << fixed4(bound_from_oracle(r)) << "\n";
    t << "closed form J = " << fixed4(r.closed_form_J) << "  bound = " << fixed4(r.closed_form_bound) << "  -> "
      << (r.matches_closed_form ? "match" : "MISMATCH") << "\n";
    t << "attaining matrix (rows = settings 1..8, columns m1..m6)\n";
    for (const auto &row : r.attaining) {
        t << " ";
        for (const double v : row) t << " " << fixed4(v);
        t << "\n";
    }
    t << "nodes " << r.nodes << " in " << r.work_units << " work units";
    if (timing) t << ", " << fixed4(r.wall_seconds) << " s";
    t << "\n";
    out.text = t.str();
    // Disagreement with the published closed form is reported, not hidden.
    if (!r.matches_closed_form && r.mode == OracleMode::EndpointEnumeration) out.exit = kMismatch;
    return out;
}

inline CommandOutcome cmd_ghz_maximize(double resolution) {
    const auto opt = maximize_svetlichny(resolution, true);
    CommandOutcome out;
    out.doc = ojson{{"angles", to_json(opt.angles)}, {"value", opt.value}, {"grid_value", opt.grid_value},
                    {"grid_points", opt.grid_points}, {"sweeps", opt.sweeps}, {"target", 4.0 * std::sqrt(2.0)}};
    std::ostringstream t;
    t.precision(8);
    t << "max Svetlichny value " << std::fixed << opt.value << " (4 sqrt 2 = " << 4.0 * std::sqrt(2.0) << ")\n";
    t << "phi  " << opt.angles.phi[0] << " " << opt.angles.phi[1] << " " << opt.angles.phi[2] << "\n";
    t << "phi' " << opt.angles.phi_prime[0] << " " << opt.angles.phi_prime[1] << " " << opt.angles.phi_prime[2] << "\n";
    out.text = t.str();
    return out;
}

inline CommandOutcome cmd_ghz_emit(const std::string &path) {
    const EquatorialAngles a = svetlichny_optimal_angles();
    const Behavior b = ghz_behavior(a);
    validate_behavior(b);
    save_behavior(b, path);
    CommandOutcome out;
    out.doc = ojson{{"angles", to_json(a)}, {"svetlichny", svetlichny_value(b)}, {"out", path}};
    out.text = "wrote GHZ behavior (Svetlichny value " + fixed4(svetlichny_value(b)) + ") to " + path + "\n";
    return out;
}

}  // namespace relsvet::cli
