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

// JSON documents for reports. Keys are emitted in a fixed order (ordered_json)
// so identical inputs give byte-identical output.

#include "relsvet/bounds.hpp"
#include "relsvet/linkage.hpp"
#include "relsvet/metrics.hpp"
#include "relsvet/oracle.hpp"
#include "relsvet/quantum.hpp"
#include "relsvet/witness.hpp"

#include <json.hpp>

#include <string>

namespace relsvet {

using ojson = nlohmann::ordered_json;

inline ojson to_json(const SignalingDegrees &d) {
    ojson j;
    for (std::size_t k = 0; k < kAllDirections.size(); ++k) j[kAllDirections[k].name()] = d.of(kAllDirections[k]);
    j["overall"] = d.overall;
    return j;
}

inline ojson to_json(const IndeterminismDegrees &d) {
    ojson j;
    j["pair_23"] = d.pair[0];
    j["pair_13"] = d.pair[1];
    j["pair_12"] = d.pair[2];
    j["single_1"] = d.single[0];
    j["single_2"] = d.single[1];
    j["single_3"] = d.single[2];
    j["overall"] = d.overall;
    return j;
}

inline ojson to_json(const ComplementarityVerdict &v) {
    return ojson{{"indeterminism", v.indeterminism}, {"signaling", v.signaling}, {"holds", v.holds}};
}

inline ojson to_json(const AssignmentMatrix &m) {
    ojson rows = ojson::array();
    for (const auto &r : m) rows.push_back(r);
    return rows;
}

inline ojson to_json(const LinkageConsumption &c) {
    ojson groups = ojson::object();
    const auto &gs = linkage_groups();
    for (std::size_t g = 0; g < gs.size(); ++g) groups[gs[g].name()] = c.group_shift[g];
    ojson dirs = ojson::object();
    for (std::size_t d = 0; d < kAllDirections.size(); ++d) dirs[kAllDirections[d].name()] = c.direction_shift[d];
    return ojson{{"by_direction", dirs}, {"by_group", groups}};
}

inline ojson to_json(const MinimalRelaxation &r) {
    return ojson{{"scenario", scenario_name(r.scenario)},
                 {"branch", r.branch},
                 {"I_V", r.I_V},
                 {"S_V", r.S_V},
                 {"band_lo", r.band_lo},
                 {"band_hi", r.band_hi},
                 {"band_hi_inclusive", r.band_hi_inclusive},
                 {"within_band", r.within_band}};
}

inline ojson to_json(const GhzRequirement &g) {
    ojson j = to_json(g.relaxation);
    j["signaling_bits"] = g.signaling_bits;
    j["local_bits"] = g.local_bits;
    return j;
}

inline ojson to_json(const OracleReport &r, bool include_timing = false) {
    ojson j;
    j["I"] = r.I;
    j["S"] = r.S;
    j["scenario"] = scenario_name(r.scenario);
    j["regime"] = r.regime.name();
    j["mode"] = mode_name(r.mode);
    if (r.mode == OracleMode::GridSearch) j["grid_step"] = r.grid_step;
    j["J_min"] = r.J_min;
    j["bound"] = bound_from_oracle(r);
    j["closed_form_J"] = r.closed_form_J;
    j["closed_form_bound"] = r.closed_form_bound;
    j["matches_closed_form"] = r.matches_closed_form;
    j["tolerance"] = r.tolerance;
    j["attaining"] = to_json(r.attaining);
    j["c"] = r.c;
    j["consumption"] = to_json(r.consumption);
    j["nodes"] = r.nodes;
    j["work_units"] = r.work_units;
    if (include_timing) j["wall_seconds"] = r.wall_seconds;
    return j;
}

inline ojson to_json(const EquatorialAngles &a) { return ojson{{"phi", a.phi}, {"phi_prime", a.phi_prime}}; }

inline ojson to_json(const WitnessReport &r) {
    ojson issues = ojson::array();
    for (const auto &e : r.outside_subintervals) {
        issues.push_back(ojson{{"setting", e.setting}, {"marginal", e.marginal}, {"value", e.value}});
    }
    return ojson{{"membership_ok", r.membership_ok}, {"outside_subintervals", issues}, {"J", r.j_value},
                 {"expected_J", r.expected_J},        {"J_match", r.j_match},           {"consumption", to_json(r.consumption)}};
}

}  // namespace relsvet
