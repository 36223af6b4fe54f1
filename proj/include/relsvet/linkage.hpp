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

/// Which entries of an assignment matrix are tied together by a signaling
/// degree. A single-party marginal of party k is shared by the four settings
/// with the same x_k, and only the other parties' choices can move it (PairToOne
/// k). A pair marginal is shared by the two settings that agree on that pair's
/// choices, and only the excluded party can move it (OneToPair).

#include "relsvet/model.hpp"
#include "relsvet/scenario.hpp"
#include "relsvet/svetlichny.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <vector>

namespace relsvet {

struct LinkageGroup {
    Direction direction;
    int marginal = 0;              // 0-based column of the assignment matrix
    std::vector<SettingLabel> members;

    std::string name() const {
        std::string s = "m" + std::to_string(marginal + 1) + "@{";
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(members[i].index());
        }
        return s + "}";
    }
};

/// The excluded party of each pair marginal: m1 is pair (2,3), m2 is (1,2),
/// m3 is (1,3).
constexpr int excluded_party(int pair_marginal) { return pair_marginal == 0 ? 1 : pair_marginal == 1 ? 3 : 2; }

/// All 18 groups: 6 single-party groups (party 1..3, x_k = 0 then 1), then 12
/// pair groups (m1, m2, m3; the pair's choices in binary order).
inline const std::vector<LinkageGroup> &linkage_groups() {
    static const std::vector<LinkageGroup> groups = [] {
        std::vector<LinkageGroup> out;
        for (int party = 1; party <= 3; ++party) {
            for (int v = 0; v <= 1; ++v) {
                LinkageGroup g{{Direction::Kind::PairToOne, party}, 2 + party, {}};
                for (const auto s : all_settings()) {
                    if (s.context()[party] == v) g.members.push_back(s);
                }
                out.push_back(g);
            }
        }
        for (int j = 0; j < 3; ++j) {
            const int ex = excluded_party(j);
            const auto [a, b] = std::array<int, 2>{ex == 1 ? 2 : 1, ex == 3 ? 2 : 3};
            for (int va = 0; va <= 1; ++va) {
                for (int vb = 0; vb <= 1; ++vb) {
                    LinkageGroup g{{Direction::Kind::OneToPair, ex}, j, {}};
                    for (const auto s : all_settings()) {
                        if (s.context()[a] == va && s.context()[b] == vb) g.members.push_back(s);
                    }
                    out.push_back(g);
                }
            }
        }
        return out;
    }();
    return groups;
}

/// Index into linkage_groups() of the group holding entry (setting, marginal).
inline int group_of(SettingLabel s, int marginal) {
    static const auto table = [] {
        std::array<std::array<int, kNumMarginals>, kNumSettings> t{};
        const auto &gs = linkage_groups();
        for (std::size_t g = 0; g < gs.size(); ++g) {
            for (const auto m : gs[g].members) t[m.slot()][gs[g].marginal] = static_cast<int>(g);
        }
        return t;
    }();
    return table[s.slot()][marginal];
}

inline double group_shift(const AssignmentMatrix &a, const LinkageGroup &g) {
    double lo = 1e300, hi = -1e300;
    for (const auto s : g.members) {
        lo = std::min(lo, a[s.slot()][g.marginal]);
        hi = std::max(hi, a[s.slot()][g.marginal]);
    }
    return hi - lo;
}

struct LinkageConsumption {
    std::vector<double> group_shift;            // aligned with linkage_groups()
    std::array<double, 6> direction_shift{};    // aligned with kAllDirections
};

/// Smallest signaling budget per group and per direction that an assignment
/// needs.
inline LinkageConsumption linkage_consumption(const AssignmentMatrix &a) {
    LinkageConsumption c;
    const auto &gs = linkage_groups();
    for (const auto &g : gs) {
        const double shift = group_shift(a, g);
        c.group_shift.push_back(shift);
        for (std::size_t d = 0; d < kAllDirections.size(); ++d) {
            if (kAllDirections[d] == g.direction) c.direction_shift[d] = std::max(c.direction_shift[d], shift);
        }
    }
    return c;
}

/// Budget a group may use under a scenario: S when its direction is permitted,
/// 0 otherwise.
inline double group_budget(const LinkageGroup &g, Scenario scenario, double S) {
    return permits(scenario, g.direction) ? S : 0.0;
}

}  // namespace relsvet
