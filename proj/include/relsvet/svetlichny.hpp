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

/// The Svetlichny functional
///
///   S = <1> + <2> + <3> + <4> + <5> + <6> - <7> - <8>
///
/// (angle brackets: tripartite correlator at a setting label), and the
/// per-hidden-state machinery behind its relaxed bounds: the correlator range
/// left open by the c parameter, and the penalty J with E <= 8 - 2J.

#include "relsvet/model.hpp"

#include <array>
#include <cmath>
#include <string>

namespace relsvet {

/// m[i][j]: marginal j (0-based m1..m6) at setting label i+1.
using AssignmentMatrix = std::array<std::array<double, kNumMarginals>, kNumSettings>;

struct SvetlichnyTerms {
    std::array<int, kNumSettings> coefficients{};
    std::array<double, kNumSettings> values{};  // lambda-averaged correlators
    double total = 0.0;
};

inline SvetlichnyTerms svetlichny_terms(const Behavior &b) {
    SvetlichnyTerms t;
    for (const auto s : all_settings()) {
        t.coefficients[s.slot()] = s.svetlichny_sign();
        t.values[s.slot()] = correlator(b, s.context());
        t.total += s.svetlichny_sign() * t.values[s.slot()];
    }
    return t;
}

inline double svetlichny_value(const Behavior &b) { return svetlichny_terms(b).total; }

/// Gap below +1 of the largest correlator a profile family allows:
/// max over c of the correlator is 1 - 2 * upper_slack(m).
inline double upper_slack(const std::array<double, kNumMarginals> &m) {
    const double d = 1.0 + m[0] + m[1] - m[3] - m[4] - m[5];
    const double a = std::abs(m[0] - m[1]);
    return a + std::abs(d) + std::abs(m[3] + m[4] + m[5] - 2.0 * m[2] - 1.0 - a + std::abs(d));
}

/// Gap above -1 of the smallest correlator: min over c is -1 + 2 * lower_slack(m).
inline double lower_slack(const std::array<double, kNumMarginals> &m) {
    const double alpha = m[1] + m[2] - m[3];
    const double beta = m[1] + m[5] - m[2] - m[4];
    return std::abs(alpha) + std::abs(beta) + std::abs(m[4] + m[5] - m[3] - 2.0 * m[0] + std::abs(alpha) - std::abs(beta));
}

/// Lower and upper correlator over all c compatible with m. The closed
/// absolute-value form is checked against the correlator at both ends of
/// c_range; a disagreement beyond 1e-12 raises CrossCheckMismatch.
inline Interval correlator_bounds(const std::array<double, kNumMarginals> &m) {
    const Interval c = c_range(m);
    const Interval closed{-1.0 + 2.0 * lower_slack(m), 1.0 - 2.0 * upper_slack(m)};
    const double at_lo = correlator(JointProfile{c.lo, m});
    const double at_hi = correlator(JointProfile{c.hi, m});
    if (std::abs(closed.lo - at_lo) > 1e-12 || std::abs(closed.hi - at_hi) > 1e-12) {
        throw Error(ErrorKind::CrossCheckMismatch,
                    "correlator bounds disagree: closed form [" + std::to_string(closed.lo) + ", " +
                        std::to_string(closed.hi) + "], endpoints [" + std::to_string(at_lo) + ", " +
                        std::to_string(at_hi) + "]");
    }
    return closed;
}

/// Penalty of one row of the assignment: upper_slack for labels 1..6,
/// lower_slack for labels 7 and 8.
inline double row_penalty(SettingLabel s, const std::array<double, kNumMarginals> &m) {
    return s.svetlichny_sign() > 0 ? upper_slack(m) : lower_slack(m);
}

inline double j_functional(const AssignmentMatrix &a) {
    double j = 0.0;
    for (const auto s : all_settings()) j += row_penalty(s, a[s.slot()]);
    return j;
}

/// Signed sum of the per-setting correlators of one hidden state.
inline double e_lambda(const AssignmentMatrix &a, const std::array<double, kNumSettings> &c) {
    double e = 0.0;
    for (const auto s : all_settings()) {
        const JointProfile q{c[s.slot()], a[s.slot()]};
        const OutcomeDistribution p = reconstruct_joint_unchecked(q);
        for (int k = 0; k < kNumOutcomes; ++k) {
            if (p[k] < -kProbabilityTolerance) {
                throw Error(ErrorKind::InfeasibleProfile,
                            "setting " + std::to_string(s.index()) + " reconstructs to " + std::to_string(p[k]),
                            ErrorLocation{std::nullopt, s.index(), k});
            }
        }
        e += s.svetlichny_sign() * correlator(q);
    }
    return e;
}

/// Marginal profile matrix of one hidden state.
inline AssignmentMatrix assignment_of(const HiddenState &h) {
    AssignmentMatrix a{};
    for (const auto s : all_settings()) a[s.slot()] = profile_of(h.tables[s.slot()]).m;
    return a;
}

}  // namespace relsvet
