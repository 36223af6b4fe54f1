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

/// Data model for tripartite hidden-variable behaviors.
///
/// Three parties each pick one of two settings (0 = unprimed, 1 = primed) and
/// observe an outcome in {+1, -1}. A behavior is a finite weighted list of
/// hidden states; each hidden state carries one joint outcome distribution per
/// measurement context.
///
/// Orderings are fixed throughout the library:
///   outcomes  (+,+,+) (+,+,-) (+,-,+) (-,+,+) (+,-,-) (-,+,-) (-,-,+) (-,-,-)
///   settings  1:(x1,x2,x3') 2:(x1,x2',x3) 3:(x1',x2,x3) 4:(x1',x2',x3)
///             5:(x1',x2,x3') 6:(x1,x2',x3') 7:(x1,x2,x3) 8:(x1',x2',x3')
///
/// A single distribution is also described by its profile (c, m1..m6):
///   c  = P(+,+,+)
///   m1 = P(a2=+, a3=+), m2 = P(a1=+, a2=+), m3 = P(a1=+, a3=+)
///   m4 = P(a1=+), m5 = P(a2=+), m6 = P(a3=+)

#include "relsvet/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

namespace relsvet {

inline constexpr int kNumSettings = 8;
inline constexpr int kNumOutcomes = 8;
inline constexpr int kNumMarginals = 6;
inline constexpr double kProbabilityTolerance = 1e-12;

/// Outcome signs (a1, a2, a3) in the fixed outcome order.
inline constexpr std::array<std::array<int, 3>, kNumOutcomes> kOutcomeSigns = {{
    {+1, +1, +1},
    {+1, +1, -1},
    {+1, -1, +1},
    {-1, +1, +1},
    {+1, -1, -1},
    {-1, +1, -1},
    {-1, -1, +1},
    {-1, -1, -1},
}};

/// Setting choice per party; parties are numbered 1..3.
struct MeasurementContext {
    int x1 = 0;
    int x2 = 0;
    int x3 = 0;

    constexpr int operator[](int party) const { return party == 1 ? x1 : party == 2 ? x2 : x3; }
    constexpr bool operator==(const MeasurementContext &) const = default;

    constexpr bool valid() const {
        return (x1 == 0 || x1 == 1) && (x2 == 0 || x2 == 1) && (x3 == 0 || x3 == 1);
    }
};

namespace detail {
inline constexpr std::array<MeasurementContext, kNumSettings> kLabelContexts = {{
    {0, 0, 1},
    {0, 1, 0},
    {1, 0, 0},
    {1, 1, 0},
    {1, 0, 1},
    {0, 1, 1},
    {0, 0, 0},
    {1, 1, 1},
}};
}  // namespace detail

/// One of the eight measurement contexts, numbered 1..8 in the fixed order.
class SettingLabel {
  public:
    constexpr explicit SettingLabel(int index) : index_(index) {
        if (index < 1 || index > kNumSettings) {
            throw Error(ErrorKind::IndexOutOfRange,
                        "setting label must be in 1..8, got " + std::to_string(index));
        }
    }

    static constexpr SettingLabel from_context(MeasurementContext ctx) {
        if (!ctx.valid()) {
            throw Error(ErrorKind::DomainError, "setting choices must be 0 or 1");
        }
        for (int i = 0; i < kNumSettings; ++i) {
            if (detail::kLabelContexts[i] == ctx) return SettingLabel(i + 1);
        }
        throw Error(ErrorKind::DomainError, "unreachable context");
    }

    constexpr int index() const { return index_; }
    constexpr std::size_t slot() const { return static_cast<std::size_t>(index_ - 1); }
    constexpr MeasurementContext context() const { return detail::kLabelContexts[slot()]; }

    /// +1 for labels 1..6, -1 for labels 7 and 8: the Svetlichny coefficient.
    constexpr int svetlichny_sign() const { return index_ <= 6 ? +1 : -1; }

    constexpr auto operator<=>(const SettingLabel &) const = default;

  private:
    int index_;
};

inline std::array<SettingLabel, kNumSettings> all_settings() {
    return {SettingLabel(1), SettingLabel(2), SettingLabel(3), SettingLabel(4),
            SettingLabel(5), SettingLabel(6), SettingLabel(7), SettingLabel(8)};
}

using OutcomeDistribution = std::array<double, kNumOutcomes>;
using SettingTables = std::array<OutcomeDistribution, kNumSettings>;

struct HiddenState {
    double weight = 1.0;
    SettingTables tables{};  // indexed by SettingLabel::slot()
};

struct Behavior {
    std::vector<HiddenState> lambdas;
};

struct JointProfile {
    double c = 0.0;
    std::array<double, kNumMarginals> m{};
};

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

/// Throws NegativeProbability / NotNormalized naming the offending entry.
inline void validate_distribution(const OutcomeDistribution &p, double tolerance = kProbabilityTolerance,
                                  ErrorLocation where = {}) {
    double total = 0.0;
    for (int k = 0; k < kNumOutcomes; ++k) {
        if (!std::isfinite(p[k]) || p[k] < -tolerance) {
            where.outcome = k;
            throw Error(ErrorKind::NegativeProbability,
                        "outcome probability " + std::to_string(p[k]) + " is negative or not finite", where);
        }
        if (p[k] > 1.0 + tolerance) {
            where.outcome = k;
            throw Error(ErrorKind::NotNormalized,
                        "outcome probability " + std::to_string(p[k]) + " exceeds 1", where);
        }
        total += p[k];
    }
    if (std::abs(total - 1.0) > tolerance) {
        throw Error(ErrorKind::NotNormalized, "outcome probabilities sum to " + std::to_string(total), where);
    }
}

inline void validate_behavior(const Behavior &b, double tolerance = kProbabilityTolerance) {
    if (b.lambdas.empty()) {
        throw Error(ErrorKind::NotNormalized, "behavior has no hidden states");
    }
    double total = 0.0;
    for (std::size_t l = 0; l < b.lambdas.size(); ++l) {
        const double w = b.lambdas[l].weight;
        if (!std::isfinite(w) || w < -tolerance) {
            throw Error(ErrorKind::NegativeProbability, "hidden-state weight " + std::to_string(w) + " is negative",
                        ErrorLocation{l, std::nullopt, std::nullopt});
        }
        total += w;
        for (const auto s : all_settings()) {
            validate_distribution(b.lambdas[l].tables[s.slot()], tolerance,
                                  ErrorLocation{l, s.index(), std::nullopt});
        }
    }
    if (std::abs(total - 1.0) > tolerance) {
        throw Error(ErrorKind::NotNormalized, "hidden-state weights sum to " + std::to_string(total));
    }
}

inline JointProfile profile_of(const OutcomeDistribution &p) {
    JointProfile out;
    out.c = p[0];
    out.m[0] = p[0] + p[3];
    out.m[1] = p[0] + p[1];
    out.m[2] = p[0] + p[2];
    out.m[3] = p[0] + p[1] + p[2] + p[4];
    out.m[4] = p[0] + p[1] + p[3] + p[5];
    out.m[5] = p[0] + p[2] + p[3] + p[6];
    return out;
}

inline JointProfile profile_of(const Behavior &b, std::size_t lambda, SettingLabel s) {
    if (lambda >= b.lambdas.size()) {
        throw Error(ErrorKind::IndexOutOfRange, "hidden state " + std::to_string(lambda) + " out of range",
                    ErrorLocation{lambda, s.index(), std::nullopt});
    }
    return profile_of(b.lambdas[lambda].tables[s.slot()]);
}

namespace detail {
/// Each outcome probability as const + coef_c * c + sum_j coef_m[j] * m_j.
struct LinearInProfile {
    double constant;
    double coef_c;
    std::array<double, kNumMarginals> coef_m;
};

inline constexpr std::array<LinearInProfile, kNumOutcomes> kReconstruction = {{
    {0, +1, {0, 0, 0, 0, 0, 0}},
    {0, -1, {0, 1, 0, 0, 0, 0}},
    {0, -1, {0, 0, 1, 0, 0, 0}},
    {0, -1, {1, 0, 0, 0, 0, 0}},
    {0, +1, {0, -1, -1, 1, 0, 0}},
    {0, +1, {-1, -1, 0, 0, 1, 0}},
    {0, +1, {-1, 0, -1, 0, 0, 1}},
    {1, -1, {1, 1, 1, -1, -1, -1}},
}};
}  // namespace detail

/// Inclusion-exclusion inverse of profile_of, without the sign check.
inline OutcomeDistribution reconstruct_joint_unchecked(const JointProfile &q) {
    OutcomeDistribution p{};
    for (int k = 0; k < kNumOutcomes; ++k) {
        const auto &row = detail::kReconstruction[k];
        double v = row.constant + row.coef_c * q.c;
        for (int j = 0; j < kNumMarginals; ++j) v += row.coef_m[j] * q.m[j];
        p[k] = v;
    }
    return p;
}

inline OutcomeDistribution reconstruct_joint(const JointProfile &q) {
    OutcomeDistribution p = reconstruct_joint_unchecked(q);
    for (int k = 0; k < kNumOutcomes; ++k) {
        if (p[k] < -kProbabilityTolerance) {
            throw Error(ErrorKind::InfeasibleProfile,
                        "reconstructed probability " + std::to_string(p[k]) + " is negative",
                        ErrorLocation{std::nullopt, std::nullopt, k});
        }
    }
    return p;
}

/// Lower and upper ends of the feasible c interval, possibly crossed.
inline Interval c_range_unchecked(const std::array<double, kNumMarginals> &m) {
    const double lo = std::max({0.0, m[1] + m[2] - m[3], m[0] + m[1] - m[4], m[0] + m[2] - m[5]});
    const double hi = std::min({m[0], m[1], m[2], 1.0 - m[3] - m[4] - m[5] + m[0] + m[1] + m[2]});
    return {lo, hi};
}

/// The exact set of c for which (c, m) reconstructs to a nonnegative
/// distribution.
inline Interval c_range(const std::array<double, kNumMarginals> &m) {
    const Interval r = c_range_unchecked(m);
    if (r.lo > r.hi + kProbabilityTolerance) {
        throw Error(ErrorKind::EmptyRange, "no c makes the profile nonnegative (c_lo=" + std::to_string(r.lo) +
                                               ", c_hi=" + std::to_string(r.hi) + ")");
    }
    return {r.lo, std::max(r.lo, r.hi)};
}

/// <X1 X2 X3> of a single distribution.
inline double correlator(const OutcomeDistribution &p) {
    double e = 0.0;
    for (int k = 0; k < kNumOutcomes; ++k) {
        e += kOutcomeSigns[k][0] * kOutcomeSigns[k][1] * kOutcomeSigns[k][2] * p[k];
    }
    return e;
}

/// <X1 X2 X3> = 8c - 1 + 2(m4+m5+m6) - 4(m1+m2+m3).
inline double correlator(const JointProfile &q) {
    return 8.0 * q.c - 1.0 + 2.0 * (q.m[3] + q.m[4] + q.m[5]) - 4.0 * (q.m[0] + q.m[1] + q.m[2]);
}

/// Hidden-state average of the tripartite correlator in one context. Each
/// per-state value is computed from the table and from its profile; the two
/// must agree.
inline double correlator(const Behavior &b, MeasurementContext ctx) {
    validate_behavior(b);
    const SettingLabel s = SettingLabel::from_context(ctx);
    double total = 0.0;
    for (std::size_t l = 0; l < b.lambdas.size(); ++l) {
        const auto &p = b.lambdas[l].tables[s.slot()];
        const double direct = correlator(p);
        const double via_profile = correlator(profile_of(p));
        if (std::abs(direct - via_profile) > 1e-12) {
            throw Error(ErrorKind::CrossCheckMismatch, "correlator formula disagrees with table sum",
                        ErrorLocation{l, s.index(), std::nullopt});
        }
        total += b.lambdas[l].weight * direct;
    }
    return total;
}

/// Single hidden state with the same distribution at every setting.
inline Behavior constant_behavior(const OutcomeDistribution &p) {
    HiddenState h;
    h.weight = 1.0;
    h.tables.fill(p);
    return Behavior{{h}};
}

inline OutcomeDistribution uniform_distribution() {
    OutcomeDistribution p;
    p.fill(1.0 / kNumOutcomes);
    return p;
}

inline OutcomeDistribution point_mass(int outcome) {
    OutcomeDistribution p{};
    p.at(static_cast<std::size_t>(outcome)) = 1.0;
    return p;
}

}  // namespace relsvet
