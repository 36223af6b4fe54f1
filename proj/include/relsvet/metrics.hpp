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

/// Degrees of signaling and indeterminism of a behavior.
///
/// Every sup is an exact maximum over the finite hidden-state list and the
/// eight contexts. Hidden states with zero weight are outside the support and
/// are skipped.

#include "relsvet/model.hpp"
#include "relsvet/scenario.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace relsvet {

/// The two parties other than `party`, in increasing order.
constexpr std::array<int, 2> other_parties(int party) {
    return party == 1 ? std::array<int, 2>{2, 3} : party == 2 ? std::array<int, 2>{1, 3} : std::array<int, 2>{1, 2};
}

inline double single_marginal(const OutcomeDistribution &p, int party, int sign) {
    double v = 0.0;
    for (int k = 0; k < kNumOutcomes; ++k) {
        if (kOutcomeSigns[k][party - 1] == sign) v += p[k];
    }
    return v;
}

inline double pair_marginal(const OutcomeDistribution &p, int j, int k, int sign_j, int sign_k) {
    double v = 0.0;
    for (int o = 0; o < kNumOutcomes; ++o) {
        if (kOutcomeSigns[o][j - 1] == sign_j && kOutcomeSigns[o][k - 1] == sign_k) v += p[o];
    }
    return v;
}

/// Indexing: one_to_pair[i-1] = S_{i->jk}, pair_to_one[k-1] = S_{ij->k}.
struct SignalingDegrees {
    std::array<double, 3> one_to_pair{};
    std::array<double, 3> pair_to_one{};
    double overall = 0.0;

    double of(Direction d) const {
        return d.kind == Direction::Kind::OneToPair ? one_to_pair[d.party - 1] : pair_to_one[d.party - 1];
    }
};

/// Indexing: pair[k-1] is the pair that excludes party k, single[i-1] is party i.
struct IndeterminismDegrees {
    std::array<double, 3> pair{};
    std::array<double, 3> single{};
    double overall = 0.0;
};

/// How a pair marginal's four outcome probabilities enter its indeterminism.
///   AllOutcomes:     every probability must sit in [0,I] or [1-I,1]
///                    (max over outcomes of min(p, 1-p)). Default.
///   MinOverOutcomes: min over outcomes of min(p, 1-p).
///   PlusPlusOnly:    only the (+,+) probability is considered.
enum class PairIndeterminismRule { AllOutcomes, MinOverOutcomes, PlusPlusOnly };

inline double signaling_one_to_pair(const Behavior &b, int party) {
    validate_behavior(b);
    const auto [j, k] = other_parties(party);
    double sup = 0.0;
    for (const auto &h : b.lambdas) {
        if (h.weight <= 0.0) continue;
        for (const auto s : all_settings()) {
            MeasurementContext flipped = s.context();
            (party == 1 ? flipped.x1 : party == 2 ? flipped.x2 : flipped.x3) ^= 1;
            const auto &p = h.tables[s.slot()];
            const auto &q = h.tables[SettingLabel::from_context(flipped).slot()];
            for (const int aj : {+1, -1}) {
                for (const int ak : {+1, -1}) {
                    sup = std::max(sup, std::abs(pair_marginal(p, j, k, aj, ak) - pair_marginal(q, j, k, aj, ak)));
                }
            }
        }
    }
    return sup;
}

inline double signaling_pair_to_one(const Behavior &b, int party) {
    validate_behavior(b);
    double sup = 0.0;
    for (const auto &h : b.lambdas) {
        if (h.weight <= 0.0) continue;
        for (const auto s : all_settings()) {
            for (const auto t : all_settings()) {
                if (s.context()[party] != t.context()[party]) continue;
                const double shift = single_marginal(h.tables[s.slot()], party, +1) -
                                     single_marginal(h.tables[t.slot()], party, +1);
                sup = std::max(sup, std::abs(shift));
            }
        }
    }
    return sup;
}

inline SignalingDegrees signaling_degrees(const Behavior &b) {
    SignalingDegrees d;
    for (int party = 1; party <= 3; ++party) {
        d.one_to_pair[party - 1] = signaling_one_to_pair(b, party);
        d.pair_to_one[party - 1] = signaling_pair_to_one(b, party);
    }
    d.overall = std::max(*std::max_element(d.one_to_pair.begin(), d.one_to_pair.end()),
                         *std::max_element(d.pair_to_one.begin(), d.pair_to_one.end()));
    return d;
}

inline double overall_signaling(const Behavior &b) { return signaling_degrees(b).overall; }

/// True when every direction the scenario forbids is below `tolerance`.
inline bool conforms(const SignalingDegrees &d, Scenario s, double tolerance = 1e-12) {
    for (const auto dir : kAllDirections) {
        if (!permits(s, dir) && d.of(dir) > tolerance) return false;
    }
    return true;
}

inline IndeterminismDegrees indeterminism_degrees(const Behavior &b,
                                                  PairIndeterminismRule rule = PairIndeterminismRule::AllOutcomes) {
    validate_behavior(b);
    auto closeness = [](double p) { return std::clamp(std::min(p, 1.0 - p), 0.0, 0.5); };
    IndeterminismDegrees d;
    for (const auto &h : b.lambdas) {
        if (h.weight <= 0.0) continue;
        for (const auto s : all_settings()) {
            const auto &p = h.tables[s.slot()];
            for (int party = 1; party <= 3; ++party) {
                d.single[party - 1] = std::max(d.single[party - 1], closeness(single_marginal(p, party, +1)));

                const auto [j, k] = other_parties(party);
                double value = 0.0;
                switch (rule) {
                case PairIndeterminismRule::PlusPlusOnly: value = closeness(pair_marginal(p, j, k, +1, +1)); break;
                case PairIndeterminismRule::AllOutcomes:
                case PairIndeterminismRule::MinOverOutcomes: {
                    const bool take_max = rule == PairIndeterminismRule::AllOutcomes;
                    value = take_max ? 0.0 : 0.5;
                    for (const int aj : {+1, -1}) {
                        for (const int ak : {+1, -1}) {
                            const double c = closeness(pair_marginal(p, j, k, aj, ak));
                            value = take_max ? std::max(value, c) : std::min(value, c);
                        }
                    }
                    break;
                }
                }
                d.pair[party - 1] = std::max(d.pair[party - 1], value);
            }
        }
    }
    d.overall = std::max(*std::max_element(d.pair.begin(), d.pair.end()),
                         *std::max_element(d.single.begin(), d.single.end()));
    return d;
}

struct ComplementarityVerdict {
    double indeterminism = 0.0;
    double signaling = 0.0;
    bool holds = false;
};

/// Checks I >= min{S, (1-S)/2}.
inline ComplementarityVerdict complementarity_check(const Behavior &b,
                                                    PairIndeterminismRule rule = PairIndeterminismRule::AllOutcomes) {
    ComplementarityVerdict v;
    v.indeterminism = indeterminism_degrees(b, rule).overall;
    v.signaling = overall_signaling(b);
    v.holds = v.indeterminism >= std::min(v.signaling, (1.0 - v.signaling) / 2.0) - 1e-12;
    return v;
}

}  // namespace relsvet
