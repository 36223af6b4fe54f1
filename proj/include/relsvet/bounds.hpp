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

/// Closed-form relaxed Svetlichny bounds, the relaxation needed to reach a
/// given violation, and the information cost of signaling.

#include "relsvet/error.hpp"
#include "relsvet/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

namespace relsvet {

struct RelaxationBudget {
    double I = 0.0;
    double S = 0.0;
    Scenario scenario = Scenario::Simultaneous;
};

inline void validate_budget(double I, double S) {
    if (!(I >= 0.0 && I < 0.5)) {
        throw Error(ErrorKind::DomainError, "indeterminism must lie in [0, 1/2), got " + std::to_string(I));
    }
    if (!(S >= 0.0 && S <= 1.0)) {
        throw Error(ErrorKind::DomainError, "signaling must lie in [0, 1], got " + std::to_string(S));
    }
}

/// Linked marginals cannot jump between [0,I] and [1-I,1] when S < 1 - 2I.
constexpr bool below_gap(double I, double S) { return S < 1.0 - 2.0 * I; }

/// Simultaneous-scenario band boundaries.
inline constexpr double kBandAB = 2.0 / 9.0;
inline constexpr double kBandBC = 0.25;

inline double relaxed_bound(const RelaxationBudget &b) {
    validate_budget(b.I, b.S);
    if (!below_gap(b.I, b.S)) return 8.0;
    switch (b.scenario) {
    case Scenario::Simultaneous:
        if (b.I <= kBandAB) return 4.0 + 12.0 * b.I;
        if (b.I < kBandBC) return 48.0 * b.I - 4.0;
        return 8.0;
    case Scenario::RestrictedSend: return 4.0 + 8.0 * b.I;
    case Scenario::RestrictedReceive: return 4.0 + 4.0 * b.I;
    }
    return 8.0;
}

inline double relaxed_bound(double I, double S, Scenario s) { return relaxed_bound(RelaxationBudget{I, S, s}); }

/// Violation of the Svetlichny bound 4 by GHZ correlations: 4*sqrt(2) - 4.
inline double ghz_violation() { return 4.0 * std::sqrt(2.0) - 4.0; }

/// Smallest (I, S) pair on one branch of a scenario's bound that absorbs a
/// violation V. `band_lo`/`band_hi` is the I range in which the branch formula
/// applies; `within_band` says whether I_V actually falls there.
struct MinimalRelaxation {
    Scenario scenario = Scenario::Simultaneous;
    int branch = 1;
    double I_V = 0.0;
    double S_V = 1.0;
    double band_lo = 0.0;
    double band_hi = 0.5;
    bool band_hi_inclusive = false;
    bool within_band = true;
};

inline std::vector<MinimalRelaxation> minimal_relaxation(double V, Scenario scenario) {
    if (!(V >= 0.0 && V <= 4.0)) {
        throw Error(ErrorKind::DomainError, "violation must lie in [0, 4], got " + std::to_string(V));
    }
    auto make = [&](int branch, double i_v, double lo, double hi, bool hi_inclusive) {
        MinimalRelaxation r;
        r.scenario = scenario;
        r.branch = branch;
        r.I_V = i_v;
        r.S_V = 1.0 - 2.0 * i_v;
        r.band_lo = lo;
        r.band_hi = hi;
        r.band_hi_inclusive = hi_inclusive;
        r.within_band = i_v >= lo && (hi_inclusive ? i_v <= hi : i_v < hi);
        return r;
    };
    switch (scenario) {
    case Scenario::Simultaneous:
        return {make(1, V / 12.0, 0.0, kBandAB, true), make(2, 1.0 / 6.0 + V / 48.0, kBandAB, kBandBC, false)};
    case Scenario::RestrictedSend: return {make(1, V / 8.0, 0.0, 0.5, false)};
    case Scenario::RestrictedReceive: return {make(1, V / 4.0, 0.0, 0.5, false)};
    }
    return {};
}

/// Shannon entropy in bits, 0 log 0 = 0.
inline double binary_entropy(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw Error(ErrorKind::DomainError, "entropy argument must lie in [0, 1], got " + std::to_string(p));
    }
    auto term = [](double x) { return x > 0.0 ? -x * std::log2(x) : 0.0; };
    return term(p) + term(1.0 - p);
}

/// Mutual information between a fair binary choice and a binary outcome that
/// is + with probability p or p + S depending on the choice.
inline double mutual_info_shift(double p, double S) {
    if (!(p >= 0.0 && S >= 0.0 && p + S <= 1.0 + 1e-15)) {
        throw Error(ErrorKind::DomainError, "need p >= 0, S >= 0 and p + S <= 1");
    }
    const double q = std::min(p + S, 1.0);
    return binary_entropy(0.5 * p + 0.5 * q) - 0.5 * (binary_entropy(p) + binary_entropy(q));
}

/// Binary symmetric channel capacity for a probability shift S.
inline double channel_capacity(double S) {
    if (!(S >= 0.0 && S <= 1.0)) {
        throw Error(ErrorKind::DomainError, "shift must lie in [0, 1], got " + std::to_string(S));
    }
    return 1.0 - binary_entropy((1.0 - S) / 2.0);
}

struct GhzRequirement {
    MinimalRelaxation relaxation;
    double signaling_bits = 0.0;
    double local_bits = 1.0;
};

inline std::vector<GhzRequirement> requirements_for(double V, Scenario scenario) {
    std::vector<GhzRequirement> out;
    for (const auto &r : minimal_relaxation(V, scenario)) {
        const double bits = channel_capacity(r.S_V);
        out.push_back({r, bits, 1.0 - bits});
    }
    return out;
}

inline std::vector<GhzRequirement> ghz_requirements(Scenario scenario) {
    return requirements_for(ghz_violation(), scenario);
}

/// Two-decimal figures printed alongside the formulas, kept so reports can
/// show the rounding deltas. Empty where nothing is printed.
struct PublishedRequirement {
    Scenario scenario;
    int branch;
    double I_V;
    double S_V;
    std::optional<double> signaling_bits;
    std::optional<double> local_bits;
};

inline const std::vector<PublishedRequirement> &published_requirements() {
    static const std::vector<PublishedRequirement> table = {
        {Scenario::Simultaneous, 1, 0.13, 0.72, 0.43, std::nullopt},
        {Scenario::Simultaneous, 2, 0.20, 0.59, 0.71, std::nullopt},
        {Scenario::RestrictedSend, 1, 0.20, 0.58, 0.27, 0.73},
        {Scenario::RestrictedReceive, 1, 0.41, 0.17, 0.03, 0.97},
    };
    return table;
}

inline std::optional<PublishedRequirement> published_requirement(Scenario s, int branch) {
    for (const auto &p : published_requirements()) {
        if (p.scenario == s && p.branch == branch) return p;
    }
    return std::nullopt;
}

/// One row of the bound-versus-indeterminism curves, all below the gap
/// (S = 0): X simultaneous, Y send, Z receive.
struct CurvePoint {
    double I;
    double X;
    double Y;
    double Z;
};

inline std::vector<CurvePoint> figure1_curve(double step) {
    if (!(step > 0.0 && step < 0.5)) {
        throw Error(ErrorKind::DomainError, "step must lie in (0, 1/2), got " + std::to_string(step));
    }
    std::vector<CurvePoint> rows;
    for (long k = 0;; ++k) {
        const double I = static_cast<double>(k) * step;
        if (I >= 0.5) break;
        rows.push_back({I, relaxed_bound(I, 0.0, Scenario::Simultaneous), relaxed_bound(I, 0.0, Scenario::RestrictedSend),
                        relaxed_bound(I, 0.0, Scenario::RestrictedReceive)});
    }
    return rows;
}

}  // namespace relsvet
