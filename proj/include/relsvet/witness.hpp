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

/// Regimes of the relaxed bounds and the explicit marginal assignments that
/// attain them.

#include "relsvet/bounds.hpp"
#include "relsvet/linkage.hpp"
#include "relsvet/svetlichny.hpp"

#include <cmath>
#include <optional>
#include <string>
#include <vector>

namespace relsvet {

enum class GapSide { Below, AtOrAbove };

/// Indeterminism bands of the simultaneous bound below the gap:
/// Low [0, 2/9], Middle [2/9, 1/4), High [1/4, 1/2).
enum class IBand { Low, Middle, High };

constexpr std::string_view gap_name(GapSide g) { return g == GapSide::Below ? "below" : "at_or_above"; }

constexpr std::string_view band_name(IBand b) {
    return b == IBand::Low ? "low" : b == IBand::Middle ? "middle" : "high";
}

struct Regime {
    Scenario scenario = Scenario::Simultaneous;
    GapSide gap = GapSide::Below;
    std::optional<IBand> band;  // only for Simultaneous below the gap

    std::string name() const {
        std::string s = std::string(scenario_name(scenario)) + "/" + std::string(gap_name(gap));
        if (band) s += "/" + std::string(band_name(*band));
        return s;
    }
};

constexpr IBand band_of(double I) { return I <= kBandAB ? IBand::Low : I < kBandBC ? IBand::Middle : IBand::High; }

inline Regime regime_of(double I, double S, Scenario scenario) {
    validate_budget(I, S);
    Regime r{scenario, below_gap(I, S) ? GapSide::Below : GapSide::AtOrAbove, std::nullopt};
    if (scenario == Scenario::Simultaneous && r.gap == GapSide::Below) r.band = band_of(I);
    return r;
}

/// J implied by the published bound: (8 - bound) / 2.
inline double closed_form_j(double I, double S, Scenario scenario) { return (8.0 - relaxed_bound(I, S, scenario)) / 2.0; }

inline double closed_form_j(const Regime &r, double I) {
    if (r.gap == GapSide::AtOrAbove) return 0.0;
    switch (r.scenario) {
    case Scenario::Simultaneous: {
        const IBand b = r.band.value_or(band_of(I));
        return b == IBand::Low ? 2.0 * (1.0 - 3.0 * I) : b == IBand::Middle ? 6.0 * (1.0 - 4.0 * I) : 0.0;
    }
    case Scenario::RestrictedSend: return 2.0 * (1.0 - 2.0 * I);
    case Scenario::RestrictedReceive: return 2.0 * (1.0 - I);
    }
    return 0.0;
}

struct WitnessAssignment {
    Regime regime;
    double I = 0.0;
    AssignmentMatrix m{};
    double expected_J = 0.0;
    /// False for assignments built here rather than taken from the published proofs.
    bool published = true;
};

namespace detail {
inline void fill_rows(AssignmentMatrix &a, std::initializer_list<int> labels, std::array<double, kNumMarginals> row) {
    for (const int l : labels) a[SettingLabel(l).slot()] = row;
}
}  // namespace detail

inline WitnessAssignment witness_assignment(const Regime &regime, double I) {
    if (!(I >= 0.0 && I < 0.5)) {
        throw Error(ErrorKind::DomainError, "indeterminism must lie in [0, 1/2), got " + std::to_string(I));
    }
    WitnessAssignment w;
    w.regime = regime;
    w.I = I;
    const double J = 1.0 - I;
    auto &a = w.m;

    if (regime.gap == GapSide::AtOrAbove) {
        if (regime.scenario == Scenario::RestrictedReceive) {
            detail::fill_rows(a, {1, 2, 3, 4, 5, 6}, {0, 0, 0, I, 0, J});
            detail::fill_rows(a, {7, 8}, {0, 0, I, I, 0, I});
            w.published = false;
        } else {
            detail::fill_rows(a, {1, 2, 3, 4, 5, 6}, {0, 0, 0, I, J, 0});
            detail::fill_rows(a, {7, 8}, {0, 0, 0, 0, 0, 0});
        }
        w.expected_J = closed_form_j(regime, I);
        return w;
    }

    switch (regime.scenario) {
    case Scenario::Simultaneous: {
        const IBand band = regime.band.value_or(band_of(I));
        if (band_of(I) != band) {
            throw Error(ErrorKind::RegimeMismatch, "I = " + std::to_string(I) + " is outside the " +
                                                       std::string(band_name(band)) + " band");
        }
        w.regime.band = band;
        switch (band) {
        case IBand::Low:
            detail::fill_rows(a, {1, 2, 3, 4, 5, 6}, {0, 0, 0, I, 0, J});
            detail::fill_rows(a, {7, 8}, {I, 0, I, I, I, J});
            break;
        case IBand::Middle:
            detail::fill_rows(a, {7, 8}, {0, 0, 0, 0, 0, 0});
            detail::fill_rows(a, {1}, {0, 0, 0, I, J, 0});
            detail::fill_rows(a, {4}, {0, 0, 0, 1, 0, 0});
            detail::fill_rows(a, {2, 6}, {0, 0, 0, I, 0, J});
            detail::fill_rows(a, {3}, {I, I, I, 0, J, J});
            detail::fill_rows(a, {5}, {I, I, I, J, 0, J});
            break;
        case IBand::High: {
            const double h = 0.5 - I;
            detail::fill_rows(a, {7, 8}, {0, 0, 0, 0, 0, 0});
            detail::fill_rows(a, {1, 4}, {h, h, h, J, J, 0});
            detail::fill_rows(a, {2, 5}, {h, h, h, J, 0, J});
            detail::fill_rows(a, {3, 6}, {h, h, h, 0, J, J});
            break;
        }
        }
        break;
    }
    case Scenario::RestrictedSend:
        detail::fill_rows(a, {1, 2, 3, 4, 5, 6}, {0, 0, 0, I, J, 0});
        detail::fill_rows(a, {7, 8}, {0, I, 0, I, J, 0});
        break;
    case Scenario::RestrictedReceive:
        throw Error(ErrorKind::UnsupportedRegime, "no explicit witness is published for receive below the gap");
    }
    w.expected_J = closed_form_j(w.regime, I);
    return w;
}

struct EntryIssue {
    int setting = 0;   // 1..8
    int marginal = 0;  // 1..6
    double value = 0.0;
};

struct WitnessReport {
    bool membership_ok = true;
    std::vector<EntryIssue> outside_subintervals;
    double j_value = 0.0;
    double expected_J = 0.0;
    bool j_match = false;
    LinkageConsumption consumption;
};

/// Is v in [0, I] or [1 - I, 1] (with slack tol)?
inline bool in_subintervals(double v, double I, double tol = 1e-12) {
    return (v >= -tol && v <= I + tol) || (v >= 1.0 - I - tol && v <= 1.0 + tol);
}

inline WitnessReport verify_witness(const WitnessAssignment &w, double I, double tolerance = 1e-12) {
    WitnessReport r;
    for (const auto s : all_settings()) {
        for (int j = 0; j < kNumMarginals; ++j) {
            const double v = w.m[s.slot()][j];
            if (!in_subintervals(v, I, tolerance)) {
                r.membership_ok = false;
                r.outside_subintervals.push_back({s.index(), j + 1, v});
            }
        }
    }
    r.j_value = j_functional(w.m);
    r.expected_J = w.expected_J;
    r.j_match = std::abs(r.j_value - w.expected_J) <= tolerance;
    r.consumption = linkage_consumption(w.m);
    return r;
}

}  // namespace relsvet
