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

/// Equatorial measurements on the three-qubit GHZ state.

#include "relsvet/error.hpp"
#include "relsvet/model.hpp"
#include "relsvet/svetlichny.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <thread>
#include <vector>

namespace relsvet {

using Amplitude = std::complex<double>;

/// Three-qubit pure state. Basis index bits are (q1 q2 q3) with q1 the most
/// significant; bit 0 is the +1 eigenstate of Z.
struct StateVector {
    std::array<Amplitude, 8> amp{};

    double norm() const {
        double s = 0.0;
        for (const auto &a : amp) s += std::norm(a);
        return std::sqrt(s);
    }
    Amplitude amplitude(std::size_t i) const { return amp.at(i); }
};

inline StateVector ghz_state() {
    StateVector s;
    s.amp[0] = s.amp[7] = std::numbers::sqrt2 / 2.0;
    return s;
}

/// cos(phi) X + sin(phi) Y applied to one qubit (party 1..3).
inline StateVector apply_equatorial(const StateVector &in, int party, double phi) {
    const int bit = 3 - party;
    const Amplitude up = std::polar(1.0, phi);    // <1|O|0>
    const Amplitude down = std::polar(1.0, -phi);  // <0|O|1>
    StateVector out;
    for (std::size_t i = 0; i < 8; ++i) {
        const std::size_t j = i ^ (std::size_t{1} << bit);
        out.amp[j] += ((i >> bit) & 1u ? down : up) * in.amp[i];
    }
    return out;
}

inline Amplitude inner(const StateVector &a, const StateVector &b) {
    Amplitude s{};
    for (std::size_t i = 0; i < 8; ++i) s += std::conj(a.amp[i]) * b.amp[i];
    return s;
}

/// <GHZ| O1 O2 O3 |GHZ> from the state vector.
inline double ghz_correlator_statevector(double phi1, double phi2, double phi3) {
    const StateVector g = ghz_state();
    StateVector v = apply_equatorial(g, 1, phi1);
    v = apply_equatorial(v, 2, phi2);
    v = apply_equatorial(v, 3, phi3);
    return inner(g, v).real();
}

inline constexpr double kQuantumCrossCheck = 1e-12;

/// cos(phi1 + phi2 + phi3), checked against the state-vector expectation.
inline double ghz_correlator(double phi1, double phi2, double phi3) {
    const double closed = std::cos(phi1 + phi2 + phi3);
    const double sv = ghz_correlator_statevector(phi1, phi2, phi3);
    if (std::abs(closed - sv) > kQuantumCrossCheck) {
        throw Error(ErrorKind::CrossCheckMismatch, "GHZ correlator: state vector gives " + std::to_string(sv) +
                                                       ", closed form " + std::to_string(closed));
    }
    return closed;
}

inline double canonical_angle(double a) {
    if (!std::isfinite(a)) throw Error(ErrorKind::DomainError, "measurement angle must be finite");
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double r = std::fmod(a, two_pi);
    if (r < 0.0) r += two_pi;
    return r >= two_pi ? 0.0 : r;
}

/// Per party the angle of the unprimed (x = 0) and primed (x = 1) setting.
struct EquatorialAngles {
    std::array<double, 3> phi{};
    std::array<double, 3> phi_prime{};

    EquatorialAngles() = default;
    EquatorialAngles(std::array<double, 3> unprimed, std::array<double, 3> primed) {
        for (int k = 0; k < 3; ++k) {
            phi[k] = canonical_angle(unprimed[k]);
            phi_prime[k] = canonical_angle(primed[k]);
        }
    }

    double of(int party, int x) const { return x == 0 ? phi[party - 1] : phi_prime[party - 1]; }

    double sum(SettingLabel s) const {
        const auto ctx = s.context();
        return of(1, ctx[1]) + of(2, ctx[2]) + of(3, ctx[3]);
    }
};

/// Outcome table for one setting from the projectors (1 + a O)/2, checked
/// against (1 + a1 a2 a3 cos(sum)) / 8.
inline OutcomeDistribution ghz_outcomes(double phi1, double phi2, double phi3) {
    const StateVector g = ghz_state();
    const std::array<double, 3> phis{phi1, phi2, phi3};
    const double E = std::cos(phi1 + phi2 + phi3);
    OutcomeDistribution p{};
    for (int k = 0; k < kNumOutcomes; ++k) {
        const auto &sign = kOutcomeSigns[k];
        StateVector v = g;
        for (int party = 1; party <= 3; ++party) {
            const StateVector ov = apply_equatorial(v, party, phis[party - 1]);
            for (std::size_t i = 0; i < 8; ++i) v.amp[i] = 0.5 * (v.amp[i] + double(sign[party - 1]) * ov.amp[i]);
        }
        p[k] = inner(g, v).real();
        const double closed = (1.0 + sign[0] * sign[1] * sign[2] * E) / 8.0;
        if (std::abs(p[k] - closed) > kQuantumCrossCheck) {
            throw Error(ErrorKind::CrossCheckMismatch, "GHZ outcome probability: projector gives " +
                                                           std::to_string(p[k]) + ", closed form " +
                                                           std::to_string(closed));
        }
    }
    return p;
}

/// Single hidden state of weight 1 reproducing the quantum statistics.
inline Behavior ghz_behavior(const EquatorialAngles &a) {
    HiddenState h;
    h.weight = 1.0;
    for (const auto s : all_settings()) {
        const auto ctx = s.context();
        h.tables[s.slot()] = ghz_outcomes(a.of(1, ctx[1]), a.of(2, ctx[2]), a.of(3, ctx[3]));
    }
    Behavior b;
    b.lambdas.push_back(h);
    return b;
}

/// Svetlichny value of the GHZ statistics: sum over settings of sign * cos(sum).
inline double ghz_svetlichny(const EquatorialAngles &a) {
    double v = 0.0;
    for (const auto s : all_settings()) v += s.svetlichny_sign() * std::cos(a.sum(s));
    return v;
}

/// Angles reaching 4 sqrt 2: every + setting sums to -pi/4 mod 2 pi and both
/// - settings to 3 pi / 4.
inline EquatorialAngles svetlichny_optimal_angles() {
    constexpr double pi = std::numbers::pi;
    return EquatorialAngles({0.0, 0.0, -3.0 * pi / 4.0}, {pi / 2.0, pi / 2.0, -pi / 4.0});
}

/// Symmetric ansatz: every party uses phi = alpha, phi' = alpha + pi/2.
inline double symmetric_ansatz_value(double alpha) {
    constexpr double half_pi = std::numbers::pi / 2.0;
    return ghz_svetlichny(EquatorialAngles({alpha, alpha, alpha}, {alpha + half_pi, alpha + half_pi, alpha + half_pi}));
}

struct SvetlichnyOptimum {
    EquatorialAngles angles;
    double value = 0.0;
    double grid_value = 0.0;  // best value on the coarse grid
    int grid_points = 0;      // per angle
    int sweeps = 0;           // coordinate-descent sweeps
};

/// Grid search over the angles followed by coordinate ascent. The value only
/// depends on per-setting angle sums, so phi1 = phi2 = 0 is fixed and the
/// other four angles are searched on a grid of 2 pi / round(2 pi / resolution).
/// Each ascent step sets one angle to its exact maximizer.
inline SvetlichnyOptimum maximize_svetlichny(double resolution = std::numbers::pi / 24.0, bool refine = true) {
    if (!(resolution > 0.0) || !std::isfinite(resolution)) {
        throw Error(ErrorKind::DomainError, "angle resolution must be positive");
    }
    constexpr double two_pi = 2.0 * std::numbers::pi;
    const int K = std::max(1, static_cast<int>(std::lround(two_pi / resolution)));
    if (K > 512) throw Error(ErrorKind::DomainError, "angle resolution is finer than the supported 2 pi / 512");
    std::vector<double> cos_table(static_cast<std::size_t>(K));
    for (int i = 0; i < K; ++i) cos_table[static_cast<std::size_t>(i)] = std::cos(two_pi * i / K);

    // Free angles, in order: phi3, phi1', phi2', phi3' (grid indices).
    struct Best {
        double value = -1e300;
        std::array<int, 4> idx{};
    };
    auto value_of = [&](const std::array<int, 4> &t) {
        const std::array<std::array<int, 2>, 3> g = {{{0, t[1]}, {0, t[2]}, {t[0], t[3]}}};
        double v = 0.0;
        for (const auto s : all_settings()) {
            const auto ctx = s.context();
            const int k = (g[0][ctx[1]] + g[1][ctx[2]] + g[2][ctx[3]]) % K;
            v += s.svetlichny_sign() * cos_table[static_cast<std::size_t>(k)];
        }
        return v;
    };
    auto search_block = [&](int first, int last) {
        Best b;
        for (int a = first; a < last; ++a) {
            for (int c = 0; c < K; ++c) {
                for (int d = 0; d < K; ++d) {
                    for (int e = 0; e < K; ++e) {
                        const std::array<int, 4> t{a, c, d, e};
                        const double v = value_of(t);
                        if (v > b.value + 1e-12) b = {v, t};
                    }
                }
            }
        }
        return b;
    };
    const int n_threads = std::clamp(static_cast<int>(std::thread::hardware_concurrency()), 1, std::min(K, 8));
    std::vector<Best> blocks(static_cast<std::size_t>(n_threads));
    {
        std::vector<std::thread> pool;
        for (int t = 0; t < n_threads; ++t) {
            pool.emplace_back([&, t] { blocks[t] = search_block(K * t / n_threads, K * (t + 1) / n_threads); });
        }
        for (auto &th : pool) th.join();
    }
    Best best = blocks.front();
    for (const auto &b : blocks) {
        if (b.value > best.value + 1e-12) best = b;  // earlier block wins ties
    }

    SvetlichnyOptimum out;
    out.grid_points = K;
    out.grid_value = best.value;
    auto angle = [&](int i) { return two_pi * i / K; };
    std::array<double, 3> un{0.0, 0.0, angle(best.idx[0])};
    std::array<double, 3> pr{angle(best.idx[1]), angle(best.idx[2]), angle(best.idx[3])};

    if (refine) {
        for (int sweep = 0; sweep < 1000; ++sweep) {
            double moved = 0.0;
            for (int party = 1; party <= 3; ++party) {
                for (int x = 0; x <= 1; ++x) {
                    // Value = Re(e^{i theta} * sum over settings using (party, x) of sign e^{i rest}) + const.
                    Amplitude z{};
                    for (const auto s : all_settings()) {
                        const auto ctx = s.context();
                        if (ctx[party] != x) continue;
                        double rest = 0.0;
                        for (int q = 1; q <= 3; ++q) {
                            if (q != party) rest += ctx[q] == 0 ? un[q - 1] : pr[q - 1];
                        }
                        z += double(s.svetlichny_sign()) * std::polar(1.0, rest);
                    }
                    if (std::abs(z) < 1e-15) continue;
                    double &theta = x == 0 ? un[party - 1] : pr[party - 1];
                    const double target = -std::arg(z);
                    moved = std::max(moved, std::abs(std::remainder(target - theta, two_pi)));
                    theta = target;
                }
            }
            out.sweeps = sweep + 1;
            if (moved < 1e-12) break;
        }
    }
    out.angles = EquatorialAngles(un, pr);
    out.value = ghz_svetlichny(out.angles);
    return out;
}

}  // namespace relsvet
