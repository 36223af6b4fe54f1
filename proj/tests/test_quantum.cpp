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

#include "relsvet/relsvet.hpp"

#include <gtest/gtest.h>

#include <chrono>
#include <cmath>
#include <numbers>
#include <random>

namespace relsvet {
namespace {

constexpr double pi = std::numbers::pi;

TEST(GhzState, Normalized) {
    EXPECT_NEAR(ghz_state().norm(), 1.0, 1e-15);
    EXPECT_NEAR(apply_equatorial(ghz_state(), 2, 0.7).norm(), 1.0, 1e-15);
}

TEST(Equatorial, ActsLikePauliXAtZeroAndYAtHalfPi) {
    StateVector zero;
    zero.amp[0] = 1.0;  // |000>
    const auto x = apply_equatorial(zero, 1, 0.0);
    EXPECT_NEAR(std::abs(x.amp[4] - Amplitude(1.0, 0.0)), 0.0, 1e-15);
    const auto y = apply_equatorial(zero, 3, pi / 2.0);
    EXPECT_NEAR(std::abs(y.amp[1] - Amplitude(0.0, 1.0)), 0.0, 1e-15);
}

TEST(Correlator, Examples) {
    EXPECT_NEAR(ghz_correlator(0, 0, 0), 1.0, 1e-12);
    EXPECT_NEAR(ghz_correlator(pi, 0, 0), -1.0, 1e-12);
    EXPECT_NEAR(ghz_correlator(pi / 4, pi / 4, pi / 4), -std::sqrt(2.0) / 2.0, 1e-12);
}

TEST(Correlator, StatevectorMatchesClosedFormOnRandomAngles) {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> u(-2.0 * pi, 2.0 * pi);
    for (int t = 0; t < 10000; ++t) {
        const double a = u(rng), b = u(rng), c = u(rng);
        ASSERT_NEAR(ghz_correlator_statevector(a, b, c), std::cos(a + b + c), 1e-12);
    }
}

TEST(Correlator, DependsOnlyOnTheSum) {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> u(0.0, 2.0 * pi);
    for (int t = 0; t < 200; ++t) {
        const double a = u(rng), b = u(rng), c = u(rng), d = u(rng);
        EXPECT_NEAR(ghz_correlator(a, b, c), ghz_correlator(a + d, b - d, c), 1e-12);
    }
}

TEST(Behavior, GhzHasNoSignalingAndHalfIndeterminism) {
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> u(0.0, 2.0 * pi);
    for (int t = 0; t < 50; ++t) {
        const EquatorialAngles a({u(rng), u(rng), u(rng)}, {u(rng), u(rng), u(rng)});
        const Behavior b = ghz_behavior(a);
        EXPECT_NO_THROW(validate_behavior(b));
        EXPECT_NEAR(overall_signaling(b), 0.0, 1e-12);
        EXPECT_NEAR(indeterminism_degrees(b).overall, 0.5, 1e-12);
        EXPECT_NEAR(svetlichny_value(b), ghz_svetlichny(a), 1e-12);
    }
}

TEST(Angles, Canonical) {
    EXPECT_NEAR(canonical_angle(-pi / 2), 1.5 * pi, 1e-15);
    EXPECT_EQ(canonical_angle(0.0), 0.0);
    EXPECT_NEAR(canonical_angle(4.0 * pi + 0.25), 0.25, 1e-14);
    EXPECT_THROW(canonical_angle(std::nan("")), Error);
    const EquatorialAngles a({-1.0, 7.0, 0.0}, {0.0, 0.0, -0.5});
    for (int k = 0; k < 3; ++k) {
        EXPECT_GE(a.phi[k], 0.0);
        EXPECT_LT(a.phi[k], 2.0 * pi);
    }
}

TEST(Optimum, PublishedAnglesReachFourRootTwo) {
    EXPECT_NEAR(ghz_svetlichny(svetlichny_optimal_angles()), 4.0 * std::numbers::sqrt2, 1e-12);
}

TEST(Optimum, SearchReachesFourRootTwoQuickly) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto opt = maximize_svetlichny();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    EXPECT_NEAR(opt.value, 4.0 * std::numbers::sqrt2, 1e-6);
    EXPECT_GE(opt.value, opt.grid_value - 1e-12);
    EXPECT_NEAR(ghz_svetlichny(opt.angles), opt.value, 1e-12);
    EXPECT_LT(secs, 5.0);
}

TEST(Optimum, NeverExceedsFourRootTwo) {
    std::mt19937_64 rng(44);
    std::uniform_real_distribution<double> u(0.0, 2.0 * pi);
    for (int t = 0; t < 20000; ++t) {
        const EquatorialAngles a({u(rng), u(rng), u(rng)}, {u(rng), u(rng), u(rng)});
        ASSERT_LE(ghz_svetlichny(a), 4.0 * std::numbers::sqrt2 + 1e-12);
    }
}

TEST(Optimum, SymmetricAnsatzAlsoReachesFourRootTwo) {
    double best = -10;
    for (int k = 0; k < 4000; ++k) best = std::max(best, symmetric_ansatz_value(2.0 * pi * k / 4000.0));
    EXPECT_NEAR(best, 4.0 * std::numbers::sqrt2, 1e-5);
}

TEST(Optimum, RejectsBadResolution) {
    EXPECT_THROW(maximize_svetlichny(0.0), Error);
    EXPECT_THROW(maximize_svetlichny(1e-4), Error);
}

}  // namespace
}  // namespace relsvet
