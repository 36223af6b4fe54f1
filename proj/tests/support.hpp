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

// Shared fixtures for the test suites: canonical behaviors and seeded random
// generators.

#include "relsvet/relsvet.hpp"

#include <random>

namespace relsvet::testing {

inline OutcomeDistribution uniform_table() {
    OutcomeDistribution p;
    p.fill(1.0 / 8.0);
    return p;
}

inline OutcomeDistribution point_mass(int outcome) {
    OutcomeDistribution p{};
    p[static_cast<std::size_t>(outcome)] = 1.0;
    return p;
}

inline Behavior same_table_everywhere(const OutcomeDistribution &p) {
    HiddenState h;
    h.weight = 1.0;
    h.tables.fill(p);
    Behavior b;
    b.lambdas.push_back(h);
    return b;
}

inline Behavior uniform_behavior() { return same_table_everywhere(uniform_table()); }

// Exponential spacings give a uniform draw on the simplex. A coin decides
// whether some entries are zeroed, so faces of the simplex are covered too.
inline OutcomeDistribution random_distribution(std::mt19937_64 &rng) {
    std::exponential_distribution<double> e(1.0);
    std::bernoulli_distribution sparse(0.2);
    OutcomeDistribution p{};
    double total = 0.0;
    for (auto &v : p) {
        v = sparse(rng) ? 0.0 : e(rng);
        total += v;
    }
    if (total == 0.0) return point_mass(0);
    for (auto &v : p) v /= total;
    return p;
}

inline Behavior random_behavior(std::mt19937_64 &rng, int max_lambdas = 3) {
    std::uniform_int_distribution<int> n(1, max_lambdas);
    std::exponential_distribution<double> e(1.0);
    Behavior b;
    b.lambdas.resize(static_cast<std::size_t>(n(rng)));
    double total = 0.0;
    for (auto &h : b.lambdas) {
        h.weight = e(rng);
        total += h.weight;
        for (auto &t : h.tables) t = random_distribution(rng);
    }
    for (auto &h : b.lambdas) h.weight /= total;
    return b;
}

}  // namespace relsvet::testing
