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

#include <cmath>
#include <set>

namespace relsvet {
namespace {

double direction_shift(const LinkageConsumption &c, Direction d) {
    for (std::size_t k = 0; k < kAllDirections.size(); ++k) {
        if (kAllDirections[k] == d) return c.direction_shift[k];
    }
    return -1.0;
}

constexpr Direction kOneToPair(int p) { return {Direction::Kind::OneToPair, p}; }
constexpr Direction kPairToOne(int p) { return {Direction::Kind::PairToOne, p}; }

TEST(LinkageGroups, PartitionTheEntries) {
    const auto &gs = linkage_groups();
    ASSERT_EQ(gs.size(), 18u);
    std::set<std::pair<int, int>> seen;
    for (const auto &g : gs) {
        EXPECT_EQ(g.members.size(), g.marginal >= 3 ? 4u : 2u) << g.name();
        for (const auto s : g.members) EXPECT_TRUE(seen.insert({s.index(), g.marginal}).second) << g.name();
    }
    EXPECT_EQ(seen.size(), 48u);
    for (const auto s : all_settings()) {
        for (int j = 0; j < kNumMarginals; ++j) {
            const auto &g = gs[static_cast<std::size_t>(group_of(s, j))];
            EXPECT_EQ(g.marginal, j);
            EXPECT_NE(std::find(g.members.begin(), g.members.end(), s), g.members.end());
        }
    }
}

TEST(LinkageGroups, MembersShareTheMarginalsOwnSettings) {
    // A single marginal of party k is linked across changes of the other two
    // settings; a pair marginal across changes of the third.
    for (const auto &g : linkage_groups()) {
        const auto first = g.members.front().context();
        for (const auto s : g.members) {
            const auto ctx = s.context();
            if (g.direction.kind == Direction::Kind::PairToOne) {
                EXPECT_EQ(ctx[g.direction.party], first[g.direction.party]);
            } else {
                for (int q = 1; q <= 3; ++q) {
                    if (q != g.direction.party) {
                        EXPECT_EQ(ctx[q], first[q]);
                    }
                }
            }
        }
    }
    EXPECT_EQ(excluded_party(0), 1);
    EXPECT_EQ(excluded_party(1), 3);
    EXPECT_EQ(excluded_party(2), 2);
}

TEST(LinkageGroups, BudgetsFollowTheScenario) {
    int open_send = 0, open_receive = 0;
    for (const auto &g : linkage_groups()) {
        EXPECT_EQ(group_budget(g, Scenario::Simultaneous, 0.3), 0.3);
        open_send += group_budget(g, Scenario::RestrictedSend, 0.3) > 0;
        open_receive += group_budget(g, Scenario::RestrictedReceive, 0.3) > 0;
    }
    // Send: 3->12 (four m2 groups) plus 23->1 and 13->2 (two groups each).
    EXPECT_EQ(open_send, 8);
    // Receive: 12->3 (two groups) plus 1->23 and 2->13 (four groups each).
    EXPECT_EQ(open_receive, 10);
}

TEST(Witness, PublishedWitnessesCertify) {
    struct Case {
        double I, S;
        Scenario sc;
        double J;
    };
    const Case cases[] = {
        {0.1, 0.0, Scenario::Simultaneous, 2.0 * (1.0 - 3.0 * 0.1)},
        {0.23, 0.0, Scenario::Simultaneous, 6.0 * (1.0 - 4.0 * 0.23)},
        {0.3, 0.0, Scenario::Simultaneous, 0.0},
        {0.2, 0.7, Scenario::Simultaneous, 0.0},
        {0.15, 0.0, Scenario::RestrictedSend, 2.0 * (1.0 - 2.0 * 0.15)},
        {0.15, 0.8, Scenario::RestrictedSend, 0.0},
    };
    for (const auto &c : cases) {
        const auto w = witness_assignment(regime_of(c.I, c.S, c.sc), c.I);
        EXPECT_TRUE(w.published);
        const auto r = verify_witness(w, c.I);
        EXPECT_TRUE(r.membership_ok) << w.regime.name();
        EXPECT_TRUE(r.j_match) << w.regime.name() << " J=" << r.j_value;
        EXPECT_NEAR(r.j_value, c.J, 1e-12) << w.regime.name();
        EXPECT_EQ(r.consumption.group_shift.size(), 18u);
    }
}

TEST(Witness, LowBandConsumption) {
    const double I = 0.1;
    const auto r = verify_witness(witness_assignment(regime_of(I, 0.0, Scenario::Simultaneous), I), I);
    EXPECT_NEAR(direction_shift(r.consumption, kOneToPair(1)), I, 1e-12);
    EXPECT_NEAR(direction_shift(r.consumption, kOneToPair(2)), I, 1e-12);
    EXPECT_NEAR(direction_shift(r.consumption, kPairToOne(2)), I, 1e-12);
    EXPECT_EQ(direction_shift(r.consumption, kPairToOne(1)), 0.0);
}

TEST(Witness, AboveGapConsumption) {
    // m5 sits at 1 - I on settings 1..6 and 0 on 7 and 8.
    const double I = 0.2;
    const auto r = verify_witness(witness_assignment(regime_of(I, 0.7, Scenario::Simultaneous), I), I);
    const double m5 = direction_shift(r.consumption, kPairToOne(2));
    EXPECT_NEAR(m5, 1.0 - I, 1e-12);
    EXPECT_GE(m5, 1.0 - 2.0 * I);
}

TEST(Witness, MembershipFailsForSmallerIndeterminism) {
    const auto w = witness_assignment(regime_of(0.1, 0.0, Scenario::Simultaneous), 0.1);
    const auto r = verify_witness(w, 0.01);
    EXPECT_FALSE(r.membership_ok);
    EXPECT_FALSE(r.outside_subintervals.empty());
    for (const auto &e : r.outside_subintervals) EXPECT_TRUE(std::abs(e.value - 0.1) < 1e-12 || std::abs(e.value - 0.9) < 1e-12) << e.value;
}

TEST(Witness, ReceiveBelowGapIsUnsupported) {
    try {
        witness_assignment(regime_of(0.1, 0.0, Scenario::RestrictedReceive), 0.1);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::UnsupportedRegime);
    }
}

TEST(Witness, ConstructedReceiveWitnessAboveGap) {
    const double I = 0.3;
    const auto w = witness_assignment(regime_of(I, 0.5, Scenario::RestrictedReceive), I);
    EXPECT_FALSE(w.published);
    const auto r = verify_witness(w, I);
    EXPECT_TRUE(r.membership_ok);
    EXPECT_NEAR(r.j_value, 0.0, 1e-12);
    // Only receive-permitted directions are used.
    for (std::size_t d = 0; d < kAllDirections.size(); ++d) {
        if (!permits(Scenario::RestrictedReceive, kAllDirections[d])) {
            EXPECT_EQ(r.consumption.direction_shift[d], 0.0);
        }
    }
}

TEST(Witness, BandMismatch) {
    Regime r = regime_of(0.1, 0.0, Scenario::Simultaneous);
    r.band = IBand::High;
    EXPECT_THROW(witness_assignment(r, 0.1), Error);
}

TEST(ClosedFormJ, AgreesWithTheBound) {
    for (const auto sc : kAllScenarios) {
        for (const double I : {0.0, 0.1, 0.2, 0.24, 0.3, 0.45}) {
            for (const double S : {0.0, 0.05, 0.5, 1.0}) {
                EXPECT_NEAR(closed_form_j(regime_of(I, S, sc), I), closed_form_j(I, S, sc), 1e-12);
            }
        }
    }
}

}  // namespace
}  // namespace relsvet
