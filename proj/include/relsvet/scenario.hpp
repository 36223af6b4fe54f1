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

#include "relsvet/error.hpp"

#include <array>
#include <string>
#include <string_view>

namespace relsvet {

/// Which signaling directions a relaxation may use.
///   Simultaneous:      every direction between the pair group and the lone party.
///   RestrictedSend:    party 3 signals out: 3->12, 13->2, 23->1.
///   RestrictedReceive: party 3 is signaled to: 12->3, 1->23, 2->13.
enum class Scenario { Simultaneous, RestrictedSend, RestrictedReceive };

inline constexpr std::array<Scenario, 3> kAllScenarios = {Scenario::Simultaneous, Scenario::RestrictedSend,
                                                          Scenario::RestrictedReceive};

constexpr std::string_view scenario_name(Scenario s) {
    switch (s) {
    case Scenario::Simultaneous: return "simultaneous";
    case Scenario::RestrictedSend: return "send";
    case Scenario::RestrictedReceive: return "receive";
    }
    return "?";
}

inline Scenario parse_scenario(std::string_view name) {
    for (const auto s : kAllScenarios) {
        if (scenario_name(s) == name) return s;
    }
    throw Error(ErrorKind::DomainError,
                "unknown scenario '" + std::string(name) + "' (expected simultaneous, send or receive)");
}

/// A signaling direction. OneToPair with party i is S_{i->jk}: a change of
/// party i's setting moves the (j,k) pair marginal. PairToOne with party k is
/// S_{ij->k}: changes of the other two settings move party k's marginal.
struct Direction {
    enum class Kind { OneToPair, PairToOne };
    Kind kind = Kind::OneToPair;
    int party = 1;

    constexpr bool operator==(const Direction &) const = default;

    std::string name() const {
        static constexpr std::array<std::string_view, 3> kPairOf = {"23", "13", "12"};
        const std::string p = std::to_string(party);
        if (kind == Kind::OneToPair) return p + "->" + std::string(kPairOf[party - 1]);
        return std::string(kPairOf[party - 1]) + "->" + p;
    }
};

inline constexpr std::array<Direction, 6> kAllDirections = {{
    {Direction::Kind::OneToPair, 1},
    {Direction::Kind::OneToPair, 2},
    {Direction::Kind::OneToPair, 3},
    {Direction::Kind::PairToOne, 1},
    {Direction::Kind::PairToOne, 2},
    {Direction::Kind::PairToOne, 3},
}};

constexpr bool permits(Scenario s, Direction d) {
    using K = Direction::Kind;
    switch (s) {
    case Scenario::Simultaneous: return true;
    case Scenario::RestrictedSend:
        return (d.kind == K::OneToPair && d.party == 3) || (d.kind == K::PairToOne && d.party != 3);
    case Scenario::RestrictedReceive:
        return (d.kind == K::PairToOne && d.party == 3) || (d.kind == K::OneToPair && d.party != 3);
    }
    return false;
}

}  // namespace relsvet
