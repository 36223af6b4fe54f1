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

// Behavior files are JSON documents:
//
//   {"lambdas": [{"weight": 1.0,
//                 "tables": {"1": [p+++, p++-, p+-+, p-++, p+--, p-+-, p--+, p---],
//                            ...
//                            "8": [...]}}]}

#include "relsvet/model.hpp"

#include <json.hpp>

#include <fstream>
#include <istream>
#include <sstream>
#include <string>

namespace relsvet {

inline nlohmann::json behavior_to_json(const Behavior &b) {
    nlohmann::json lambdas = nlohmann::json::array();
    for (const auto &h : b.lambdas) {
        nlohmann::json tables = nlohmann::json::object();
        for (const auto s : all_settings()) {
            tables[std::to_string(s.index())] = h.tables[s.slot()];
        }
        lambdas.push_back({{"weight", h.weight}, {"tables", tables}});
    }
    return {{"lambdas", lambdas}};
}

/// Parses and validates. `tolerance` applies to normalization checks so that
/// files written with a few significant digits still load.
inline Behavior behavior_from_json(const nlohmann::json &doc, double tolerance = kProbabilityTolerance) {
    auto fail = [](const std::string &msg, ErrorLocation where = {}) {
        throw Error(ErrorKind::ParseError, msg, where);
    };
    if (!doc.is_object() || !doc.contains("lambdas") || !doc["lambdas"].is_array()) {
        fail("expected an object with a 'lambdas' array");
    }
    Behavior b;
    const auto &lambdas = doc["lambdas"];
    for (std::size_t l = 0; l < lambdas.size(); ++l) {
        const auto &entry = lambdas[l];
        ErrorLocation where{l, std::nullopt, std::nullopt};
        if (!entry.is_object() || !entry.contains("weight") || !entry["weight"].is_number()) {
            fail("hidden state needs a numeric 'weight'", where);
        }
        if (!entry.contains("tables") || !entry["tables"].is_object()) {
            fail("hidden state needs a 'tables' object", where);
        }
        HiddenState h;
        h.weight = entry["weight"].get<double>();
        const auto &tables = entry["tables"];
        for (const auto &[key, value] : tables.items()) {
            int label = 0;
            try {
                std::size_t used = 0;
                label = std::stoi(key, &used);
                if (used != key.size()) label = 0;
            } catch (const std::exception &) {
                label = 0;
            }
            if (label < 1 || label > kNumSettings) fail("unknown setting key '" + key + "'", where);
        }
        for (const auto s : all_settings()) {
            const std::string key = std::to_string(s.index());
            where.setting = s.index();
            if (!tables.contains(key)) {
                throw Error(ErrorKind::MissingSetting, "no table for setting " + key, where);
            }
            const auto &row = tables[key];
            if (!row.is_array() || row.size() != kNumOutcomes) {
                fail("table for setting " + key + " must hold 8 numbers", where);
            }
            for (int k = 0; k < kNumOutcomes; ++k) {
                if (!row[k].is_number()) fail("non-numeric probability in setting " + key, where);
                h.tables[s.slot()][k] = row[k].get<double>();
            }
        }
        b.lambdas.push_back(h);
    }
    validate_behavior(b, tolerance);
    return b;
}

inline Behavior read_behavior(std::istream &in, double tolerance = kProbabilityTolerance) {
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
    return behavior_from_json(doc, tolerance);
}

inline Behavior load_behavior(const std::string &path, double tolerance = kProbabilityTolerance) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
    return read_behavior(in, tolerance);
}

inline void save_behavior(const Behavior &b, const std::string &path) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path);
    out << behavior_to_json(b).dump(2) << '\n';
}

}  // namespace relsvet
