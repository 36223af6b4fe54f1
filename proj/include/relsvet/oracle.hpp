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

/// Exact minimization of the J penalty over every assignment matrix a budget
/// (I, S, scenario) allows:
///   - every entry lies in [0, I] or [1 - I, 1];
///   - entries of one linkage group differ by at most S, or not at all when
///     the scenario forbids the group's direction;
///   - below the gap a group keeps all entries in one subinterval;
///   - each setting's marginals admit a nonnegative joint distribution.
///
/// Two modes:
///   EndpointEnumeration  branch over subinterval choices; each branch is a
///                        polytope solved exactly by the dense simplex.
///   GridSearch           every entry restricted to multiples of grid_step
///                        and the budget rounded down to the grid; branches
///                        additionally on off-grid relaxation values.

#include "relsvet/bounds.hpp"
#include "relsvet/detail/branch_and_bound.hpp"
#include "relsvet/linkage.hpp"
#include "relsvet/lp.hpp"
#include "relsvet/svetlichny.hpp"
#include "relsvet/witness.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace relsvet {

enum class OracleMode { EndpointEnumeration, GridSearch };

constexpr std::string_view mode_name(OracleMode m) {
    return m == OracleMode::EndpointEnumeration ? "endpoint" : "grid";
}

inline OracleMode parse_mode(std::string_view s) {
    if (s == "endpoint") return OracleMode::EndpointEnumeration;
    if (s == "grid") return OracleMode::GridSearch;
    throw Error(ErrorKind::DomainError, "unknown oracle mode '" + std::string(s) + "' (expected endpoint or grid)");
}

inline int default_parallel_width() {
    const unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : static_cast<int>(std::min(n, 8u));
}

struct OracleConfig {
    OracleMode mode = OracleMode::EndpointEnumeration;
    double grid_step = 0.005;
    double tolerance = 1e-9;
    int parallel_width = default_parallel_width();
    long node_budget = 5'000'000;
    int work_units = 32;
};

struct OracleReport {
    double I = 0.0;
    double S = 0.0;
    Scenario scenario = Scenario::Simultaneous;
    Regime regime;
    OracleMode mode = OracleMode::EndpointEnumeration;
    double grid_step = 0.0;  // GridSearch only
    double J_min = 0.0;
    AssignmentMatrix attaining{};
    std::array<double, kNumSettings> c{};  // a completion attaining E = 8 - 2 J_min
    double closed_form_J = 0.0;
    double closed_form_bound = 0.0;
    bool matches_closed_form = false;
    double tolerance = 0.0;
    LinkageConsumption consumption;
    long nodes = 0;
    int work_units = 0;
    double wall_seconds = 0.0;
};

inline double bound_from_oracle(const OracleReport &r) { return 8.0 - 2.0 * r.J_min; }

namespace detail {

inline constexpr int kEntries = kNumSettings * kNumMarginals;

inline constexpr std::size_t entry(std::size_t slot, int marginal) {
    return slot * kNumMarginals + static_cast<std::size_t>(marginal);
}

struct GroupPlan {
    std::vector<std::size_t> entries;
    double budget = 0.0;
};

inline std::vector<GroupPlan> group_plans(Scenario scenario, double S) {
    std::vector<GroupPlan> plans;
    for (const auto &g : linkage_groups()) {
        GroupPlan p;
        p.budget = group_budget(g, scenario, S);
        for (const auto s : g.members) p.entries.push_back(entry(s.slot(), g.marginal));
        plans.push_back(p);
    }
    return plans;
}

inline const std::array<int, kEntries> &entry_groups() {
    static const auto table = [] {
        std::array<int, kEntries> t{};
        for (const auto s : all_settings()) {
            for (int j = 0; j < kNumMarginals; ++j) t[entry(s.slot(), j)] = group_of(s, j);
        }
        return t;
    }();
    return table;
}

// ---------------------------------------------------------------------------
// Both modes share one node relaxation: the entries' boxes, the linkage
// budgets and nonnegative joint reconstructions form a polytope over which
// E is maximized exactly. Branching removes relaxation points that sit inside
// the gap (both modes) or off the grid (GridSearch).

struct BoxNode {
    std::array<double, kEntries> lo{};
    std::array<double, kEntries> hi{};
};

class PolytopeEngine {
  public:
    /// step == 0 selects the continuous (endpoint) search. `below` applies the
    /// same-subinterval rule to whole linkage groups.
    PolytopeEngine(double I, double S, Scenario scenario, double step, bool below)
        : I_(I), step_(step), below_(below), plans_(group_plans(scenario, S)) {}

    BoxNode root() const {
        BoxNode n;
        n.lo.fill(0.0);
        n.hi.fill(1.0);
        return n;
    }

    Expansion<BoxNode> operator()(const BoxNode &node) const {
        Expansion<BoxNode> out;
        const auto &lo = node.lo;
        const auto &hi = node.hi;

        // Columns: x_e = m_e - lo_e (48), then c per setting (8).
        const int n = kEntries + kNumSettings;
        std::vector<std::vector<double>> A;
        std::vector<double> b;
        A.reserve(256);
        auto add = [&](std::vector<double> row, double rhs) {
            A.push_back(std::move(row));
            b.push_back(rhs);
        };
        for (int e = 0; e < kEntries; ++e) {
            std::vector<double> row(n, 0.0);
            row[e] = 1.0;
            add(std::move(row), hi[e] - lo[e]);
        }
        for (const auto s : all_settings()) {
            for (int k = 0; k < kNumOutcomes; ++k) {
                // -(coef . (c, m)) <= constant, written in x.
                const auto &rec = relsvet::detail::kReconstruction[k];
                std::vector<double> row(n, 0.0);
                double rhs = rec.constant;
                row[kEntries + s.slot()] = -rec.coef_c;
                for (int j = 0; j < kNumMarginals; ++j) {
                    const std::size_t e = entry(s.slot(), j);
                    row[e] = -rec.coef_m[j];
                    rhs += rec.coef_m[j] * lo[e];
                }
                add(std::move(row), rhs);
            }
        }
        for (const auto &g : plans_) {
            for (std::size_t a = 0; a < g.entries.size(); ++a) {
                for (std::size_t c = a + 1; c < g.entries.size(); ++c) {
                    const std::size_t ea = g.entries[a], ec = g.entries[c];
                    std::vector<double> row(n, 0.0);
                    row[ea] = 1.0;
                    row[ec] = -1.0;
                    add(row, g.budget - (lo[ea] - lo[ec]));
                    row[ea] = -1.0;
                    row[ec] = 1.0;
                    add(std::move(row), g.budget + (lo[ea] - lo[ec]));
                }
            }
        }
        std::vector<double> obj(n, 0.0);
        double offset = 0.0;
        for (const auto s : all_settings()) {
            const double sign = s.svetlichny_sign();
            obj[kEntries + s.slot()] = 8.0 * sign;
            offset -= sign;
            for (int j = 0; j < kNumMarginals; ++j) {
                const double w = (j < 3 ? -4.0 : 2.0) * sign;
                obj[entry(s.slot(), j)] = w;
                offset += w * lo[entry(s.slot(), j)];
            }
        }

        const lp::Result r = lp::maximize(A, b, obj);
        if (r.status == lp::Status::Infeasible) {
            out.infeasible = true;
            return out;
        }
        if (r.status != lp::Status::Optimal) {
            throw Error(ErrorKind::CrossCheckMismatch, "node relaxation did not solve to optimality");
        }
        out.bound = (8.0 - (r.value + offset)) / 2.0;

        Candidate cand;
        std::array<double, kEntries> v{};
        for (int e = 0; e < kEntries; ++e) v[e] = std::clamp(r.x[e] + lo[e], lo[e], hi[e]);
        for (const auto s : all_settings()) {
            for (int j = 0; j < kNumMarginals; ++j) cand.m[s.slot()][j] = v[entry(s.slot(), j)];
            cand.c[s.slot()] = r.x[kEntries + s.slot()];
        }

        // The deepest gap entry decides the branch; below the gap its whole
        // group moves to one side.
        int worst = -1;
        double worst_depth = kSnap;
        for (int e = 0; e < kEntries; ++e) {
            const double depth = std::min(v[e] - I_, 1.0 - I_ - v[e]);
            if (depth > worst_depth) worst_depth = depth, worst = e;
        }
        if (worst >= 0) {
            const bool low_first = v[worst] - I_ <= 1.0 - I_ - v[worst];
            BoxNode low = node, high = node;
            const auto members = below_ ? plans_[entry_groups()[worst]].entries
                                        : std::vector<std::size_t>{static_cast<std::size_t>(worst)};
            for (const auto e : members) {
                low.hi[e] = std::min(low.hi[e], I_);
                high.lo[e] = std::max(high.lo[e], 1.0 - I_);
            }
            push_children(out, low, high, low_first);
            return out;
        }

        if (step_ > 0.0) {
            // Most fractional entry, measured in grid units.
            int frac_e = -1;
            double frac_best = kSnap / step_;
            for (int e = 0; e < kEntries; ++e) {
                const double u = v[e] / step_;
                const double f = std::min(u - std::floor(u), std::ceil(u) - u);
                if (f > frac_best) frac_best = f, frac_e = e;
            }
            if (frac_e >= 0) {
                const double u = v[frac_e] / step_;
                BoxNode down = node, up = node;
                down.hi[frac_e] = std::floor(u) * step_;
                up.lo[frac_e] = std::ceil(u) * step_;
                push_children(out, down, up, u - std::floor(u) <= 0.5);
                return out;
            }
            for (auto &row : cand.m) {
                for (auto &x : row) x = std::round(x / step_) * step_;
            }
        }
        cand.value = out.bound;
        out.leaf = cand;
        return out;
    }

  private:
    static constexpr double kSnap = 1e-9;

    static void push_children(Expansion<BoxNode> &out, const BoxNode &a, const BoxNode &b, bool a_first) {
        for (const BoxNode *c : {a_first ? &a : &b, a_first ? &b : &a}) {
            bool empty = false;
            for (int e = 0; e < kEntries; ++e) empty = empty || c->lo[e] > c->hi[e] + kSnap;
            if (!empty) out.children.push_back(*c);
        }
    }

    double I_;
    double step_;
    bool below_;
    std::vector<GroupPlan> plans_;
};

}  // namespace detail

/// Minimizes J for the budget. Throws DomainError for an invalid budget or
/// grid step, BudgetExceeded when the node budget runs out and
/// InfeasibleConstraints when no admissible matrix exists.
inline OracleReport minimize_j(double I, double S, Scenario scenario, const OracleConfig &cfg = {}) {
    validate_budget(I, S);
    if (cfg.parallel_width < 1) throw Error(ErrorKind::DomainError, "parallel width must be positive");
    if (cfg.node_budget < 1) throw Error(ErrorKind::DomainError, "node budget must be positive");
    const auto start = std::chrono::steady_clock::now();

    OracleReport rep;
    rep.I = I;
    rep.S = S;
    rep.scenario = scenario;
    rep.regime = regime_of(I, S, scenario);
    rep.mode = cfg.mode;
    rep.tolerance = cfg.tolerance;

    detail::SearchStats stats;
    std::optional<detail::Candidate> best;
    if (cfg.mode == OracleMode::EndpointEnumeration) {
        const detail::PolytopeEngine engine(I, S, scenario, 0.0, below_gap(I, S));
        best = detail::branch_and_bound(engine.root(), engine, 1e-9, cfg.parallel_width, cfg.work_units,
                                        cfg.node_budget, stats);
    } else {
        if (!(cfg.grid_step > 0.0 && cfg.grid_step <= 0.5)) {
            throw Error(ErrorKind::DomainError, "grid step must lie in (0, 1/2]");
        }
        const double inv = 1.0 / cfg.grid_step;
        if (std::abs(inv - std::round(inv)) > 1e-9 * inv) {
            throw Error(ErrorKind::DomainError, "1 / grid step must be an integer, got step " + std::to_string(cfg.grid_step));
        }
        rep.grid_step = cfg.grid_step;
        // The largest grid budget inside the requested one.
        const double h = cfg.grid_step;
        const double I_grid = std::floor(I / h + 1e-9) * h;
        const double S_grid = std::floor(S / h + 1e-9) * h;
        const detail::PolytopeEngine engine(I_grid, S_grid, scenario, h, below_gap(I, S));
        best = detail::branch_and_bound(engine.root(), engine, 1e-9, cfg.parallel_width, cfg.work_units,
                                        cfg.node_budget, stats);
    }
    if (!best) throw Error(ErrorKind::InfeasibleConstraints, "no admissible assignment matrix");

    rep.attaining = best->m;
    rep.J_min = j_functional(best->m);
    if (std::abs(rep.J_min - best->value) > 1e-7) {
        throw Error(ErrorKind::CrossCheckMismatch, "search value " + std::to_string(best->value) +
                                                       " disagrees with the penalty of its matrix " +
                                                       std::to_string(rep.J_min));
    }
    if (cfg.mode == OracleMode::EndpointEnumeration) {
        rep.c = best->c;
    } else {
        for (const auto s : all_settings()) {
            const auto &row = rep.attaining[s.slot()];
            const Interval r = c_range(row);
            rep.c[s.slot()] = s.svetlichny_sign() > 0 ? r.hi : r.lo;
        }
    }
    rep.closed_form_J = closed_form_j(I, S, scenario);
    rep.closed_form_bound = relaxed_bound(I, S, scenario);
    rep.matches_closed_form = std::abs(rep.J_min - rep.closed_form_J) <= cfg.tolerance;
    rep.consumption = linkage_consumption(rep.attaining);
    rep.nodes = stats.nodes;
    rep.work_units = stats.units;
    rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

}  // namespace relsvet
