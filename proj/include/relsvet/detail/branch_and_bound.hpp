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

// Deterministic parallel branch-and-bound for minimization.
//
// The root is expanded breadth-first into a fixed list of work units.
// Phase one searches the units in parallel, all sharing one atomic incumbent
// value and pruning ties against it, and yields the optimal value. Phase two
// walks the units again in their fixed order and returns the first leaf in
// depth-first order that attains that value. The returned matrix therefore
// depends only on the expansion rule, never on the number of threads or on
// scheduling.

#include "relsvet/error.hpp"
#include "relsvet/svetlichny.hpp"

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <deque>
#include <exception>
#include <iterator>
#include <limits>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace relsvet::detail {

struct Candidate {
    double value = 0.0;
    AssignmentMatrix m{};
    std::array<double, kNumSettings> c{};
};

template <class Node>
struct Expansion {
    bool infeasible = false;
    double bound = 0.0;               // lower bound on every leaf below
    std::optional<Candidate> leaf;    // set when the node's relaxation is already feasible
    std::vector<Node> children;       // searched in this order
};

struct SearchStats {
    long nodes = 0;
    int units = 0;
};

inline void atomic_min(std::atomic<double> &target, double v) {
    double cur = target.load(std::memory_order_relaxed);
    while (v < cur && !target.compare_exchange_weak(cur, v, std::memory_order_relaxed)) {
    }
}

/// `expand(node)` must be deterministic and thread-safe. `tol` is the value
/// tolerance used for pruning and tie detection.
template <class Node, class Expand>
std::optional<Candidate> branch_and_bound(const Node &root, Expand expand, double tol, int threads, int target_units,
                                          long node_budget, SearchStats &stats) {
    std::atomic<long> nodes{0};
    std::atomic<double> best{std::numeric_limits<double>::infinity()};
    auto count_node = [&] {
        if (nodes.fetch_add(1, std::memory_order_relaxed) + 1 > node_budget) {
            throw Error(ErrorKind::BudgetExceeded, "search exceeded the node budget of " + std::to_string(node_budget));
        }
    };

    std::vector<Candidate> early;  // leaves met while building the frontier, in order
    std::deque<Node> frontier{root};
    while (!frontier.empty() && static_cast<int>(frontier.size()) < target_units) {
        Node n = std::move(frontier.front());
        frontier.pop_front();
        count_node();
        Expansion<Node> e = expand(n);
        if (e.infeasible) continue;
        if (e.leaf) {
            atomic_min(best, e.leaf->value);
            early.push_back(*e.leaf);
            continue;
        }
        for (auto &child : e.children) frontier.push_back(std::move(child));
    }
    const std::vector<Node> units(std::make_move_iterator(frontier.begin()), std::make_move_iterator(frontier.end()));

    // Phase one: the optimal value.
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::atomic<bool> abort{false};
    auto worker = [&] {
        try {
            for (std::size_t u; (u = next.fetch_add(1)) < units.size() && !abort.load();) {
                std::vector<Node> stack{units[u]};
                while (!stack.empty() && !abort.load(std::memory_order_relaxed)) {
                    Node n = std::move(stack.back());
                    stack.pop_back();
                    count_node();
                    Expansion<Node> e = expand(n);
                    if (e.infeasible || e.bound >= best.load(std::memory_order_relaxed) - tol) continue;
                    if (e.leaf) {
                        atomic_min(best, e.leaf->value);
                        continue;
                    }
                    for (auto it = e.children.rbegin(); it != e.children.rend(); ++it) stack.push_back(std::move(*it));
                }
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            abort.store(true);
        }
    };
    const int n_threads = std::max(1, std::min<int>(threads, static_cast<int>(units.size())));
    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
        for (auto &t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    stats.units = static_cast<int>(units.size());
    const double target = best.load();
    std::optional<Candidate> pick;
    if (target == std::numeric_limits<double>::infinity()) {
        stats.nodes = nodes.load();
        return pick;
    }

    // Phase two: first leaf attaining the optimum in the fixed order.
    for (const auto &c : early) {
        if (c.value <= target + tol) {
            pick = c;
            break;
        }
    }
    for (std::size_t u = 0; !pick && u < units.size(); ++u) {
        std::vector<Node> stack{units[u]};
        while (!stack.empty()) {
            Node n = std::move(stack.back());
            stack.pop_back();
            count_node();
            Expansion<Node> e = expand(n);
            if (e.infeasible || e.bound > target + tol) continue;
            if (e.leaf) {
                if (e.leaf->value <= target + tol) {
                    pick = *e.leaf;
                    break;
                }
                continue;
            }
            for (auto it = e.children.rbegin(); it != e.children.rend(); ++it) stack.push_back(std::move(*it));
        }
    }
    stats.nodes = nodes.load();
    if (!pick) throw Error(ErrorKind::CrossCheckMismatch, "optimal value found in the parallel phase was not reattained");
    return pick;
}

}  // namespace relsvet::detail
