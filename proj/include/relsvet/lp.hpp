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

/// Small dense two-phase simplex:  maximize c.x  subject to  A x <= b, x >= 0.
/// Sized for the oracle's node problems (a few hundred rows, ~60 columns).
/// Dantzig pricing with Bland's rule after a run of degenerate pivots.

#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

namespace relsvet::lp {

enum class Status { Optimal, Infeasible, Unbounded, IterationLimit };

struct Result {
    Status status = Status::Infeasible;
    double value = 0.0;
    std::vector<double> x;
};

class DenseSimplex {
  public:
    DenseSimplex(const std::vector<std::vector<double>> &A, const std::vector<double> &b, const std::vector<double> &c,
                 double eps = 1e-10)
        : m_(static_cast<int>(b.size())), n_(static_cast<int>(c.size())), eps_(eps), basis_(m_), nonbasis_(n_ + 1),
          D_(static_cast<std::size_t>(m_ + 2), std::vector<double>(static_cast<std::size_t>(n_ + 2), 0.0)) {
        for (int i = 0; i < m_; ++i) {
            for (int j = 0; j < n_; ++j) at(i, j) = A[i][j];
        }
        for (int i = 0; i < m_; ++i) {
            basis_[i] = n_ + i;
            at(i, n_) = -1.0;
            at(i, n_ + 1) = b[i];
        }
        for (int j = 0; j < n_; ++j) {
            nonbasis_[j] = j;
            at(m_, j) = -c[j];
        }
        nonbasis_[n_] = -1;
        at(m_ + 1, n_) = 1.0;
    }

    Result solve(long max_pivots = 200000) {
        Result r;
        pivots_left_ = max_pivots;
        int row = 0;
        for (int i = 1; i < m_; ++i) {
            if (at(i, n_ + 1) < at(row, n_ + 1)) row = i;
        }
        if (m_ > 0 && at(row, n_ + 1) < -eps_) {
            pivot(row, n_);
            if (!run(1) || at(m_ + 1, n_ + 1) < -eps_) {
                r.status = pivots_left_ <= 0 ? Status::IterationLimit : Status::Infeasible;
                return r;
            }
            for (int i = 0; i < m_; ++i) {
                if (basis_[i] == -1) {
                    int s = -1;
                    for (int j = 0; j <= n_; ++j) {
                        if (s == -1 || at(i, j) < at(i, s) || (at(i, j) == at(i, s) && nonbasis_[j] < nonbasis_[s])) s = j;
                    }
                    pivot(i, s);
                }
            }
        }
        if (!run(2)) {
            r.status = pivots_left_ <= 0 ? Status::IterationLimit : Status::Unbounded;
            return r;
        }
        r.status = Status::Optimal;
        r.x.assign(static_cast<std::size_t>(n_), 0.0);
        for (int i = 0; i < m_; ++i) {
            if (basis_[i] < n_ && basis_[i] >= 0) r.x[static_cast<std::size_t>(basis_[i])] = at(i, n_ + 1);
        }
        r.value = at(m_, n_ + 1);
        return r;
    }

  private:
    double &at(int i, int j) { return D_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }

    void pivot(int r, int s) {
        const double inv = 1.0 / at(r, s);
        auto &pr = D_[static_cast<std::size_t>(r)];
        for (int i = 0; i < m_ + 2; ++i) {
            if (i == r) continue;
            auto &row = D_[static_cast<std::size_t>(i)];
            const double f = row[static_cast<std::size_t>(s)] * inv;
            if (f == 0.0) continue;
            for (int j = 0; j < n_ + 2; ++j) row[static_cast<std::size_t>(j)] -= pr[static_cast<std::size_t>(j)] * f;
            row[static_cast<std::size_t>(s)] = -f;
        }
        for (int j = 0; j < n_ + 2; ++j) {
            if (j != s) pr[static_cast<std::size_t>(j)] *= inv;
        }
        pr[static_cast<std::size_t>(s)] = inv;
        std::swap(basis_[static_cast<std::size_t>(r)], nonbasis_[static_cast<std::size_t>(s)]);
        --pivots_left_;
    }

    bool run(int phase) {
        const int x = phase == 1 ? m_ + 1 : m_;
        int degenerate_run = 0;
        while (pivots_left_ > 0) {
            const bool bland = degenerate_run > 50;
            int s = -1;
            for (int j = 0; j <= n_; ++j) {
                if (phase == 2 && nonbasis_[j] == -1) continue;
                if (at(x, j) >= -eps_) continue;
                if (s == -1) {
                    s = j;
                } else if (bland) {
                    if (nonbasis_[j] < nonbasis_[s]) s = j;
                } else if (at(x, j) < at(x, s) || (at(x, j) == at(x, s) && nonbasis_[j] < nonbasis_[s])) {
                    s = j;
                }
            }
            if (s == -1) return true;
            int r = -1;
            for (int i = 0; i < m_; ++i) {
                if (at(i, s) < eps_) continue;
                if (r == -1) {
                    r = i;
                    continue;
                }
                const double lhs = at(i, n_ + 1) / at(i, s);
                const double rhs = at(r, n_ + 1) / at(r, s);
                if (lhs < rhs - 1e-15 || (std::abs(lhs - rhs) <= 1e-15 && basis_[i] < basis_[r])) r = i;
            }
            if (r == -1) return false;
            degenerate_run = at(r, n_ + 1) < eps_ ? degenerate_run + 1 : 0;
            pivot(r, s);
        }
        return false;
    }

    int m_, n_;
    double eps_;
    std::vector<int> basis_, nonbasis_;
    std::vector<std::vector<double>> D_;
    long pivots_left_ = 0;
};

inline Result maximize(const std::vector<std::vector<double>> &A, const std::vector<double> &b,
                       const std::vector<double> &c) {
    return DenseSimplex(A, b, c).solve();
}

}  // namespace relsvet::lp
