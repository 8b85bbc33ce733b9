#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include "swarm_assign/errors.hpp"

namespace swarm_assign {

struct SimplexResult {
  bool optimal{false};  // false = unbounded
  double value{0.0};
  std::vector<double> x;     // structural variables
  std::vector<double> dual;  // one multiplier per row, >= 0 at optimum
  int iterations{0};
};

/// Dense tableau simplex for: maximize c'x subject to Ax <= b, x >= 0,
/// with b >= 0 (the all-slack basis is the start). Deterministic pivoting:
/// Dantzig with lowest-index ties, falling back to Bland's rule to rule out
/// cycling on degenerate instances.
inline SimplexResult simplex_max(const std::vector<std::vector<double>>& A,
                                 const std::vector<double>& b,
                                 const std::vector<double>& c) {
  const int m = static_cast<int>(A.size());
  const int n = static_cast<int>(c.size());
  const int rhs = n + m;
  constexpr double kReducedCostTol = 1e-10;
  constexpr double kPivotTol = 1e-9;

  std::vector<std::vector<double>> T(static_cast<std::size_t>(m + 1),
                                     std::vector<double>(static_cast<std::size_t>(n + m + 1), 0.0));
  for (int i = 0; i < m; ++i) {
    if (b[static_cast<std::size_t>(i)] < 0.0)
      throw Error("simplex_max requires b >= 0");
    for (int j = 0; j < n; ++j)
      T[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          A[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    T[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + i)] = 1.0;
    T[static_cast<std::size_t>(i)][static_cast<std::size_t>(rhs)] = b[static_cast<std::size_t>(i)];
  }
  for (int j = 0; j < n; ++j)
    T[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)] = -c[static_cast<std::size_t>(j)];

  std::vector<int> basis(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) basis[static_cast<std::size_t>(i)] = n + i;

  SimplexResult res;
  const int dantzig_limit = 50 * (n + m + 1);
  const int hard_limit = 500 * (n + m + 1) + 100000;
  for (;;) {
    // Entering column.
    int enter = -1;
    if (res.iterations < dantzig_limit) {
      double best = -kReducedCostTol;
      for (int j = 0; j < n + m; ++j) {
        const double rc = T[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)];
        if (rc < best) {
          best = rc;
          enter = j;
        }
      }
    } else {
      for (int j = 0; j < n + m; ++j) {
        if (T[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)] < -kReducedCostTol) {
          enter = j;
          break;
        }
      }
    }
    if (enter < 0) break;  // optimal

    // Ratio test; ties resolved by lowest leaving basis variable index.
    int leave = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (int i = 0; i < m; ++i) {
      const double a = T[static_cast<std::size_t>(i)][static_cast<std::size_t>(enter)];
      if (a > kPivotTol) {
        const double ratio = T[static_cast<std::size_t>(i)][static_cast<std::size_t>(rhs)] / a;
        if (ratio < best_ratio - 1e-12 ||
            (ratio < best_ratio + 1e-12 &&
             (leave < 0 || basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(leave)]))) {
          best_ratio = ratio;
          leave = i;
        }
      }
    }
    if (leave < 0) {
      res.optimal = false;  // unbounded direction
      return res;
    }

    // Pivot on (leave, enter).
    std::vector<double>& prow = T[static_cast<std::size_t>(leave)];
    const double piv = prow[static_cast<std::size_t>(enter)];
    for (double& v : prow) v /= piv;
    for (int i = 0; i <= m; ++i) {
      if (i == leave) continue;
      std::vector<double>& row = T[static_cast<std::size_t>(i)];
      const double f = row[static_cast<std::size_t>(enter)];
      if (f == 0.0) continue;
      for (int j = 0; j <= rhs; ++j)
        row[static_cast<std::size_t>(j)] -= f * prow[static_cast<std::size_t>(j)];
      row[static_cast<std::size_t>(enter)] = 0.0;
    }
    basis[static_cast<std::size_t>(leave)] = enter;

    if (++res.iterations > hard_limit) throw Error("simplex iteration limit exceeded");
  }

  res.optimal = true;
  res.x.assign(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < m; ++i) {
    const int v = basis[static_cast<std::size_t>(i)];
    if (v < n)
      res.x[static_cast<std::size_t>(v)] =
          T[static_cast<std::size_t>(i)][static_cast<std::size_t>(rhs)];
  }
  res.value = T[static_cast<std::size_t>(m)][static_cast<std::size_t>(rhs)];
  res.dual.assign(static_cast<std::size_t>(m), 0.0);
  for (int i = 0; i < m; ++i)
    res.dual[static_cast<std::size_t>(i)] =
        T[static_cast<std::size_t>(m)][static_cast<std::size_t>(n + i)];
  return res;
}

/// A mixed packing/covering subproblem over primitive variables: per-row
/// packing sums bounded above, per-row covering sums must reach the shared
/// objective w.
struct MpcpProblem {
  int num_vars{0};
  std::vector<std::vector<int>> packing_vars;
  std::vector<double> packing_bound;
  std::vector<std::vector<std::pair<int, double>>> covering;  // (var, weight)
};

struct MpcpLpResult {
  double w{0.0};
  std::vector<double> x;
  std::vector<double> dual;  // packing rows first, then covering rows
  bool bounded{true};
};

/// Exact max-min LP value via simplex: maximize w s.t. packing sums <= bound,
/// covering sums >= w, x >= 0. With no covering rows the program is
/// unbounded; callers treat that as w = 0, x = 0.
inline MpcpLpResult solve_max_min_lp(const MpcpProblem& p) {
  MpcpLpResult out;
  if (p.covering.empty()) {
    out.w = 0.0;
    out.x.assign(static_cast<std::size_t>(p.num_vars), 0.0);
    out.bounded = false;
    return out;
  }
  const int n = p.num_vars + 1;  // x variables plus w
  const int w_col = p.num_vars;
  const int m = static_cast<int>(p.packing_vars.size() + p.covering.size());
  std::vector<std::vector<double>> A(static_cast<std::size_t>(m),
                                     std::vector<double>(static_cast<std::size_t>(n), 0.0));
  std::vector<double> b(static_cast<std::size_t>(m), 0.0);
  std::size_t row = 0;
  for (std::size_t i = 0; i < p.packing_vars.size(); ++i, ++row) {
    for (const int v : p.packing_vars[i]) A[row][static_cast<std::size_t>(v)] = 1.0;
    b[row] = p.packing_bound[i];
  }
  for (const auto& cov : p.covering) {
    A[row][static_cast<std::size_t>(w_col)] = 1.0;
    for (const auto& [v, c] : cov) A[row][static_cast<std::size_t>(v)] -= c;
    b[row] = 0.0;
    ++row;
  }
  std::vector<double> c(static_cast<std::size_t>(n), 0.0);
  c[static_cast<std::size_t>(w_col)] = 1.0;
  SimplexResult lp = simplex_max(A, b, c);
  if (!lp.optimal) throw Error("max-min LP unexpectedly unbounded");
  out.w = lp.value;
  out.x.assign(lp.x.begin(), lp.x.begin() + p.num_vars);
  for (double& v : out.x)
    if (v < 0.0 && v > -1e-9) v = 0.0;  // degenerate-pivot residue
  out.dual = std::move(lp.dual);
  return out;
}

}  // namespace swarm_assign
