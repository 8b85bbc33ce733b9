#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "swarm_assign/errors.hpp"
#include "swarm_assign/simplex.hpp"

namespace swarm_assign {

namespace detail {

/// Least squares min ||M z - f|| via Householder QR. M is rows x k,
/// row-major, rows >= 1. Near-singular columns get a zero coefficient.
inline std::vector<double> householder_lsq(int rows, int k, std::vector<double> M,
                                           std::vector<double> f) {
  auto at = [&](int i, int j) -> double& {
    return M[static_cast<std::size_t>(i) * static_cast<std::size_t>(k) +
             static_cast<std::size_t>(j)];
  };
  const int steps = std::min(rows, k);
  for (int j = 0; j < steps; ++j) {
    double norm = 0.0;
    for (int i = j; i < rows; ++i) norm += at(i, j) * at(i, j);
    norm = std::sqrt(norm);
    if (norm < 1e-14) continue;
    double alpha = at(j, j) > 0.0 ? -norm : norm;
    std::vector<double> v(static_cast<std::size_t>(rows - j), 0.0);
    v[0] = at(j, j) - alpha;
    for (int i = j + 1; i < rows; ++i) v[static_cast<std::size_t>(i - j)] = at(i, j);
    double vnorm2 = 0.0;
    for (const double t : v) vnorm2 += t * t;
    if (vnorm2 < 1e-28) continue;
    // Apply I - 2 v v^T / (v^T v) to the trailing columns and to f.
    for (int col = j; col < k; ++col) {
      double dot = 0.0;
      for (int i = j; i < rows; ++i) dot += v[static_cast<std::size_t>(i - j)] * at(i, col);
      const double s = 2.0 * dot / vnorm2;
      for (int i = j; i < rows; ++i) at(i, col) -= s * v[static_cast<std::size_t>(i - j)];
    }
    double dotf = 0.0;
    for (int i = j; i < rows; ++i)
      dotf += v[static_cast<std::size_t>(i - j)] * f[static_cast<std::size_t>(i)];
    const double sf = 2.0 * dotf / vnorm2;
    for (int i = j; i < rows; ++i) f[static_cast<std::size_t>(i)] -= sf * v[static_cast<std::size_t>(i - j)];
    at(j, j) = alpha;
  }
  // Back substitution on the k x k upper triangle.
  std::vector<double> z(static_cast<std::size_t>(k), 0.0);
  for (int j = std::min(rows, k) - 1; j >= 0; --j) {
    double s = f[static_cast<std::size_t>(j)];
    for (int col = j + 1; col < k; ++col) s -= at(j, col) * z[static_cast<std::size_t>(col)];
    const double d = at(j, j);
    z[static_cast<std::size_t>(j)] = std::abs(d) > 1e-12 ? s / d : 0.0;
  }
  return z;
}

}  // namespace detail

/// Lawson-Hanson non-negative least squares: min ||E u - f||_2 with u >= 0.
/// E is rows x cols, row-major. Deterministic (fixed selection order).
inline std::vector<double> nnls(int rows, int cols, const std::vector<double>& E,
                                const std::vector<double>& f) {
  auto e_at = [&](int i, int j) {
    return E[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) +
             static_cast<std::size_t>(j)];
  };
  std::vector<double> u(static_cast<std::size_t>(cols), 0.0);
  std::vector<char> passive(static_cast<std::size_t>(cols), 0);
  std::vector<double> resid(f);  // f - E u

  double scale = 0.0;
  for (int j = 0; j < cols; ++j) {
    double g = 0.0;
    for (int i = 0; i < rows; ++i) g += e_at(i, j) * f[static_cast<std::size_t>(i)];
    scale = std::max(scale, std::abs(g));
  }
  const double grad_tol = 1e-12 * std::max(1.0, scale);

  auto solve_passive = [&](std::vector<int>& idx) -> std::vector<double> {
    idx.clear();
    for (int j = 0; j < cols; ++j)
      if (passive[static_cast<std::size_t>(j)]) idx.push_back(j);
    std::vector<double> M(static_cast<std::size_t>(rows) * idx.size(), 0.0);
    for (int i = 0; i < rows; ++i)
      for (std::size_t q = 0; q < idx.size(); ++q)
        M[static_cast<std::size_t>(i) * idx.size() + q] = e_at(i, idx[q]);
    return detail::householder_lsq(rows, static_cast<int>(idx.size()), std::move(M), f);
  };

  const int outer_limit = 4 * cols + 16;
  std::vector<int> idx;
  for (int outer = 0; outer < outer_limit; ++outer) {
    // Gradient of 0.5||Eu-f||^2 is -E^T resid; candidates need positive E^T resid.
    int best = -1;
    double best_g = grad_tol;
    for (int j = 0; j < cols; ++j) {
      if (passive[static_cast<std::size_t>(j)]) continue;
      double g = 0.0;
      for (int i = 0; i < rows; ++i) g += e_at(i, j) * resid[static_cast<std::size_t>(i)];
      if (g > best_g) {
        best_g = g;
        best = j;
      }
    }
    if (best < 0) break;
    passive[static_cast<std::size_t>(best)] = 1;

    for (int inner = 0; inner < 2 * cols + 8; ++inner) {
      std::vector<double> z = solve_passive(idx);
      bool all_positive = true;
      for (std::size_t q = 0; q < idx.size(); ++q)
        if (z[q] <= 1e-14) {
          all_positive = false;
          break;
        }
      if (all_positive) {
        std::fill(u.begin(), u.end(), 0.0);
        for (std::size_t q = 0; q < idx.size(); ++q)
          u[static_cast<std::size_t>(idx[q])] = z[q];
        break;
      }
      double alpha = 1.0;
      for (std::size_t q = 0; q < idx.size(); ++q) {
        if (z[q] <= 1e-14) {
          const double uq = u[static_cast<std::size_t>(idx[q])];
          const double denom = uq - z[q];
          if (denom > 1e-300) alpha = std::min(alpha, uq / denom);
        }
      }
      for (std::size_t q = 0; q < idx.size(); ++q) {
        double& uv = u[static_cast<std::size_t>(idx[q])];
        uv += alpha * (z[q] - uv);
        if (uv <= 1e-13) {
          uv = 0.0;
          passive[static_cast<std::size_t>(idx[q])] = 0;
        }
      }
    }

    for (int i = 0; i < rows; ++i) {
      double s = f[static_cast<std::size_t>(i)];
      for (int j = 0; j < cols; ++j)
        if (u[static_cast<std::size_t>(j)] != 0.0) s -= e_at(i, j) * u[static_cast<std::size_t>(j)];
      resid[static_cast<std::size_t>(i)] = s;
    }
  }
  return u;
}

/// Least-distance program: minimize ||x||_2 subject to G x >= h, via the
/// classic reduction to NNLS. G is m x n row-major. Returns false when the
/// constraint set is (numerically) empty.
inline bool least_distance(int m, int n, const std::vector<double>& G,
                           const std::vector<double>& h, std::vector<double>& x) {
  // E = [G^T; h^T] of size (n+1) x m, f = unit vector on the last row.
  std::vector<double> E(static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(m), 0.0);
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < n; ++i)
      E[static_cast<std::size_t>(i) * static_cast<std::size_t>(m) + static_cast<std::size_t>(j)] =
          G[static_cast<std::size_t>(j) * static_cast<std::size_t>(n) + static_cast<std::size_t>(i)];
    E[static_cast<std::size_t>(n) * static_cast<std::size_t>(m) + static_cast<std::size_t>(j)] =
        h[static_cast<std::size_t>(j)];
  }
  std::vector<double> f(static_cast<std::size_t>(n + 1), 0.0);
  f[static_cast<std::size_t>(n)] = 1.0;
  const std::vector<double> u = nnls(n + 1, m, E, f);

  std::vector<double> r(static_cast<std::size_t>(n + 1), 0.0);
  for (int i = 0; i <= n; ++i) {
    double s = -f[static_cast<std::size_t>(i)];
    for (int j = 0; j < m; ++j)
      s += E[static_cast<std::size_t>(i) * static_cast<std::size_t>(m) +
             static_cast<std::size_t>(j)] *
           u[static_cast<std::size_t>(j)];
    r[static_cast<std::size_t>(i)] = s;
  }
  const double denom = r[static_cast<std::size_t>(n)];
  if (std::abs(denom) < 1e-11) return false;
  x.assign(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = -r[static_cast<std::size_t>(i)] / denom;
  return true;
}

/// Canonical optimal point of a max-min LP: the minimum-norm x among those
/// achieving value w_star (up to a 1e-10 slack that keeps the polyhedron
/// numerically nonempty). Unique, hence symmetric under instance
/// automorphisms and independent of pivot order.
inline std::vector<double> canonical_max_min_point(const MpcpProblem& p, double w_star,
                                                   const std::vector<double>& fallback) {
  const int n = p.num_vars;
  if (n == 0) return {};
  const double w_req = w_star - 1e-10 * std::max(1.0, std::abs(w_star));
  const int m = static_cast<int>(p.covering.size() + p.packing_vars.size()) + n;
  std::vector<double> G(static_cast<std::size_t>(m) * static_cast<std::size_t>(n), 0.0);
  std::vector<double> h(static_cast<std::size_t>(m), 0.0);
  int row = 0;
  for (const auto& cov : p.covering) {
    for (const auto& [v, c] : cov)
      G[static_cast<std::size_t>(row) * static_cast<std::size_t>(n) + static_cast<std::size_t>(v)] = c;
    h[static_cast<std::size_t>(row)] = w_req;
    ++row;
  }
  for (std::size_t i = 0; i < p.packing_vars.size(); ++i) {
    for (const int v : p.packing_vars[i])
      G[static_cast<std::size_t>(row) * static_cast<std::size_t>(n) + static_cast<std::size_t>(v)] = -1.0;
    h[static_cast<std::size_t>(row)] = -p.packing_bound[i];
    ++row;
  }
  for (int v = 0; v < n; ++v) {
    G[static_cast<std::size_t>(row) * static_cast<std::size_t>(n) + static_cast<std::size_t>(v)] = 1.0;
    h[static_cast<std::size_t>(row)] = 0.0;
    ++row;
  }
  std::vector<double> x;
  if (!least_distance(m, n, G, h, x)) return fallback;
  for (double& v : x)
    if (v < 0.0 && v > -1e-10) v = 0.0;
  return x;
}

}  // namespace swarm_assign
