#pragma once

// Independent reference computations used by the tests. Everything here is
// written from the defining formulas, without going through the library.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using Vec = std::vector<double>;
using Mat = std::vector<Vec>;

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline Vec random_simplex(std::mt19937_64& g, std::size_t n) {
  std::exponential_distribution<double> e(1.0);
  Vec p(n);
  double s = 0.0;
  for (double& x : p) s += x = e(g);
  for (double& x : p) x /= s;
  return p;
}

inline Vec random_vector(std::mt19937_64& g, std::size_t n, double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  Vec v(n);
  for (double& x : v) x = u(g);
  return v;
}

/// (t-1) / ((t-1) + Σ_k ||z - z_k||²) over an explicit history; 1 when empty.
inline double potential_from_history(const std::vector<Vec>& history, const Vec& z) {
  if (history.empty()) return 1.0;
  double total = 0.0;
  for (const Vec& h : history)
    for (std::size_t j = 0; j < z.size(); ++j) total += (z[j] - h[j]) * (z[j] - h[j]);
  const double n = static_cast<double>(history.size());
  return n / (n + total);
}

/// F(k) = Σ_{j<=k} φ(1-φ)^{k-j} prev_j cur_jᵀ + (1-φ)^k F(0), summed term by term.
inline Mat unrolled_frequencies(const Mat& f0, const std::vector<Vec>& prev,
                                const std::vector<Vec>& cur, double phi) {
  const std::size_t n = f0.size();
  const std::size_t k = prev.size();
  Mat f(n, Vec(n, 0.0));
  const double keep = std::pow(1.0 - phi, static_cast<double>(k));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) f[i][j] = keep * f0[i][j];
  for (std::size_t step = 0; step < k; ++step) {
    const double w = phi * std::pow(1.0 - phi, static_cast<double>(k - 1 - step));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) f[i][j] += w * prev[step][i] * cur[step][j];
  }
  return f;
}

/// Stationary distribution π of a row-stochastic matrix: solves πP = π,
/// Σπ = 1 by Gaussian elimination with partial pivoting.
inline Vec stationary_distribution(const Mat& p) {
  const std::size_t n = p.size();
  Mat a(n, Vec(n + 1, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = p[j][i] - (i == j ? 1.0 : 0.0);
  }
  for (std::size_t j = 0; j < n; ++j) a[n - 1][j] = 1.0;
  a[n - 1][n] = 1.0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::fabs(a[r][c]) > std::fabs(a[piv][c])) piv = r;
    std::swap(a[c], a[piv]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c) continue;
      const double m = a[r][c] / a[c][c];
      for (std::size_t k = c; k <= n; ++k) a[r][k] -= m * a[c][k];
    }
  }
  Vec pi(n);
  for (std::size_t i = 0; i < n; ++i) pi[i] = a[i][n] / a[i][i];
  return pi;
}

/// ½ Σ p log2(p/m) + ½ Σ q log2(q/m), skipping zero terms.
inline double jsd_direct(const Vec& p, const Vec& q) {
  double total = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double m = 0.5 * (p[i] + q[i]);
    if (p[i] > 0.0) total += 0.5 * p[i] * std::log2(p[i] / m);
    if (q[i] > 0.0) total += 0.5 * q[i] * std::log2(q[i] / m);
  }
  return total;
}

/// IDM evaluated straight from the model equations, unclamped.
inline double idm(double a, double v0, double s0, double T, double b, double delta, double v,
                  double dv, double s) {
  double s_star = s0 + v * T + v * dv / (2.0 * std::sqrt(a * b));
  if (s_star < 0.0) s_star = 0.0;
  return a * (1.0 - std::pow(v / v0, delta) - (s_star / s) * (s_star / s));
}

}  // namespace oracle
