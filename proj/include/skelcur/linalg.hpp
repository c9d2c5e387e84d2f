#pragma once
//
// Factorizations and derived quantities: one-sided Jacobi SVD, cyclic Jacobi
// symmetric eigensolver, truncation, pseudo-inverse, log-volume, rank.
//

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "skelcur/error.hpp"
#include "skelcur/matrix.hpp"

namespace skelcur {

inline constexpr double kDefaultRankTol = 1e-10;
inline constexpr int kJacobiSweepBudget = 30;

/// Natural-log volume of a rank-deficient block.
inline constexpr double kZeroLogVolume = -std::numeric_limits<double>::infinity();

struct SvdFactorization {
  DenseMatrix left;   // m x k, orthonormal columns
  Spectrum singular;  // length k, non-increasing
  DenseMatrix right;  // n x k, orthonormal columns

  std::size_t rank_capacity() const noexcept { return singular.size(); }
};

struct EigenDecomposition {
  Spectrum values;      // descending (may contain negatives for indefinite input)
  DenseMatrix vectors;  // columns are eigenvectors
};

namespace detail {

using Columns = std::vector<std::vector<double>>;

inline double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Columns to_columns(const DenseMatrix& m) {
  Columns c(m.cols(), std::vector<double>(m.rows()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) c[j][i] = m(i, j);
  return c;
}

inline DenseMatrix from_columns(const Columns& c, std::size_t rows) {
  DenseMatrix m(rows, c.size());
  for (std::size_t j = 0; j < c.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = c[j][i];
  return m;
}

// Fill zero columns of `cols` with unit vectors orthogonal to all others.
inline void complete_orthonormal(Columns& cols, const std::vector<bool>& is_zero) {
  const std::size_t m = cols.empty() ? 0 : cols.front().size();
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (!is_zero[j]) continue;
    std::vector<double> best;
    double best_norm = -1.0;
    for (std::size_t e = 0; e < m; ++e) {
      std::vector<double> v(m, 0.0);
      v[e] = 1.0;
      for (int pass = 0; pass < 2; ++pass)
        for (std::size_t k = 0; k < cols.size(); ++k) {
          if (k == j || (is_zero[k] && k > j)) continue;
          const double proj = dot(v, cols[k]);
          for (std::size_t i = 0; i < m; ++i) v[i] -= proj * cols[k][i];
        }
      const double nv = std::sqrt(dot(v, v));
      if (nv > best_norm) {
        best_norm = nv;
        best = std::move(v);
      }
    }
    for (double& x : best) x /= best_norm;
    cols[j] = std::move(best);
  }
}

// One-sided (Hestenes) Jacobi for a tall matrix (rows >= cols).
inline SvdFactorization jacobi_svd_tall(const DenseMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  Columns u = to_columns(a);
  Columns v(n, std::vector<double>(n, 0.0));
  for (std::size_t j = 0; j < n; ++j) v[j][j] = 1.0;

  const double tol = std::numeric_limits<double>::epsilon() * static_cast<double>(m);
  bool converged = (n == 1);
  for (int sweep = 0; sweep < kJacobiSweepBudget && !converged; ++sweep) {
    bool rotated = false;
    for (std::size_t i = 0; i + 1 < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const double alpha = dot(u[i], u[i]);
        const double beta = dot(u[j], u[j]);
        const double gamma = dot(u[i], u[j]);
        if (alpha == 0.0 || beta == 0.0) continue;
        if (std::abs(gamma) <= tol * std::sqrt(alpha) * std::sqrt(beta)) continue;
        rotated = true;
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t = std::copysign(1.0, zeta) / (std::abs(zeta) + std::hypot(1.0, zeta));
        const double c = 1.0 / std::hypot(1.0, t);
        const double s = c * t;
        for (std::size_t k = 0; k < m; ++k) {
          const double ui = u[i][k], uj = u[j][k];
          u[i][k] = c * ui - s * uj;
          u[j][k] = s * ui + c * uj;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vi = v[i][k], vj = v[j][k];
          v[i][k] = c * vi - s * vj;
          v[j][k] = s * vi + c * vj;
        }
      }
    converged = !rotated;
  }
  if (!converged) raise(ErrorKind::ConvergenceFailure, "Jacobi SVD exceeded its sweep budget");

  std::vector<double> sigma(n);
  for (std::size_t j = 0; j < n; ++j) sigma[j] = std::sqrt(dot(u[j], u[j]));
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return sigma[x] > sigma[y]; });

  Columns uu(n), vv(n);
  std::vector<double> s_sorted(n);
  std::vector<bool> zero(n, false);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t j = order[k];
    s_sorted[k] = sigma[j];
    uu[k] = u[j];
    vv[k] = v[j];
    if (sigma[j] == 0.0) {
      zero[k] = true;
    } else {
      for (double& x : uu[k]) x /= sigma[j];
    }
  }
  complete_orthonormal(uu, zero);
  return {from_columns(uu, m), Spectrum(std::move(s_sorted)), from_columns(vv, n)};
}

}  // namespace detail

/// Thin SVD, k = min(rows, cols). Throws ConvergenceFailure after 30 sweeps.
inline SvdFactorization svd(const DenseMatrix& m) {
  if (m.rows() >= m.cols()) return detail::jacobi_svd_tall(m);
  auto t = detail::jacobi_svd_tall(m.transpose());
  return {std::move(t.right), std::move(t.singular), std::move(t.left)};
}

inline Spectrum singular_values(const DenseMatrix& m) { return svd(m).singular; }

inline double spectral_norm(const DenseMatrix& m) { return singular_values(m)[0]; }

/// Sum of the leading `r` rank-one terms of a factorization.
inline DenseMatrix reconstruct(const SvdFactorization& f, std::size_t r) {
  DenseMatrix out(f.left.rows(), f.right.rows());
  for (std::size_t k = 0; k < r; ++k) {
    const double s = f.singular[k];
    if (s == 0.0) continue;
    for (std::size_t i = 0; i < out.rows(); ++i) {
      const double ui = s * f.left(i, k);
      for (std::size_t j = 0; j < out.cols(); ++j) out(i, j) += ui * f.right(j, k);
    }
  }
  return out;
}

/// Best rank-r approximation (spectral/Frobenius optimal).
inline DenseMatrix truncate_svd(const DenseMatrix& m, std::size_t r) {
  detail::require(r <= std::min(m.rows(), m.cols()), ErrorKind::RankOutOfRange,
                  "truncation rank exceeds min(rows, cols)");
  if (r == 0) return DenseMatrix::zeros(m.rows(), m.cols());
  return reconstruct(svd(m), r);
}

/// Count of singular values above rank_tol * sigma_1.
inline std::size_t numerical_rank(const Spectrum& sigma, double rank_tol = kDefaultRankTol) {
  detail::require(rank_tol >= 0.0, ErrorKind::InvalidArgument, "rank_tol must be non-negative");
  if (sigma.size() == 0 || sigma[0] == 0.0) return 0;
  const double cut = rank_tol * sigma[0];
  std::size_t r = 0;
  while (r < sigma.size() && sigma[r] > cut) ++r;
  return r;
}

inline std::size_t numerical_rank(const DenseMatrix& m, double rank_tol = kDefaultRankTol) {
  return numerical_rank(singular_values(m), rank_tol);
}

/// Moore-Penrose inverse; singular values <= rank_tol * sigma_1 are treated as zero.
inline DenseMatrix pseudo_inverse(const DenseMatrix& a, double rank_tol = kDefaultRankTol) {
  const auto f = svd(a);
  const std::size_t k = numerical_rank(f.singular, rank_tol);
  DenseMatrix out(a.cols(), a.rows());
  for (std::size_t l = 0; l < k; ++l) {
    const double inv = 1.0 / f.singular[l];
    for (std::size_t i = 0; i < out.rows(); ++i) {
      const double vi = inv * f.right(i, l);
      for (std::size_t j = 0; j < out.cols(); ++j) out(i, j) += vi * f.left(j, l);
    }
  }
  return out;
}

/// ln(sigma_1 ... sigma_r) of the given spectrum. Values at or below the
/// roundoff floor max(m,n) * eps * sigma_1 count as zero and give kZeroLogVolume.
inline double log_volume(const Spectrum& sigma, std::size_t r, std::size_t max_dim) {
  detail::require(r >= 1 && r <= sigma.size(), ErrorKind::RankOutOfRange, "volume rank out of range");
  const double floor = static_cast<double>(max_dim) * std::numeric_limits<double>::epsilon() * sigma[0];
  double acc = 0.0;
  for (std::size_t k = 0; k < r; ++k) {
    if (sigma[k] <= floor || sigma[k] == 0.0) return kZeroLogVolume;
    acc += std::log(sigma[k]);
  }
  return acc;
}

/// Log r-volume of a matrix.
inline double volume(const DenseMatrix& a, std::size_t r) {
  detail::require(r >= 1 && r <= std::min(a.rows(), a.cols()), ErrorKind::RankOutOfRange,
                  "volume rank out of range");
  return log_volume(singular_values(a), r, std::max(a.rows(), a.cols()));
}

/// Cyclic Jacobi eigensolver for symmetric matrices; eigenvalues descending.
inline EigenDecomposition symmetric_eigen(const DenseMatrix& m) {
  detail::require(is_symmetric(m), ErrorKind::NotSymmetric, "matrix is not symmetric");
  const std::size_t n = m.rows();
  DenseMatrix a = m;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) a(i, j) = a(j, i) = 0.5 * (m(i, j) + m(j, i));
  DenseMatrix q = DenseMatrix::identity(n);

  const double eps = std::numeric_limits<double>::epsilon();
  bool converged = (n == 1);
  for (int sweep = 0; sweep < kJacobiSweepBudget && !converged; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t r = p + 1; r < n; ++r) {
        const double apr = a(p, r);
        if (apr == 0.0) continue;
        if (std::abs(apr) <= eps * std::sqrt(std::abs(a(p, p)) * std::abs(a(r, r)))) {
          a(p, r) = a(r, p) = 0.0;
          continue;
        }
        rotated = true;
        const double theta = (a(r, r) - a(p, p)) / (2.0 * apr);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::hypot(1.0, theta));
        const double c = 1.0 / std::hypot(1.0, t);
        const double s = c * t;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p), akr = a(k, r);
          a(k, p) = c * akp - s * akr;
          a(k, r) = s * akp + c * akr;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k), ark = a(r, k);
          a(p, k) = c * apk - s * ark;
          a(r, k) = s * apk + c * ark;
        }
        a(p, r) = a(r, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          const double qkp = q(k, p), qkr = q(k, r);
          q(k, p) = c * qkp - s * qkr;
          q(k, r) = s * qkp + c * qkr;
        }
      }
    converged = !rotated;
  }
  if (!converged) detail::raise(ErrorKind::ConvergenceFailure, "Jacobi eigensolver exceeded its sweep budget");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return a(x, x) > a(y, y); });
  std::vector<double> lambda(n);
  DenseMatrix vecs(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    lambda[k] = a(order[k], order[k]);
    for (std::size_t i = 0; i < n; ++i) vecs(i, k) = q(i, order[k]);
  }
  return {Spectrum(std::move(lambda)), std::move(vecs)};
}

}  // namespace skelcur
