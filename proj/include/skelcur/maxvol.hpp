#pragma once
//
// Maximal-volume submatrix search.
//
// Candidates are ranked by (numerical rank, log r-volume) lexicographically;
// equal keys resolve to the lexicographically smallest (row_set, col_set).
// The exhaustive searches are the oracles the error bounds are stated for;
// greedy_maxvol only certifies single-swap local maximality.
//

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "skelcur/error.hpp"
#include "skelcur/linalg.hpp"
#include "skelcur/matrix.hpp"

namespace skelcur {

struct SkeletonSelection {
  IndexSet rows;
  IndexSet cols;
  double log_volume = kZeroLogVolume;
  std::size_t rank = 0;
};

struct SearchReport {
  SkeletonSelection selection;
  std::size_t candidates_examined = 0;
  std::size_t swaps_performed = 0;
  bool converged = true;
};

struct SearchOptions {
  double rank_tol = kDefaultRankTol;
  double budget = 2e6;             // max candidates for exhaustive enumeration
  double growth_tol = 1.0 + 1e-9;  // greedy swaps must grow the volume by this factor
  int max_sweeps = 100;
};

/// Log-volumes closer than this are treated as tied.
inline constexpr double kVolumeTieTol = 1e-12;

/// Ordering key of a candidate block.
struct VolumeKey {
  std::size_t rank = 0;
  double log_volume = kZeroLogVolume;

  /// True when this key beats `other` by more than `margin` in log-volume (or by rank).
  bool beats(const VolumeKey& other, double margin = kVolumeTieTol) const {
    if (rank != other.rank) return rank > other.rank;
    if (log_volume == kZeroLogVolume) return false;
    return log_volume > other.log_volume + margin;
  }
};

/// Rank and log-volume of a block; `cap` limits the rank (projective volume).
inline VolumeKey block_key(const DenseMatrix& block, double rank_tol,
                           std::size_t cap = static_cast<std::size_t>(-1)) {
  const Spectrum s = singular_values(block);
  const std::size_t rank = std::min(numerical_rank(s, rank_tol), cap);
  if (rank == 0) return {0, kZeroLogVolume};
  return {rank, log_volume(s, rank, std::max(block.rows(), block.cols()))};
}

inline double binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0.0;
  double c = 1.0;
  for (std::size_t i = 1; i <= k; ++i) c = c * static_cast<double>(n - k + i) / static_cast<double>(i);
  return std::round(c);
}

namespace detail {

// Advance to the next k-subset of [0, n) in lexicographic order.
inline bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

inline std::vector<std::size_t> first_combination(std::size_t k) {
  std::vector<std::size_t> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
  return c;
}

inline void check_budget(double count, const SearchOptions& opt) {
  if (count > opt.budget)
    raise(ErrorKind::BudgetExceeded, "enumeration of " + std::to_string(static_cast<long long>(count)) +
                                         " candidates exceeds budget " +
                                         std::to_string(static_cast<long long>(opt.budget)));
}

template <typename KeyFn>
SearchReport enumerate_rectangular(const DenseMatrix& m, std::size_t p, std::size_t q, KeyFn&& key_of) {
  SearchReport rep;
  std::optional<VolumeKey> best;
  auto rc = first_combination(p);
  do {
    const IndexSet rows(rc);
    auto cc = first_combination(q);
    do {
      const IndexSet cols(cc);
      const VolumeKey k = key_of(submatrix(m, rows, cols));
      ++rep.candidates_examined;
      if (!best || k.beats(*best)) {
        best = k;
        rep.selection = {rows, cols, k.log_volume, k.rank};
      }
    } while (next_combination(cc, m.cols()));
  } while (next_combination(rc, m.rows()));
  return rep;
}

inline void check_shape(const DenseMatrix& m, std::size_t p, std::size_t q) {
  require(p >= 1, ErrorKind::InvalidArgument, "p must be at least 1");
  require(p <= q, ErrorKind::InvalidArgument, "selection requires p <= q (transpose the input otherwise)");
  require(p <= m.rows() && q <= m.cols(), ErrorKind::InvalidArgument, "selection larger than the matrix");
}

}  // namespace detail

/// Global maximum over all p x q submatrices: maximal rank first, then maximal volume.
inline SearchReport exhaustive_maxvol(const DenseMatrix& m, std::size_t p, std::size_t q,
                                      const SearchOptions& opt = {}) {
  detail::check_shape(m, p, q);
  detail::check_budget(binomial(m.rows(), p) * binomial(m.cols(), q), opt);
  return detail::enumerate_rectangular(m, p, q, [&](const DenseMatrix& a) { return block_key(a, opt.rank_tol); });
}

/// As exhaustive_maxvol, restricted to principal submatrices (row_set == col_set).
inline SearchReport exhaustive_principal_maxvol(const DenseMatrix& m, std::size_t p,
                                                const SearchOptions& opt = {}) {
  detail::require(is_symmetric(m), ErrorKind::NotSymmetric, "principal search needs a symmetric matrix");
  detail::require(p >= 1 && p <= m.rows(), ErrorKind::InvalidArgument, "p out of range");
  detail::check_budget(binomial(m.rows(), p), opt);
  SearchReport rep;
  std::optional<VolumeKey> best;
  auto c = detail::first_combination(p);
  do {
    const IndexSet idx(c);
    const VolumeKey k = block_key(submatrix(m, idx, idx), opt.rank_tol);
    ++rep.candidates_examined;
    if (!best || k.beats(*best)) {
      best = k;
      rep.selection = {idx, idx, k.log_volume, k.rank};
    }
  } while (detail::next_combination(c, m.rows()));
  return rep;
}

/// Maximizes the r-projective volume sigma_1...sigma_r over all p x q submatrices.
inline SearchReport exhaustive_max_projective_volume(const DenseMatrix& m, std::size_t p, std::size_t q,
                                                     std::size_t r, const SearchOptions& opt = {}) {
  detail::check_shape(m, p, q);
  detail::require(r >= 1 && r <= p, ErrorKind::RankOutOfRange, "projective rank must satisfy 1 <= r <= p");
  detail::check_budget(binomial(m.rows(), p) * binomial(m.cols(), q), opt);
  return detail::enumerate_rectangular(m, p, q,
                                       [&](const DenseMatrix& a) { return block_key(a, opt.rank_tol, r); });
}

namespace detail {

// Greedy pivoted Gram-Schmidt: picks `count` vectors (columns of `cols`)
// by largest residual norm. Returns nullopt when the first pivot is zero.
inline std::optional<std::vector<std::size_t>> pivoted_gram_schmidt(Columns cols, std::size_t count) {
  const std::size_t n = cols.size();
  std::vector<bool> used(n, false);
  std::vector<std::size_t> picked;
  double first_norm = 0.0;
  while (picked.size() < count) {
    std::size_t best = n;
    double best_norm = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j]) continue;
      const double nj = std::sqrt(dot(cols[j], cols[j]));
      if (nj > best_norm) {
        best_norm = nj;
        best = j;
      }
    }
    if (picked.empty()) {
      if (best == n) return std::nullopt;
      first_norm = best_norm;
    }
    if (best == n || best_norm <= 1e-14 * first_norm) break;
    used[best] = true;
    picked.push_back(best);
    std::vector<double> e = cols[best];
    for (double& x : e) x /= best_norm;
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j]) continue;
      const double proj = dot(e, cols[j]);
      for (std::size_t i = 0; i < e.size(); ++i) cols[j][i] -= proj * e[i];
    }
  }
  // Residuals exhausted: fill with the smallest unused indices.
  for (std::size_t j = 0; j < n && picked.size() < count; ++j)
    if (!used[j]) {
      used[j] = true;
      picked.push_back(j);
    }
  std::sort(picked.begin(), picked.end());
  return picked;
}

inline IndexSet replace_index(const IndexSet& s, std::size_t out, std::size_t in) {
  std::vector<std::size_t> v;
  v.reserve(s.size());
  for (std::size_t x : s)
    if (x != out) v.push_back(x);
  v.push_back(in);
  std::sort(v.begin(), v.end());
  return IndexSet(std::move(v));
}

}  // namespace detail

/// Single-swap local search started from pivoted Gram-Schmidt picks.
inline SearchReport greedy_maxvol(const DenseMatrix& m, std::size_t p, std::size_t q,
                                  const SearchOptions& opt = {}) {
  detail::check_shape(m, p, q);
  detail::require(opt.growth_tol > 1.0, ErrorKind::InvalidArgument, "growth_tol must exceed 1");
  const double margin = std::log(opt.growth_tol);

  const auto col_pick = detail::pivoted_gram_schmidt(detail::to_columns(m), q);
  if (!col_pick) detail::raise(ErrorKind::DegenerateStart, "no selection of numerical rank >= 1 exists");
  IndexSet cols(*col_pick);
  const auto row_pick = detail::pivoted_gram_schmidt(detail::to_columns(select_columns(m, cols).transpose()), p);
  if (!row_pick) detail::raise(ErrorKind::DegenerateStart, "no selection of numerical rank >= 1 exists");
  IndexSet rows(*row_pick);

  SearchReport rep;
  VolumeKey current = block_key(submatrix(m, rows, cols), opt.rank_tol);
  rep.candidates_examined = 1;
  if (current.rank == 0) detail::raise(ErrorKind::DegenerateStart, "initial selection has numerical rank 0");

  rep.converged = false;
  for (int sweep = 0; sweep < opt.max_sweeps; ++sweep) {
    bool improved = false;
    for (int axis = 0; axis < 2; ++axis) {
      const bool row_axis = axis == 0;
      const std::size_t dim = row_axis ? m.rows() : m.cols();
      const std::vector<std::size_t> snapshot = (row_axis ? rows : cols).values();
      for (std::size_t out : snapshot) {
        const IndexSet& sel = row_axis ? rows : cols;
        if (!sel.contains(out)) continue;
        std::optional<IndexSet> best_set;
        VolumeKey best_key = current;
        for (std::size_t in = 0; in < dim; ++in) {
          if (sel.contains(in)) continue;
          IndexSet trial = detail::replace_index(sel, out, in);
          const VolumeKey k = row_axis ? block_key(submatrix(m, trial, cols), opt.rank_tol)
                                       : block_key(submatrix(m, rows, trial), opt.rank_tol);
          ++rep.candidates_examined;
          if (k.beats(best_key, best_set ? kVolumeTieTol : margin)) {
            best_key = k;
            best_set = std::move(trial);
          }
        }
        if (best_set) {
          (row_axis ? rows : cols) = std::move(*best_set);
          current = best_key;
          ++rep.swaps_performed;
          improved = true;
        }
      }
    }
    if (!improved) {
      rep.converged = true;
      break;
    }
  }
  rep.selection = {rows, cols, current.log_volume, current.rank};
  return rep;
}

}  // namespace skelcur
