#pragma once
//
// Pseudo-skeleton (CUR) approximations and their errors.
//

#include <algorithm>
#include <optional>
#include <string_view>

#include "skelcur/error.hpp"
#include "skelcur/linalg.hpp"
#include "skelcur/matrix.hpp"
#include "skelcur/maxvol.hpp"

namespace skelcur {

enum class Method { MaxVolCur, RankRCur, CurThenTruncate, TruncatedSvd };

inline std::string_view to_string(Method m) {
  switch (m) {
    case Method::MaxVolCur: return "maxvol_cur";
    case Method::RankRCur: return "rank_r_cur";
    case Method::CurThenTruncate: return "cur_then_truncate";
    case Method::TruncatedSvd: return "truncated_svd";
  }
  return "unknown";
}

inline std::optional<Method> parse_method(std::string_view s) {
  for (Method m : {Method::MaxVolCur, Method::RankRCur, Method::CurThenTruncate, Method::TruncatedSvd})
    if (s == to_string(m)) return m;
  return std::nullopt;
}

struct ApproximationResult {
  DenseMatrix approximant;
  Method method;
  std::optional<SkeletonSelection> selection;
  std::size_t target_rank;
  double chebyshev_error;
  double spectral_error;
};

namespace detail {

inline ApproximationResult make_result(const DenseMatrix& m, DenseMatrix approx, Method method,
                                       std::optional<SkeletonSelection> sel, std::size_t target_rank) {
  const DenseMatrix err = approx - m;
  const double cheb = chebyshev_norm(err);
  const double spec = cheb == 0.0 ? 0.0 : spectral_norm(err);
  return {std::move(approx), method, std::move(sel), target_rank, cheb, spec};
}

// C * A_k^+ * R with A_k the rank-`max_rank` truncation of the intersection
// block, applied through the SVD factors of A. Returns the rank used.
inline std::pair<DenseMatrix, std::size_t> skeleton_product(const DenseMatrix& m, const SkeletonSelection& sel,
                                                            std::size_t max_rank, double rank_tol) {
  require(!sel.rows.empty() && !sel.cols.empty(), ErrorKind::IndexOutOfRange, "empty selection");
  require(sel.rows.values().back() < m.rows() && sel.cols.values().back() < m.cols(), ErrorKind::IndexOutOfRange,
          "selection index out of range");
  DenseMatrix a = submatrix(m, sel.rows, sel.cols);
  if (sel.rows == sel.cols && is_symmetric(a)) {
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = i + 1; j < a.cols(); ++j) a(i, j) = a(j, i) = 0.5 * (a(i, j) + a(j, i));
  }
  const auto f = svd(a);
  const std::size_t k = std::min(numerical_rank(f.singular, rank_tol), max_rank);
  if (k == 0) return {DenseMatrix::zeros(m.rows(), m.cols()), 0};

  const DenseMatrix c = select_columns(m, sel.cols);  // m x q
  const DenseMatrix r = select_rows(m, sel.rows);     // p x n
  DenseMatrix left(m.rows(), k);                      // C V_k S_k^{-1}
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t l = 0; l < k; ++l) {
      double s = 0.0;
      for (std::size_t j = 0; j < c.cols(); ++j) s += c(i, j) * f.right(j, l);
      left(i, l) = s / f.singular[l];
    }
  DenseMatrix right(k, m.cols());  // U_k^T R
  for (std::size_t l = 0; l < k; ++l)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      double s = 0.0;
      for (std::size_t i = 0; i < r.rows(); ++i) s += f.left(i, l) * r(i, j);
      right(l, j) = s;
    }
  return {left * right, k};
}

}  // namespace detail

/// Classical pseudo-skeleton approximation M[:, J] A^+ M[I, :] with A = M[I, J].
inline ApproximationResult cur(const DenseMatrix& m, const SkeletonSelection& sel,
                               double rank_tol = kDefaultRankTol) {
  auto [approx, k] = detail::skeleton_product(m, sel, static_cast<std::size_t>(-1), rank_tol);
  return detail::make_result(m, std::move(approx), Method::MaxVolCur, sel, k);
}

/// Pseudo-skeleton approximation through the rank-r truncation of the intersection block.
inline ApproximationResult rank_r_cur(const DenseMatrix& m, const SkeletonSelection& sel, std::size_t r,
                                      double rank_tol = kDefaultRankTol) {
  detail::require(r <= std::min(sel.rows.size(), sel.cols.size()), ErrorKind::RankOutOfRange,
                  "rank exceeds the selected block");
  if (r == 0) return detail::make_result(m, DenseMatrix::zeros(m.rows(), m.cols()), Method::RankRCur, sel, 0);
  auto [approx, k] = detail::skeleton_product(m, sel, r, rank_tol);
  return detail::make_result(m, std::move(approx), Method::RankRCur, sel, r);
}

/// Rank-r truncated SVD of the classical pseudo-skeleton approximation.
/// r may equal |row_set|, in which case the truncation is the identity whenever A has full rank.
inline ApproximationResult cur_then_truncate(const DenseMatrix& m, const SkeletonSelection& sel, std::size_t r,
                                             double rank_tol = kDefaultRankTol) {
  detail::require(r <= sel.rows.size() && r <= std::min(m.rows(), m.cols()), ErrorKind::RankOutOfRange,
                  "truncation rank must not exceed the number of selected rows");
  const auto base = cur(m, sel, rank_tol);
  return detail::make_result(m, truncate_svd(base.approximant, r), Method::CurThenTruncate, sel, r);
}

inline ApproximationResult truncated_svd_approx(const DenseMatrix& m, std::size_t r) {
  return detail::make_result(m, truncate_svd(m, r), Method::TruncatedSvd, std::nullopt, r);
}

/// Error matrix M_hat - M of the classical pseudo-skeleton approximation.
inline DenseMatrix residual_blocks(const DenseMatrix& m, const SkeletonSelection& sel,
                                   double rank_tol = kDefaultRankTol) {
  return cur(m, sel, rank_tol).approximant - m;
}

}  // namespace skelcur
