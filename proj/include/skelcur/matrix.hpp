#pragma once
//
// Dense real matrix value type, index sets and ordered spectra.
//

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "skelcur/error.hpp"

namespace skelcur {

/// Real m x n matrix stored row-major. Entries are always finite.
class DenseMatrix {
 public:
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {
    detail::require(rows > 0 && cols > 0, ErrorKind::DimensionMismatch, "matrix dimensions must be positive");
  }

  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    detail::require(rows > 0 && cols > 0, ErrorKind::DimensionMismatch, "matrix dimensions must be positive");
    detail::require(data_.size() == rows * cols, ErrorKind::DimensionMismatch,
                    "entry count " + std::to_string(data_.size()) + " does not match " + std::to_string(rows) +
                        "x" + std::to_string(cols));
    for (double v : data_)
      detail::require(std::isfinite(v), ErrorKind::InvalidArgument, "matrix entries must be finite");
  }

  DenseMatrix(std::initializer_list<std::initializer_list<double>> init) : rows_(init.size()), cols_(0) {
    detail::require(rows_ > 0, ErrorKind::DimensionMismatch, "matrix dimensions must be positive");
    cols_ = init.begin()->size();
    detail::require(cols_ > 0, ErrorKind::DimensionMismatch, "matrix dimensions must be positive");
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      detail::require(row.size() == cols_, ErrorKind::DimensionMismatch, "ragged initializer");
      for (double v : row) {
        detail::require(std::isfinite(v), ErrorKind::InvalidArgument, "matrix entries must be finite");
        data_.push_back(v);
      }
    }
  }

  static DenseMatrix zeros(std::size_t rows, std::size_t cols) { return DenseMatrix(rows, cols); }

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix I(n, n);
    for (std::size_t i = 0; i < n; ++i) I(i, i) = 1.0;
    return I;
  }

  static DenseMatrix diagonal(std::span<const double> d) {
    DenseMatrix D(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) D(i, i) = d[i];
    return D;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return data_.size(); }

  double operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }
  double& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }

  std::span<const double> entries() const noexcept { return data_; }
  std::span<const double> row(std::size_t i) const noexcept { return {data_.data() + i * cols_, cols_}; }

  DenseMatrix transpose() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> data_;
};

inline DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  detail::require(a.cols() == b.rows(), ErrorKind::DimensionMismatch, "inner dimensions differ in product");
  DenseMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

inline DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
  detail::require(a.rows() == b.rows() && a.cols() == b.cols(), ErrorKind::DimensionMismatch,
                  "shape mismatch in subtraction");
  DenseMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

inline DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
  detail::require(a.rows() == b.rows() && a.cols() == b.cols(), ErrorKind::DimensionMismatch,
                  "shape mismatch in addition");
  DenseMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

inline DenseMatrix operator*(double s, const DenseMatrix& a) {
  DenseMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = s * a(i, j);
  return c;
}

/// Max absolute entry.
inline double chebyshev_norm(const DenseMatrix& m) {
  double best = 0.0;
  for (double v : m.entries()) best = std::max(best, std::abs(v));
  return best;
}

inline double frobenius_norm(const DenseMatrix& m) {
  double scale = chebyshev_norm(m);
  if (scale == 0.0) return 0.0;
  double sum = 0.0;
  for (double v : m.entries()) sum += (v / scale) * (v / scale);
  return scale * std::sqrt(sum);
}

/// Symmetric within tol x ||M||_C entrywise.
inline bool is_symmetric(const DenseMatrix& m, double rel_tol = 1e-12) {
  if (m.rows() != m.cols()) return false;
  const double tol = rel_tol * chebyshev_norm(m);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (std::abs(m(i, j) - m(j, i)) > tol) return false;
  return true;
}

/// Strictly increasing list of 0-based indices.
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(std::initializer_list<std::size_t> idx) : IndexSet(std::vector<std::size_t>(idx)) {}
  explicit IndexSet(std::vector<std::size_t> idx) : indices_(std::move(idx)) {
    for (std::size_t k = 1; k < indices_.size(); ++k)
      detail::require(indices_[k - 1] < indices_[k], ErrorKind::InvalidArgument,
                      "index set must be strictly increasing");
  }

  /// {0, 1, ..., n-1}
  static IndexSet range(std::size_t n) {
    std::vector<std::size_t> v(n);
    for (std::size_t k = 0; k < n; ++k) v[k] = k;
    return IndexSet(std::move(v));
  }

  std::size_t size() const noexcept { return indices_.size(); }
  bool empty() const noexcept { return indices_.empty(); }
  std::size_t operator[](std::size_t k) const noexcept { return indices_[k]; }
  auto begin() const noexcept { return indices_.begin(); }
  auto end() const noexcept { return indices_.end(); }
  const std::vector<std::size_t>& values() const noexcept { return indices_; }

  bool contains(std::size_t i) const { return std::binary_search(indices_.begin(), indices_.end(), i); }

  /// Indices of [0, n) not in this set.
  IndexSet complement(std::size_t n) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i)
      if (!contains(i)) out.push_back(i);
    return IndexSet(std::move(out));
  }

  friend bool operator==(const IndexSet&, const IndexSet&) = default;
  friend auto operator<=>(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<std::size_t> indices_;
};

/// Ordered, non-increasing list of finite values (singular values or eigenvalues).
class Spectrum {
 public:
  Spectrum() = default;
  Spectrum(std::initializer_list<double> v) : Spectrum(std::vector<double>(v)) {}
  explicit Spectrum(std::vector<double> v) : values_(std::move(v)) {
    for (std::size_t k = 0; k < values_.size(); ++k) {
      detail::require(std::isfinite(values_[k]), ErrorKind::InvalidArgument, "spectrum values must be finite");
      if (k > 0)
        detail::require(values_[k] <= values_[k - 1], ErrorKind::InvalidArgument, "spectrum must be non-increasing");
    }
  }

  std::size_t size() const noexcept { return values_.size(); }
  /// 0-based access; the k-th largest value in 1-based notation is at(k - 1).
  double operator[](std::size_t k) const noexcept { return values_[k]; }
  std::span<const double> values() const noexcept { return values_; }
  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }

  /// Elementwise square, e.g. singular values of M -> eigenvalues of M^T M.
  Spectrum squared() const {
    std::vector<double> sq(values_.size());
    for (std::size_t k = 0; k < values_.size(); ++k) sq[k] = values_[k] * values_[k];
    return Spectrum(std::move(sq));
  }

  friend bool operator==(const Spectrum&, const Spectrum&) = default;

 private:
  std::vector<double> values_;
};

/// Entry (i, j) of the result is m(rows[i], cols[j]).
inline DenseMatrix submatrix(const DenseMatrix& m, const IndexSet& rows, const IndexSet& cols) {
  detail::require(!rows.empty() && !cols.empty(), ErrorKind::IndexOutOfRange, "empty selection");
  detail::require(rows.values().back() < m.rows(), ErrorKind::IndexOutOfRange, "row index out of range");
  detail::require(cols.values().back() < m.cols(), ErrorKind::IndexOutOfRange, "column index out of range");
  DenseMatrix s(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = m(rows[i], cols[j]);
  return s;
}

inline DenseMatrix select_columns(const DenseMatrix& m, const IndexSet& cols) {
  return submatrix(m, IndexSet::range(m.rows()), cols);
}

inline DenseMatrix select_rows(const DenseMatrix& m, const IndexSet& rows) {
  return submatrix(m, rows, IndexSet::range(m.cols()));
}

}  // namespace skelcur
