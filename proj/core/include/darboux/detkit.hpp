#pragma once

// Dense determinants and the two determinant identities the chain formulas
// rest on: the Sylvester identity for embordering minors and the
// row-replacement identity used to differentiate determinant ratios.
//
// Indices are 0-based throughout. A "leading block of size p" means rows and
// columns 0..p-1.

#include <boost/multiprecision/cpp_int.hpp>

#include <array>

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "darboux/common.hpp"
#include "darboux/series.hpp"

namespace darboux {

using BigInt = boost::multiprecision::cpp_int;

/// Row-major dense matrix over an arbitrary scalar.
template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  DenseMatrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw ArgumentError("ragged matrix initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T>& storage() { return data_; }
  const std::vector<T>& storage() const { return data_; }

  /// Submatrix made of the given rows and columns, in the given order.
  DenseMatrix select(const std::vector<std::size_t>& row_ids,
                     const std::vector<std::size_t>& col_ids) const {
    DenseMatrix out(row_ids.size(), col_ids.size());
    for (std::size_t a = 0; a < row_ids.size(); ++a)
      for (std::size_t b = 0; b < col_ids.size(); ++b) out(a, b) = (*this)(row_ids[a], col_ids[b]);
    return out;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using ComplexMatrix = DenseMatrix<cplx>;
using IntegerMatrix = DenseMatrix<BigInt>;
using SeriesMatrix = DenseMatrix<Taylor>;

/// Square complex matrix with finite entries; dim >= 1.
class SquareMatrix {
 public:
  explicit SquareMatrix(ComplexMatrix m);
  SquareMatrix(std::initializer_list<std::initializer_list<cplx>> rows)
      : SquareMatrix(ComplexMatrix(rows)) {}

  std::size_t dim() const { return m_.rows(); }
  const cplx& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const ComplexMatrix& matrix() const { return m_; }

 private:
  ComplexMatrix m_;
};

/// det = mantissa * exp(log_scale). The mantissa absorbs everything the row
/// equilibration did not factor out.
template <class T>
struct ScaledDeterminant {
  T mantissa{};
  double log_scale = 0.0;
  bool ill_conditioned = false;
};

/// log|det| and the unit phase det/|det|. A zero determinant has
/// log_abs = -inf and phase 0.
struct LogDeterminant {
  double log_abs = 0.0;
  cplx phase{1.0, 0.0};
  bool ill_conditioned = false;

  cplx value() const;
};

/// |det| below this multiple of the product of row 2-norms is reported as
/// ill-conditioned (the value is still returned).
inline constexpr double kIllConditionedRatio = 1e-12;

LogDeterminant log_determinant(const ComplexMatrix& m);
cplx determinant(const ComplexMatrix& m);
inline LogDeterminant log_determinant(const SquareMatrix& m) { return log_determinant(m.matrix()); }
inline cplx determinant(const SquareMatrix& m) { return determinant(m.matrix()); }

/// Determinant of a matrix of Taylor series, pivoting on the leading
/// coefficients. Rows are equilibrated by the magnitude of their values.
ScaledDeterminant<Taylor> series_determinant(const SeriesMatrix& m);

/// Fraction-free (Bareiss) elimination; exact.
BigInt exact_determinant(const IntegerMatrix& m);

inline cplx det_of(const ComplexMatrix& m) { return determinant(m); }
inline BigInt det_of(const IntegerMatrix& m) { return exact_determinant(m); }

/// Leading block size plus the row and column that border it.
struct EmborderSpec {
  std::size_t block_dim = 0;
  std::size_t row = 0;
  std::size_t col = 0;
};

template <class T>
DenseMatrix<T> embordered(const DenseMatrix<T>& a, const EmborderSpec& spec) {
  if (spec.block_dim == 0 || spec.block_dim > a.rows() || spec.block_dim > a.cols())
    throw ArgumentError("embordering: block size out of range");
  if (spec.row < spec.block_dim || spec.row >= a.rows() || spec.col < spec.block_dim ||
      spec.col >= a.cols())
    throw ArgumentError("embordering: row/column must lie outside the leading block");
  std::vector<std::size_t> rows, cols;
  for (std::size_t i = 0; i < spec.block_dim; ++i) {
    rows.push_back(i);
    cols.push_back(i);
  }
  rows.push_back(spec.row);
  cols.push_back(spec.col);
  return a.select(rows, cols);
}

/// Determinant of the leading p x p block bordered by `row` and `col`.
template <class T>
T embordering_minor(const DenseMatrix<T>& a, std::size_t p, std::size_t row, std::size_t col) {
  return det_of(embordered(a, EmborderSpec{p, row, col}));
}

template <class T>
struct IdentitySides {
  T lhs{};
  T rhs{};
  /// Products combined into rhs when it is a difference (rhs = first - second);
  /// their size is the cancellation scale for floating-point comparisons.
  std::array<T, 2> rhs_terms{};
};

template <class T>
T leading_block_det(const DenseMatrix<T>& a, std::size_t p) {
  std::vector<std::size_t> ids(p);
  for (std::size_t i = 0; i < p; ++i) ids[i] = i;
  return det_of(a.select(ids, ids));
}

template <class T>
T power(const T& base, std::size_t e) {
  T out{1};
  for (std::size_t i = 0; i < e; ++i) out *= base;
  return out;
}

/// Both sides of |M| = |a|^(q-1) |A| where M collects all q x q embordering
/// minors of the leading p x p block a of the square matrix A.
template <class T>
IdentitySides<T> sylvester_check(const DenseMatrix<T>& a, std::size_t p) {
  if (!a.square()) throw ArgumentError("sylvester_check: matrix must be square");
  if (p == 0 || p >= a.rows()) throw ArgumentError("sylvester_check: need 1 <= p < dim");
  const std::size_t q = a.rows() - p;
  DenseMatrix<T> minors(q, q);
  for (std::size_t k = 0; k < q; ++k)
    for (std::size_t l = 0; l < q; ++l) minors(k, l) = embordering_minor(a, p, p + k, p + l);
  return {det_of(minors), power(leading_block_det(a, p), q - 1) * det_of(a)};
}

/// Index set for the row-replacement identity on a (p+2) x (p+n) matrix.
/// j, t select one of the two trailing rows (0 or 1); s < p is the leading
/// row that gets replaced; p <= k < p+n is the bordering column.
struct RowReplacementIndices {
  std::size_t j = 0;
  std::size_t k = 0;
  std::size_t t = 0;
  std::size_t s = 0;
};

namespace detail {

template <class T>
DenseMatrix<T> bordered_minor_matrix(const DenseMatrix<T>& a, std::size_t p, std::size_t j,
                                     std::size_t k) {
  return embordered(a, EmborderSpec{p, p + j, k});
}

template <class T>
DenseMatrix<T> replace_row(DenseMatrix<T> m, std::size_t target, const DenseMatrix<T>& src,
                           std::size_t src_row, const std::vector<std::size_t>& src_cols) {
  for (std::size_t c = 0; c < src_cols.size(); ++c) m(target, c) = src(src_row, src_cols[c]);
  return m;
}

}  // namespace detail

/// Both sides of |a| m_jk^{ts} = |a^{ts}| m_jk - |a^{js}| m_tk.
/// Throws PreconditionError when the leading block is exactly singular.
template <class T>
IdentitySides<T> row_replacement_check(const DenseMatrix<T>& a, std::size_t p, const RowReplacementIndices& idx) {
  if (a.rows() != p + 2 || a.cols() <= p || p == 0)
    throw ArgumentError("row_replacement_check: matrix must have p+2 rows and more than p columns");
  if (idx.j > 1 || idx.t > 1 || idx.s >= p || idx.k < p || idx.k >= a.cols())
    throw ArgumentError("row_replacement_check: index out of range");

  std::vector<std::size_t> lead(p);
  for (std::size_t i = 0; i < p; ++i) lead[i] = i;
  const DenseMatrix<T> block = a.select(lead, lead);
  const T det_a = det_of(block);
  if (det_a == T{0}) throw PreconditionError("row_replacement_check: leading block is singular");

  auto with_col = lead;
  with_col.push_back(idx.k);

  const auto m_jk = detail::bordered_minor_matrix(a, p, idx.j, idx.k);
  const auto m_tk = detail::bordered_minor_matrix(a, p, idx.t, idx.k);
  const auto m_jk_ts = detail::replace_row(m_jk, idx.s, a, p + idx.t, with_col);
  const auto a_ts = detail::replace_row(block, idx.s, a, p + idx.t, lead);
  const auto a_js = detail::replace_row(block, idx.s, a, p + idx.j, lead);

  T first = det_of(a_ts) * det_of(m_jk);
  T second = det_of(a_js) * det_of(m_tk);
  T rhs = first - second;
  return {det_a * det_of(m_jk_ts), std::move(rhs), {std::move(first), std::move(second)}};
}

}  // namespace darboux
