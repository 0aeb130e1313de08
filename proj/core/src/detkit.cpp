#include "darboux/detkit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <type_traits>

namespace darboux {

SquareMatrix::SquareMatrix(ComplexMatrix m) : m_(std::move(m)) {
  if (!m_.square() || m_.rows() == 0) throw ArgumentError("SquareMatrix: need a non-empty square matrix");
  for (const auto& z : m_.storage())
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw ArgumentError("SquareMatrix: non-finite entry");
}

cplx LogDeterminant::value() const {
  if (std::isinf(log_abs) && log_abs < 0) return cplx{};
  return phase * std::exp(log_abs);
}

namespace {

inline double magnitude(const cplx& z) { return std::abs(z); }
inline double magnitude(const Taylor& t) { return std::abs(t.value()); }

inline cplx zero_like(const cplx&) { return cplx{}; }
inline Taylor zero_like(const Taylor& t) { return Taylor(t.order()); }
inline cplx one_like(const cplx&) { return cplx{1.0, 0.0}; }
inline Taylor one_like(const Taylor& t) { return Taylor(cplx{1.0, 0.0}, t.order()); }

// Row-equilibrated LU with partial pivoting. Each row is divided by its
// largest entry magnitude before elimination; the logs of those factors are
// accumulated in log_scale.
template <class T>
ScaledDeterminant<T> lu_determinant(DenseMatrix<T> a) {
  if (!a.square()) throw ArgumentError("determinant: matrix must be square");
  const std::size_t n = a.rows();
  ScaledDeterminant<T> out;
  if (n == 0) {
    if constexpr (std::is_same_v<T, cplx>) out.mantissa = cplx{1.0, 0.0};
    else out.mantissa = T(cplx{1.0, 0.0}, 0);
    return out;
  }

  double row_norm_product = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    double big = 0.0;
    for (std::size_t j = 0; j < n; ++j) big = std::max(big, magnitude(a(i, j)));
    if (big == 0.0) {
      out.mantissa = zero_like(a(0, 0));
      out.ill_conditioned = true;
      return out;
    }
    double norm2 = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      a(i, j) *= cplx(1.0 / big);
      const double mag = magnitude(a(i, j));
      norm2 += mag * mag;
    }
    row_norm_product *= std::sqrt(norm2);
    out.log_scale += std::log(big);
  }

  T det = one_like(a(0, 0));
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    double best = magnitude(a(col, col));
    for (std::size_t i = col + 1; i < n; ++i) {
      const double m = magnitude(a(i, col));
      if (m > best) {
        best = m;
        piv = i;
      }
    }
    if (best == 0.0) {
      out.mantissa = zero_like(a(0, 0));
      out.ill_conditioned = true;
      return out;
    }
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
      det *= cplx(-1.0);
    }
    const T pivot = a(col, col);
    det *= pivot;
    for (std::size_t i = col + 1; i < n; ++i) {
      const T factor = a(i, col) / pivot;
      for (std::size_t j = col + 1; j < n; ++j) a(i, j) -= factor * a(col, j);
    }
  }
  out.mantissa = det;
  out.ill_conditioned = magnitude(det) < kIllConditionedRatio * row_norm_product;
  return out;
}

}  // namespace

LogDeterminant log_determinant(const ComplexMatrix& m) {
  const auto sd = lu_determinant(m);
  LogDeterminant out;
  out.ill_conditioned = sd.ill_conditioned;
  const double mag = std::abs(sd.mantissa);
  if (mag == 0.0) {
    out.log_abs = -std::numeric_limits<double>::infinity();
    out.phase = cplx{};
    return out;
  }
  out.log_abs = std::log(mag) + sd.log_scale;
  out.phase = sd.mantissa / mag;
  return out;
}

cplx determinant(const ComplexMatrix& m) { return log_determinant(m).value(); }

ScaledDeterminant<Taylor> series_determinant(const SeriesMatrix& m) { return lu_determinant(m); }

BigInt exact_determinant(const IntegerMatrix& m) {
  if (!m.square()) throw ArgumentError("exact_determinant: matrix must be square");
  const std::size_t n = m.rows();
  if (n == 0) return BigInt{1};
  IntegerMatrix a = m;
  BigInt sign{1};
  BigInt prev{1};
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return BigInt{0};
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

}  // namespace darboux
