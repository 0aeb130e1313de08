#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>

#include "darboux/common.hpp"

namespace darboux {

/// Truncated Taylor expansion f(r + h) = sum_{p=0}^{order} c_p h^p with
/// complex coefficients. Arithmetic truncates to the smaller order of the
/// operands, so a product or quotient is exact up to that order.
class Taylor {
 public:
  static constexpr int kMaxOrder = 15;

  Taylor() = default;
  explicit Taylor(int order) : order_(checked(order)) {}
  Taylor(cplx value, int order) : order_(checked(order)) { c_[0] = value; }

  /// Builds the expansion from derivatives f^(p)(r), p = 0..order.
  template <class Range>
  static Taylor from_derivatives(const Range& derivatives) {
    Taylor t(static_cast<int>(std::size(derivatives)) - 1);
    double fact = 1.0;
    int p = 0;
    for (const auto& d : derivatives) {
      if (p > 0) fact *= p;
      t.c_[p] = cplx(d) / fact;
      ++p;
    }
    return t;
  }

  int order() const { return order_; }
  cplx value() const { return c_[0]; }
  cplx& operator[](int p) { return c_[p]; }
  const cplx& operator[](int p) const { return c_[p]; }

  /// p-th derivative at the expansion point.
  cplx derivative(int p) const {
    double fact = 1.0;
    for (int q = 2; q <= p; ++q) fact *= q;
    return c_[p] * fact;
  }

  /// Series of f', one order shorter.
  Taylor differentiated() const {
    if (order_ == 0) throw CapabilityError("cannot differentiate an order-0 series");
    Taylor d(order_ - 1);
    for (int p = 0; p < order_; ++p) d.c_[p] = c_[p + 1] * static_cast<double>(p + 1);
    return d;
  }

  Taylor truncated(int order) const {
    Taylor t(std::min(order, order_));
    std::copy_n(c_.begin(), t.order_ + 1, t.c_.begin());
    return t;
  }

  Taylor conj() const {
    Taylor t(order_);
    for (int p = 0; p <= order_; ++p) t.c_[p] = std::conj(c_[p]);
    return t;
  }

  Taylor& operator+=(const Taylor& o) {
    order_ = std::min(order_, o.order_);
    for (int p = 0; p <= order_; ++p) c_[p] += o.c_[p];
    return *this;
  }
  Taylor& operator-=(const Taylor& o) {
    order_ = std::min(order_, o.order_);
    for (int p = 0; p <= order_; ++p) c_[p] -= o.c_[p];
    return *this;
  }
  Taylor& operator*=(cplx s) {
    for (int p = 0; p <= order_; ++p) c_[p] *= s;
    return *this;
  }
  Taylor& operator*=(const Taylor& o) { return *this = *this * o; }
  Taylor& operator/=(const Taylor& o) { return *this = *this / o; }

  friend Taylor operator+(Taylor a, const Taylor& b) { return a += b; }
  friend Taylor operator-(Taylor a, const Taylor& b) { return a -= b; }
  friend Taylor operator-(Taylor a) { return a *= cplx(-1.0); }
  friend Taylor operator*(Taylor a, cplx s) { return a *= s; }
  friend Taylor operator*(cplx s, Taylor a) { return a *= s; }

  friend Taylor operator*(const Taylor& a, const Taylor& b) {
    Taylor r(std::min(a.order_, b.order_));
    for (int p = 0; p <= r.order_; ++p) {
      cplx acc{};
      for (int q = 0; q <= p; ++q) acc += a.c_[q] * b.c_[p - q];
      r.c_[p] = acc;
    }
    return r;
  }

  friend Taylor operator/(const Taylor& a, const Taylor& b) {
    Taylor r(std::min(a.order_, b.order_));
    const cplx d0 = b.c_[0];
    for (int p = 0; p <= r.order_; ++p) {
      cplx acc = a.c_[p];
      for (int q = 1; q <= p; ++q) acc -= b.c_[q] * r.c_[p - q];
      r.c_[p] = acc / d0;
    }
    return r;
  }

 private:
  static int checked(int order) {
    if (order < 0 || order > kMaxOrder) throw CapabilityError("Taylor order out of range");
    return order;
  }

  int order_ = 0;
  std::array<cplx, kMaxOrder + 1> c_{};
};

}  // namespace darboux
