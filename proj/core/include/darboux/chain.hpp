#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <optional>
#include <vector>

#include "darboux/basis.hpp"
#include "darboux/common.hpp"

namespace darboux {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// coefficient * basis(r); a zero coefficient marks a structurally zero entry.
struct ScaledBasis {
  cplx coefficient{};
  BasisSolution basis;

  cplx derivative(double r, int order) const {
    return coefficient == cplx{} ? cplx{} : coefficient * basis.derivative(r, order);
  }
  Taylor series(double r, int order) const {
    return coefficient == cplx{} ? Taylor(order) : basis.series(r, order) * coefficient;
  }
};

ScaledBasis zero_entry();
ScaledBasis unit_entry();

/// n x n matrix-valued function U(r) used as one link of a chain.
///
/// A singular link with subsystem size m has the block form
/// diag(U~(r), I_{n-m}); entries outside the leading m x m block are
/// structurally 0 or 1. A regular link is an arbitrary solution matrix of
/// H0 U = U Lambda.
class TransformationMatrix {
 public:
  enum class Kind { singular, regular };

  /// `entries` is row-major, n x n.
  static TransformationMatrix regular(std::size_t n, std::vector<ScaledBasis> entries);
  /// `active` is row-major, m x m; the rest is filled with the identity.
  static TransformationMatrix singular(std::size_t n, std::size_t m, std::vector<ScaledBasis> active);

  Kind kind() const { return kind_; }
  bool is_singular() const { return kind_ == Kind::singular; }
  std::size_t n() const { return n_; }
  /// Subsystem size for singular links; n for regular ones.
  std::size_t m() const { return m_; }
  cplx spectral() const { return lambda_; }

  const ScaledBasis& entry(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

  /// p-th derivative of every entry at r.
  Matrix derivative(double r, int order) const;
  Matrix value(double r) const { return derivative(r, 0); }

  /// Entrywise complex conjugate (spectral value conjugated).
  TransformationMatrix conjugated() const;

  /// max |(-U'' + V0 U - U Lambda)_{ij}| / max |U_{ij}| over the entries that
  /// must solve the equation (the identity block of a singular link is
  /// exempt).
  double equation_residual(double r, const std::vector<ChannelPotential>& v0) const;

 private:
  TransformationMatrix(Kind kind, std::size_t n, std::size_t m, std::vector<ScaledBasis> entries);

  Kind kind_;
  std::size_t n_;
  std::size_t m_;
  cplx lambda_{};
  std::vector<ScaledBasis> entries_;
};

/// Ordered chain of N links, the first M singular (sharing the subsystem
/// size m) and the remaining N - M regular, over a block-diagonal background.
class ChainSpec {
 public:
  ChainSpec(std::size_t n, std::size_t m, std::vector<ChannelPotential> v0,
            std::vector<TransformationMatrix> links);

  std::size_t n() const { return n_; }
  std::size_t m() const { return m_; }
  std::size_t size() const { return links_.size(); }
  std::size_t singular_count() const { return singular_count_; }
  const std::vector<TransformationMatrix>& links() const { return links_; }
  const TransformationMatrix& link(std::size_t k) const { return links_[k]; }
  const std::vector<ChannelPotential>& background() const { return v0_; }

  /// V0(r) as a real diagonal matrix.
  Eigen::MatrixXd background_value(double r) const;

  /// Chain made of the first `count` links.
  ChainSpec prefix(std::size_t count) const;

 private:
  std::size_t n_;
  std::size_t m_;
  std::vector<ChannelPotential> v0_;
  std::vector<TransformationMatrix> links_;
  std::size_t singular_count_ = 0;
};

}  // namespace darboux
