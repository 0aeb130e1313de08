#pragma once

// Link-by-link application of a chain, used as the independent oracle for
// the determinant formulas. Every quantity is carried as a truncated matrix
// Taylor series at one radius, so each link costs one order:
//
//   w_k = (dY_k) Y_k^{-1},  F_k = F_{k-1} + w_k,
//   L_k = D_m - w_k (singular links) or d - w_k (regular links),
//   Y_{k+1} = L_k ... L_1 U_{k+1}.

#include <cstddef>
#include <optional>
#include <vector>

#include "darboux/assembly.hpp"
#include "darboux/chain.hpp"
#include "darboux/transform.hpp"

namespace darboux {

/// Matrix-valued truncated Taylor series; coefficient p multiplies h^p.
class MatrixSeries {
 public:
  MatrixSeries() = default;
  explicit MatrixSeries(std::vector<Matrix> coefficients);
  static MatrixSeries zero(Eigen::Index rows, Eigen::Index cols, int order);
  /// Expansion of u at r to the given order.
  static MatrixSeries of(const TransformationMatrix& u, double r, int order);
  static MatrixSeries of(const SolutionVector& psi, double r, int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Matrix& coefficient(int p) const { return c_[static_cast<std::size_t>(p)]; }
  /// p-th derivative at the expansion point.
  Matrix derivative(int p) const;

  MatrixSeries differentiated() const;
  /// D_m: rows < m differentiated, the others truncated by one order.
  MatrixSeries dm_applied(std::size_t m) const;
  MatrixSeries truncated(int order) const;
  /// Series inverse; nullopt when the leading coefficient is numerically singular.
  std::optional<MatrixSeries> inverse(double rcond_floor = 1e-13) const;

  friend MatrixSeries operator+(const MatrixSeries& a, const MatrixSeries& b);
  friend MatrixSeries operator-(const MatrixSeries& a, const MatrixSeries& b);
  friend MatrixSeries operator*(const MatrixSeries& a, const MatrixSeries& b);

 private:
  std::vector<Matrix> c_;
};

struct StepwiseSample {
  /// False when some intermediate Y_k is singular at this radius.
  bool available = false;
  Matrix F;
  Matrix dF;
  Matrix potential;  // V_0 - 2 dF
  /// Y_k and dY_k/dr for every link (Y_1 = U_1).
  std::vector<Matrix> intermediate;
  std::vector<Matrix> intermediate_derivative;
  /// Columns are d^p Phi/dr^p, p = 0..solution_order (empty without psi).
  Matrix solution;
};

class StepwiseChain {
 public:
  explicit StepwiseChain(ChainSpec chain) : chain_(std::move(chain)) {}

  const ChainSpec& chain() const { return chain_; }

  /// Applies the chain at r. With `psi`, also transforms it and returns
  /// `solution_order` derivatives of the result.
  StepwiseSample at(double r, const SolutionVector* psi = nullptr, int solution_order = 2) const;

  PotentialTable potential(const RadialGrid& grid) const;

 private:
  ChainSpec chain_;
};

}  // namespace darboux
