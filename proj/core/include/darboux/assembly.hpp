#pragma once

// Block assemblies W, W_j and W_{i,j} built from the links of a chain.
//
// Block rows and columns are 0-based. Block row b of column c carries the
// operator d^{derivatives} D_m^{dm_power} applied to link c. Within a block,
// scalar rows i < m are differentiated dm_power + derivatives times, the
// others derivatives times; both operators commute.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "darboux/chain.hpp"
#include "darboux/detkit.hpp"

namespace darboux {

struct OperatorDescriptor {
  int dm_power = 0;
  int derivatives = 0;

  /// Derivative order this operator applies to scalar row `row`.
  int order_for_row(std::size_t row, std::size_t m) const {
    return row < m ? dm_power + derivatives : derivatives;
  }
  friend bool operator==(const OperatorDescriptor&, const OperatorDescriptor&) = default;
};

/// n-vector function Psi = (psi_1 .. psi_n).
using SolutionVector = std::vector<ScaledBasis>;

/// Operator in block row `block_row` (0..N; N is the extra bottom row of
/// W_j) for column `column` (0..N; N is the Psi column of W_j).
OperatorDescriptor operator_schedule(std::size_t block_row, std::size_t column, const ChainSpec& chain);

/// D_m applied to a matrix (or a single column) given its value and first
/// derivative: rows < m take the derivative, the rest keep the value.
Matrix apply_Dm(const Matrix& value, const Matrix& derivative, std::size_t m);

/// Scalar variant: differentiates component `index` iff index < m.
cplx apply_partial_m(cplx value, cplx derivative, std::size_t index, std::size_t m);

/// op(u) evaluated at r > 0 for a chain with subsystem size m.
Matrix eval_block(const TransformationMatrix& u, const OperatorDescriptor& op, std::size_t m, double r);

struct AssemblyOptions {
  /// Entries are Taylor series of this order (0: plain values).
  int series_order = 0;
  /// Extra derivatives on the last scalar row of W_j (1 gives Gamma_j).
  int last_row_extra = 0;
  /// Relative perturbation of every basis derivative value, for sensitivity
  /// probes. The perturbation of a given value depends only on the seed and
  /// the value's identity, so W, W_j and W_ij see the same perturbed inputs.
  double jitter = 0.0;
  std::uint64_t jitter_seed = 0;
};

/// Numeric assembly plus the operator that produced each block.
struct BlockAssembly {
  SeriesMatrix entries;
  /// schedule[b][c]: operator of block row b, column c.
  std::vector<std::vector<OperatorDescriptor>> schedule;

  std::size_t dim() const { return entries.rows(); }
  ComplexMatrix values() const;
};

/// nN x nN matrix W(U_1..U_M; U_{M+1}..U_N).
BlockAssembly build_W(const ChainSpec& chain, double r, const AssemblyOptions& opts = {});

/// (nN+1) x (nN+1) matrix W_j: W bordered by the Psi column and the j-th
/// scalar row of the next block row.
BlockAssembly build_Wj(const ChainSpec& chain, const SolutionVector& psi, std::size_t j, double r,
                       const AssemblyOptions& opts = {});

/// W with the j-th scalar row of its last block row replaced by the i-th
/// scalar row of the next-order operator applied to the same link.
BlockAssembly build_Wij(const ChainSpec& chain, std::size_t i, std::size_t j, double r,
                        const AssemblyOptions& opts = {});

/// Highest derivative order the assemblies may request from a basis.
inline constexpr int kMaxDerivativeOrder = Taylor::kMaxOrder;

}  // namespace darboux
