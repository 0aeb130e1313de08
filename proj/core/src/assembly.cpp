#include "darboux/assembly.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <string>

namespace darboux {

OperatorDescriptor operator_schedule(std::size_t block_row, std::size_t column, const ChainSpec& chain) {
  const std::size_t total = chain.size();
  const std::size_t singular = chain.singular_count();
  if (block_row > total || column > total) throw ArgumentError("operator_schedule: index out of range");
  const int b = static_cast<int>(block_row);
  if (column < singular) {
    if (block_row <= column) return {b, 0};
    return {0, b};
  }
  const int ms = static_cast<int>(singular);
  if (b <= ms) return {b, 0};
  return {ms, b - ms};
}

Matrix apply_Dm(const Matrix& value, const Matrix& derivative, std::size_t m) {
  if (value.rows() != derivative.rows() || value.cols() != derivative.cols())
    throw ArgumentError("apply_Dm: value and derivative shapes differ");
  if (m == 0 || m > static_cast<std::size_t>(value.rows())) throw ArgumentError("apply_Dm: m out of range");
  Matrix out = value;
  out.topRows(static_cast<Eigen::Index>(m)) = derivative.topRows(static_cast<Eigen::Index>(m));
  return out;
}

cplx apply_partial_m(cplx value, cplx derivative, std::size_t index, std::size_t m) {
  return index < m ? derivative : value;
}

Matrix eval_block(const TransformationMatrix& u, const OperatorDescriptor& op, std::size_t m, double r) {
  if (!(r > 0.0)) throw DomainError("eval_block: r must be positive");
  const std::size_t n = u.n();
  if (op.dm_power + op.derivatives > kMaxDerivativeOrder)
    throw CapabilityError("eval_block: derivative order exceeds the closure capability");
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const int order = op.order_for_row(i, m);
    for (std::size_t j = 0; j < n; ++j) out(i, j) = u.entry(i, j).derivative(r, order);
  }
  return out;
}

ComplexMatrix BlockAssembly::values() const {
  ComplexMatrix out(entries.rows(), entries.cols());
  for (std::size_t i = 0; i < entries.rows(); ++i)
    for (std::size_t j = 0; j < entries.cols(); ++j) out(i, j) = entries(i, j).value();
  return out;
}

namespace {

// Multiplier 1 + jitter * xi with xi in [-1, 1] fixed by (seed, source, order, i, j).
double jitter_factor(const AssemblyOptions& opts, std::size_t source, int order, std::size_t i, std::size_t j) {
  if (opts.jitter == 0.0) return 1.0;
  std::uint64_t z = opts.jitter_seed ^ (source * 0x9e3779b97f4a7c15ULL) ^
                    (static_cast<std::uint64_t>(order) << 40) ^ (i << 20) ^ (j << 8);
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  z ^= z >> 31;
  const double xi = 2.0 * (static_cast<double>(z >> 11) * 0x1.0p-53) - 1.0;
  return 1.0 + opts.jitter * xi;
}

// Derivatives 0..max_order of every link at one radius.
class DerivativeCache {
 public:
  DerivativeCache(const ChainSpec& chain, double r, int max_order, const AssemblyOptions& opts) {
    if (!(r > 0.0)) throw DomainError("assembly: r must be positive");
    if (max_order > kMaxDerivativeOrder)
      throw CapabilityError("assembly: derivative order " + std::to_string(max_order) +
                            " exceeds the closure capability");
    links_.reserve(chain.size());
    for (std::size_t l = 0; l < chain.size(); ++l) {
      std::vector<Matrix> d;
      d.reserve(static_cast<std::size_t>(max_order) + 1);
      for (int p = 0; p <= max_order; ++p) {
        Matrix m = chain.link(l).derivative(r, p);
        if (opts.jitter != 0.0)
          for (Eigen::Index i = 0; i < m.rows(); ++i)
            for (Eigen::Index j = 0; j < m.cols(); ++j)
              m(i, j) *= jitter_factor(opts, l, p, static_cast<std::size_t>(i), static_cast<std::size_t>(j));
        d.push_back(std::move(m));
      }
      links_.push_back(std::move(d));
    }
  }

  Taylor entry(std::size_t link, std::size_t i, std::size_t j, int order, int series_order) const {
    std::array<cplx, Taylor::kMaxOrder + 1> d{};
    for (int p = 0; p <= series_order; ++p) d[p] = links_[link][order + p](i, j);
    return Taylor::from_derivatives(std::span(d.data(), static_cast<std::size_t>(series_order) + 1));
  }

 private:
  std::vector<std::vector<Matrix>> links_;
};

Taylor psi_entry(const ScaledBasis& psi, std::size_t component, double r, int order, const AssemblyOptions& opts) {
  const int series_order = opts.series_order;
  if (order + series_order > kMaxDerivativeOrder)
    throw CapabilityError("assembly: derivative order exceeds the closure capability");
  std::array<cplx, Taylor::kMaxOrder + 1> d{};
  for (int p = 0; p <= series_order; ++p)
    d[p] = psi.derivative(r, order + p) * jitter_factor(opts, ~std::size_t{0}, order + p, component, 0);
  return Taylor::from_derivatives(std::span(d.data(), static_cast<std::size_t>(series_order) + 1));
}

void check_options(const AssemblyOptions& opts) {
  if (opts.series_order < 0 || opts.series_order > Taylor::kMaxOrder || opts.last_row_extra < 0)
    throw ArgumentError("assembly: bad options");
}

// Fills the nN x nN W block of `out` (which may be larger).
void fill_W(const ChainSpec& chain, const DerivativeCache& cache, int series_order, SeriesMatrix& out,
            std::vector<std::vector<OperatorDescriptor>>& schedule) {
  const std::size_t n = chain.n();
  const std::size_t m = chain.m();
  const std::size_t total = chain.size();
  schedule.assign(total, std::vector<OperatorDescriptor>(total));
  for (std::size_t b = 0; b < total; ++b) {
    for (std::size_t c = 0; c < total; ++c) {
      const auto op = operator_schedule(b, c, chain);
      schedule[b][c] = op;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          out(b * n + i, c * n + j) = cache.entry(c, i, j, op.order_for_row(i, m), series_order);
    }
  }
}

int max_order_needed(const ChainSpec& chain, const AssemblyOptions& opts) {
  return static_cast<int>(chain.size()) + 1 + opts.last_row_extra + opts.series_order;
}

}  // namespace

BlockAssembly build_W(const ChainSpec& chain, double r, const AssemblyOptions& opts) {
  check_options(opts);
  const DerivativeCache cache(chain, r, static_cast<int>(chain.size()) + opts.series_order, opts);
  const std::size_t dim = chain.n() * chain.size();
  BlockAssembly out{SeriesMatrix(dim, dim, Taylor(opts.series_order)), {}};
  fill_W(chain, cache, opts.series_order, out.entries, out.schedule);
  return out;
}

BlockAssembly build_Wj(const ChainSpec& chain, const SolutionVector& psi, std::size_t j, double r,
                       const AssemblyOptions& opts) {
  check_options(opts);
  const std::size_t n = chain.n();
  const std::size_t m = chain.m();
  const std::size_t total = chain.size();
  if (psi.size() != n) throw ArgumentError("build_Wj: psi must have n components");
  if (j >= n) throw ArgumentError("build_Wj: component index out of range");
  const DerivativeCache cache(chain, r, max_order_needed(chain, opts), opts);
  const std::size_t dim = n * total + 1;
  BlockAssembly out{SeriesMatrix(dim, dim, Taylor(opts.series_order)), {}};
  fill_W(chain, cache, opts.series_order, out.entries, out.schedule);

  // Psi column, then the bottom row.
  for (std::size_t b = 0; b < total; ++b) {
    const auto op = operator_schedule(b, total, chain);
    out.schedule[b].push_back(op);
    for (std::size_t i = 0; i < n; ++i)
      out.entries(b * n + i, dim - 1) = psi_entry(psi[i], i, r, op.order_for_row(i, m), opts);
  }
  std::vector<OperatorDescriptor> bottom(total + 1);
  for (std::size_t c = 0; c <= total; ++c) {
    auto op = operator_schedule(total, c, chain);
    op.derivatives += opts.last_row_extra;
    bottom[c] = op;
    const int order = op.order_for_row(j, m);
    if (c < total) {
      for (std::size_t col = 0; col < n; ++col)
        out.entries(dim - 1, c * n + col) = cache.entry(c, j, col, order, opts.series_order);
    } else {
      out.entries(dim - 1, dim - 1) = psi_entry(psi[j], j, r, order, opts);
    }
  }
  out.schedule.push_back(std::move(bottom));
  return out;
}

BlockAssembly build_Wij(const ChainSpec& chain, std::size_t i, std::size_t j, double r,
                        const AssemblyOptions& opts) {
  check_options(opts);
  const std::size_t n = chain.n();
  const std::size_t m = chain.m();
  const std::size_t total = chain.size();
  if (total == 0) throw ArgumentError("build_Wij: empty chain");
  if (i >= n || j >= n) throw ArgumentError("build_Wij: index out of range");
  const DerivativeCache cache(chain, r, max_order_needed(chain, opts), opts);
  const std::size_t dim = n * total;
  BlockAssembly out{SeriesMatrix(dim, dim, Taylor(opts.series_order)), {}};
  fill_W(chain, cache, opts.series_order, out.entries, out.schedule);
  const std::size_t target = (total - 1) * n + j;
  for (std::size_t c = 0; c < total; ++c) {
    const auto higher = operator_schedule(total, c, chain);
    const int order = higher.order_for_row(i, m);
    for (std::size_t col = 0; col < n; ++col)
      out.entries(target, c * n + col) = cache.entry(c, i, col, order, opts.series_order);
  }
  return out;
}

}  // namespace darboux
