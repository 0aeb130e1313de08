#include "darboux/chain.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace darboux {

ScaledBasis zero_entry() {
  return {cplx{}, make_basis(BasisSolution::Kind::constant, 0.0, ChannelPotential::free())};
}

ScaledBasis unit_entry() {
  return {cplx{1.0}, make_basis(BasisSolution::Kind::constant, 0.0, ChannelPotential::free())};
}

namespace {

bool close(cplx a, cplx b) { return std::abs(a - b) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b)}); }

bool carries_spectrum(const ScaledBasis& e) {
  return e.coefficient != cplx{} && e.basis.kind() != BasisSolution::Kind::constant;
}

}  // namespace

TransformationMatrix::TransformationMatrix(Kind kind, std::size_t n, std::size_t m,
                                           std::vector<ScaledBasis> entries)
    : kind_(kind), n_(n), m_(m), entries_(std::move(entries)) {
  bool have = false;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (kind_ == Kind::singular && (i >= m_ || j >= m_)) continue;
      const auto& e = entry(i, j);
      if (!carries_spectrum(e)) continue;
      if (!have) {
        lambda_ = e.basis.spectral();
        have = true;
      } else if (!close(lambda_, e.basis.spectral())) {
        throw ArgumentError("transformation matrix entries disagree on the spectral value");
      }
    }
  }
}

TransformationMatrix TransformationMatrix::regular(std::size_t n, std::vector<ScaledBasis> entries) {
  if (n == 0) throw ArgumentError("transformation matrix needs n >= 1");
  if (entries.size() != n * n) throw ArgumentError("regular link needs n*n entries");
  return TransformationMatrix(Kind::regular, n, n, std::move(entries));
}

TransformationMatrix TransformationMatrix::singular(std::size_t n, std::size_t m,
                                                    std::vector<ScaledBasis> active) {
  if (m == 0 || m > n) throw ArgumentError("singular link needs 1 <= m <= n");
  if (active.size() != m * m) throw ArgumentError("singular link needs m*m active entries");
  std::vector<ScaledBasis> full(n * n, zero_entry());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i < m && j < m) full[i * n + j] = active[i * m + j];
      else if (i == j) full[i * n + j] = unit_entry();
    }
  }
  return TransformationMatrix(Kind::singular, n, m, std::move(full));
}

Matrix TransformationMatrix::derivative(double r, int order) const {
  Matrix out(n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out(i, j) = entry(i, j).derivative(r, order);
  return out;
}

TransformationMatrix TransformationMatrix::conjugated() const {
  TransformationMatrix out = *this;
  for (auto& e : out.entries_) {
    e.coefficient = std::conj(e.coefficient);
    e.basis = e.basis.conjugated();
  }
  out.lambda_ = std::conj(lambda_);
  return out;
}

double TransformationMatrix::equation_residual(double r, const std::vector<ChannelPotential>& v0) const {
  if (v0.size() != n_) throw ArgumentError("background size does not match the link");
  const Matrix u = value(r);
  const Matrix u2 = derivative(r, 2);
  double worst = 0.0;
  double scale = 0.0;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (kind_ == Kind::singular && (i >= m_ || j >= m_)) continue;
      const cplx res = -u2(i, j) + (v0[i].value(r) - lambda_) * u(i, j);
      worst = std::max(worst, std::abs(res));
      scale = std::max({scale, std::abs(u(i, j)), std::abs(u2(i, j))});
    }
  }
  return scale == 0.0 ? worst : worst / scale;
}

ChainSpec::ChainSpec(std::size_t n, std::size_t m, std::vector<ChannelPotential> v0,
                     std::vector<TransformationMatrix> links)
    : n_(n), m_(m), v0_(std::move(v0)), links_(std::move(links)) {
  if (n_ == 0) throw ArgumentError("chain needs n >= 1");
  if (m_ == 0 || m_ > n_) throw ArgumentError("chain needs 1 <= m <= n");
  if (v0_.size() != n_) throw ArgumentError("background must list one potential per channel");
  bool regular_seen = false;
  for (std::size_t k = 0; k < links_.size(); ++k) {
    const auto& u = links_[k];
    if (u.n() != n_) throw ArgumentError("link " + std::to_string(k + 1) + " has the wrong dimension");
    if (u.is_singular()) {
      if (regular_seen)
        throw ArgumentError("singular links must precede all regular links (link " + std::to_string(k + 1) + ")");
      if (u.m() != m_) throw ArgumentError("singular link " + std::to_string(k + 1) + " has subsystem size != m");
      ++singular_count_;
    } else {
      regular_seen = true;
    }
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        const auto& e = u.entry(i, j);
        if (!carries_spectrum(e)) continue;
        const auto& ch = e.basis.channel();
        if (ch.kind() == ChannelPotential::Kind::sampled || v0_[i].kind() == ChannelPotential::Kind::sampled)
          continue;
        const bool same = ch.same_as(v0_[i]) ||
                          (ch.kind() != ChannelPotential::Kind::sampled &&
                           v0_[i].kind() != ChannelPotential::Kind::sampled && ch.l() == 0 && v0_[i].l() == 0);
        if (!same)
          throw ArgumentError("link " + std::to_string(k + 1) + " row " + std::to_string(i + 1) +
                              " uses a basis from another channel");
      }
    }
    for (std::size_t l = 0; l < k; ++l)
      if (close(links_[l].spectral(), u.spectral()))
        throw ArgumentError("links " + std::to_string(l + 1) + " and " + std::to_string(k + 1) +
                            " share a spectral value");
  }
}

Eigen::MatrixXd ChainSpec::background_value(double r) const {
  Eigen::MatrixXd v = Eigen::MatrixXd::Zero(n_, n_);
  for (std::size_t i = 0; i < n_; ++i) v(i, i) = v0_[i].value(r);
  return v;
}

ChainSpec ChainSpec::prefix(std::size_t count) const {
  if (count > links_.size()) throw ArgumentError("prefix longer than the chain");
  return ChainSpec(n_, m_, v0_, std::vector<TransformationMatrix>(links_.begin(), links_.begin() + count));
}

}  // namespace darboux
