#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "darboux/common.hpp"
#include "darboux/series.hpp"

namespace darboux {

/// Diagonal entry of the background potential V0 for one channel.
class ChannelPotential {
 public:
  enum class Kind { free, centrifugal, sampled };
  using Evaluator = std::function<double(double r, int derivative_order)>;

  static ChannelPotential free() { return ChannelPotential(Kind::free, 0, {}); }
  static ChannelPotential centrifugal(int l);
  /// User-supplied potential; `eval(r, p)` must return the p-th derivative.
  static ChannelPotential sampled(Evaluator eval);

  Kind kind() const { return kind_; }
  int l() const { return l_; }

  double value(double r) const { return derivative(r, 0); }
  double derivative(double r, int order) const;

  bool same_as(const ChannelPotential& other) const {
    return kind_ != Kind::sampled && kind_ == other.kind_ && l_ == other.l_;
  }

 private:
  ChannelPotential(Kind kind, int l, Evaluator eval) : kind_(kind), l_(l), eval_(std::move(eval)) {}

  Kind kind_;
  int l_ = 0;
  Evaluator eval_;
};

/// One term c * r^power * exp(rate * r).
struct ExpPowerTerm {
  cplx coefficient;
  int power = 0;
  cplx rate;
};

/// One-channel closed-form solution with analytic derivatives of any order.
///
/// Every supported kind is a finite sum of ExpPowerTerm, so derivatives follow
/// from the Leibniz rule without numerical differentiation. `spectral()` is
/// the value lambda in b'' = (v(r) - lambda) b.
class BasisSolution {
 public:
  enum class Kind { jost_s, jost_d, regular_s, regular_d, exp, sinh, cosh, constant, custom };

  Kind kind() const { return kind_; }
  cplx wavenumber() const { return k_; }
  cplx spectral() const { return lambda_; }
  const ChannelPotential& channel() const { return channel_; }
  const std::vector<ExpPowerTerm>& terms() const { return terms_; }
  bool has_singular_origin() const;

  cplx value(double r) const { return derivative(r, 0); }
  cplx derivative(double r, int order) const;
  /// Expansion at r to the given order.
  Taylor series(double r, int order) const;

  /// Complex conjugate function for real r (spectral value conjugated).
  BasisSolution conjugated() const;

  /// Residual b'' - (v - lambda) b at r, for definition checks.
  cplx equation_residual(double r) const;

  std::string label() const;

  friend BasisSolution make_basis(Kind kind, cplx k, const ChannelPotential& channel);
  friend BasisSolution make_custom_basis(std::vector<ExpPowerTerm> terms, cplx spectral,
                                         const ChannelPotential& channel);

 private:
  BasisSolution(Kind kind, cplx k, cplx lambda, ChannelPotential channel, std::vector<ExpPowerTerm> terms)
      : kind_(kind), k_(k), lambda_(lambda), channel_(std::move(channel)), terms_(std::move(terms)) {}

  const std::vector<ExpPowerTerm>& terms_at(double r) const;

  Kind kind_;
  cplx k_;
  cplx lambda_;
  ChannelPotential channel_;
  std::vector<ExpPowerTerm> terms_;
  // Power series used for |k r| < small_radius_ where the closed form cancels.
  std::vector<ExpPowerTerm> small_terms_;
  double small_radius_ = 0.0;
};

/// Closed-form solutions. For jost_* and regular_* the spectral value is k^2
/// and the functions are f_s(kr) = e^{ikr},
/// f_d(kr) = e^{ikr}(1 + 3i/(kr) - 3/(kr)^2), phi_s(kr) = i sin(kr),
/// phi_d(kr) = i[(3 - k^2 r^2) sin(kr) - 3kr cos(kr)] / (kr)^2.
/// For exp/sinh/cosh the argument is k r and the spectral value is -k^2.
/// `constant` is the function 1 (used for identity blocks; no spectral value).
/// d-kinds require a centrifugal l = 2 channel, the others a free channel
/// (constant accepts any channel).
BasisSolution make_basis(BasisSolution::Kind kind, cplx k, const ChannelPotential& channel);

/// Arbitrary finite sum of exp-power terms. The caller vouches for the
/// spectral value; `equation_residual` can check it.
BasisSolution make_custom_basis(std::vector<ExpPowerTerm> terms, cplx spectral,
                                const ChannelPotential& channel);

BasisSolution::Kind parse_basis_kind(std::string_view name);
std::string_view to_string(BasisSolution::Kind kind);

}  // namespace darboux
