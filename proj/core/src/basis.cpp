#include "darboux/basis.hpp"

#include <array>
#include <cmath>
#include <span>
#include <sstream>

namespace darboux {

ChannelPotential ChannelPotential::centrifugal(int l) {
  if (l < 0) throw ArgumentError("centrifugal channel needs l >= 0");
  return ChannelPotential(Kind::centrifugal, l, {});
}

ChannelPotential ChannelPotential::sampled(Evaluator eval) {
  if (!eval) throw ArgumentError("sampled channel needs an evaluator");
  return ChannelPotential(Kind::sampled, 0, std::move(eval));
}

double ChannelPotential::derivative(double r, int order) const {
  switch (kind_) {
    case Kind::free:
      return 0.0;
    case Kind::centrifugal: {
      if (l_ == 0) return 0.0;
      if (r == 0.0) throw DomainError("centrifugal potential is singular at r = 0");
      // d^p r^-2 = (-1)^p (p+1)! r^-(p+2)
      double c = static_cast<double>(l_ * (l_ + 1));
      for (int q = 0; q < order; ++q) c *= -(q + 2);
      return c * std::pow(r, -(order + 2));
    }
    case Kind::sampled:
      return eval_(r, order);
  }
  return 0.0;
}

namespace {

double falling(int power, int q) {
  double out = 1.0;
  for (int i = 0; i < q; ++i) out *= static_cast<double>(power - i);
  return out;
}

double binomial(int n, int k) {
  double out = 1.0;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

cplx evaluate_terms(const std::vector<ExpPowerTerm>& terms, double r, int order) {
  cplx total{};
  for (const auto& t : terms) {
    if (t.coefficient == cplx{}) continue;
    const cplx e = t.rate == cplx{} ? cplx{1.0} : std::exp(t.rate * r);
    cplx acc{};
    cplx rate_pow{1.0};
    // Leibniz: sum_q C(p,q) (d^q r^power) rate^(p-q)
    std::array<cplx, Taylor::kMaxOrder + 2> rate_powers{};
    for (int q = 0; q <= order; ++q) {
      rate_powers[q] = rate_pow;
      rate_pow *= t.rate;
    }
    for (int q = 0; q <= order; ++q) {
      const double fq = falling(t.power, q);
      if (fq == 0.0) continue;
      acc += binomial(order, q) * fq * std::pow(r, t.power - q) * rate_powers[order - q];
    }
    total += t.coefficient * e * acc;
  }
  return total;
}

bool kind_is_d(BasisSolution::Kind k) {
  return k == BasisSolution::Kind::jost_d || k == BasisSolution::Kind::regular_d;
}

}  // namespace

bool BasisSolution::has_singular_origin() const {
  for (const auto& t : terms_)
    if (t.power < 0 && t.coefficient != cplx{}) return true;
  return false;
}

const std::vector<ExpPowerTerm>& BasisSolution::terms_at(double r) const {
  if (!small_terms_.empty() && std::abs(k_ * r) < small_radius_) return small_terms_;
  return terms_;
}

cplx BasisSolution::derivative(double r, int order) const {
  if (order < 0 || order > Taylor::kMaxOrder + 1)
    throw CapabilityError("basis derivative order out of range");
  const auto& terms = terms_at(r);
  if (r == 0.0)
    for (const auto& t : terms)
      if (t.power < 0 && t.coefficient != cplx{}) throw DomainError(label() + " has a pole at r = 0");
  return evaluate_terms(terms, r, order);
}

Taylor BasisSolution::series(double r, int order) const {
  if (order < 0 || order > Taylor::kMaxOrder) throw CapabilityError("basis series order out of range");
  std::array<cplx, Taylor::kMaxOrder + 1> d{};
  for (int p = 0; p <= order; ++p) d[p] = derivative(r, p);
  return Taylor::from_derivatives(std::span(d.data(), static_cast<std::size_t>(order) + 1));
}

BasisSolution BasisSolution::conjugated() const {
  BasisSolution out = *this;
  for (auto& t : out.terms_) {
    t.coefficient = std::conj(t.coefficient);
    t.rate = std::conj(t.rate);
  }
  for (auto& t : out.small_terms_) t.coefficient = std::conj(t.coefficient);
  out.k_ = std::conj(k_);
  out.lambda_ = std::conj(lambda_);
  return out;
}

cplx BasisSolution::equation_residual(double r) const {
  return derivative(r, 2) - (channel_.value(r) - lambda_) * value(r);
}

std::string BasisSolution::label() const {
  std::ostringstream os;
  os << to_string(kind_) << "(k=" << k_ << ")";
  return os.str();
}

BasisSolution make_basis(BasisSolution::Kind kind, cplx k, const ChannelPotential& channel) {
  using K = BasisSolution::Kind;
  const bool d_kind = kind_is_d(kind);
  if (kind == K::custom) throw ArgumentError("use make_custom_basis for custom solutions");
  if (kind != K::constant) {
    const bool centrifugal2 = channel.kind() == ChannelPotential::Kind::centrifugal && channel.l() == 2;
    const bool free = channel.kind() == ChannelPotential::Kind::free ||
                      (channel.kind() == ChannelPotential::Kind::centrifugal && channel.l() == 0);
    if (d_kind && !centrifugal2) throw ArgumentError("d-wave solutions need a centrifugal l = 2 channel");
    if (!d_kind && !free) throw ArgumentError(std::string(to_string(kind)) + " needs a free channel");
  }
  if (d_kind && k == cplx{}) throw DomainError("d-wave solution with k = 0");

  const cplx ik = kI * k;
  std::vector<ExpPowerTerm> terms;
  cplx lambda = k * k;
  std::vector<ExpPowerTerm> small;
  double small_radius = 0.0;
  switch (kind) {
    case K::jost_s:
      terms = {{1.0, 0, ik}};
      break;
    case K::jost_d:
      terms = {{1.0, 0, ik}, {3.0 * kI / k, -1, ik}, {-3.0 / (k * k), -2, ik}};
      break;
    case K::regular_s:
      terms = {{0.5, 0, ik}, {-0.5, 0, -ik}};
      break;
    case K::regular_d: {
      const cplx k2 = k * k;
      terms = {{1.5 / k2, -2, ik}, {-1.5 / k2, -2, -ik}, {-0.5, 0, ik},
               {0.5, 0, -ik},      {-1.5 * kI / k, -1, ik}, {-1.5 * kI / k, -1, -ik}};
      // i x j_2(x) = i sum_s (-1)^s x^(2s+3) / (2^s s! (2s+5)!!), x = k r
      double denom = 15.0;  // 2^0 0! 5!!
      cplx kpow = k * k * k;
      for (int s = 0; s < 20; ++s) {
        if (s > 0) {
          denom *= 2.0 * s * (2.0 * s + 5.0);
          kpow *= -k2;
        }
        small.push_back({kI * kpow / denom, 2 * s + 3, cplx{}});
      }
      small_radius = 1.0;
      break;
    }
    case K::exp:
      terms = {{1.0, 0, k}};
      lambda = -k * k;
      break;
    case K::sinh:
      terms = {{0.5, 0, k}, {-0.5, 0, -k}};
      lambda = -k * k;
      break;
    case K::cosh:
      terms = {{0.5, 0, k}, {0.5, 0, -k}};
      lambda = -k * k;
      break;
    case K::constant:
      terms = {{1.0, 0, cplx{}}};
      lambda = 0.0;
      break;
    case K::custom:
      break;
  }
  BasisSolution out(kind, k, lambda, channel, std::move(terms));
  out.small_terms_ = std::move(small);
  out.small_radius_ = small_radius;
  return out;
}

BasisSolution make_custom_basis(std::vector<ExpPowerTerm> terms, cplx spectral,
                                const ChannelPotential& channel) {
  if (terms.empty()) throw ArgumentError("custom basis needs at least one term");
  return BasisSolution(BasisSolution::Kind::custom, cplx{}, spectral, channel, std::move(terms));
}

BasisSolution::Kind parse_basis_kind(std::string_view name) {
  using K = BasisSolution::Kind;
  static constexpr std::array<std::pair<std::string_view, K>, 9> table{{{"jost_s", K::jost_s},
                                                                        {"jost_d", K::jost_d},
                                                                        {"regular_s", K::regular_s},
                                                                        {"regular_d", K::regular_d},
                                                                        {"exp", K::exp},
                                                                        {"sinh", K::sinh},
                                                                        {"cosh", K::cosh},
                                                                        {"constant", K::constant},
                                                                        {"custom", K::custom}}};
  for (const auto& [n, k] : table)
    if (n == name) return k;
  throw ArgumentError("unknown basis kind '" + std::string(name) + "'");
}

std::string_view to_string(BasisSolution::Kind kind) {
  using K = BasisSolution::Kind;
  switch (kind) {
    case K::jost_s: return "jost_s";
    case K::jost_d: return "jost_d";
    case K::regular_s: return "regular_s";
    case K::regular_d: return "regular_d";
    case K::exp: return "exp";
    case K::sinh: return "sinh";
    case K::cosh: return "cosh";
    case K::constant: return "constant";
    case K::custom: return "custom";
  }
  return "?";
}

}  // namespace darboux
