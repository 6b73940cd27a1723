#include "netshare/network_value.hpp"

#include <cmath>
#include <stdexcept>

namespace netshare {
namespace {

// exp(-45) < 2^-54, so 1 - rho^m rounds to exactly 1.0 beyond this point.
constexpr double kSaturationLogThreshold = -45.0;

}  // namespace

NetworkValueFn::NetworkValueFn(Kind kind, double rho, std::function<double(std::uint64_t)> fn)
    : kind_(kind), rho_(rho), general_(std::move(fn)) {
  if (kind_ == Kind::Bounded) log_rho_ = std::log(rho_);
}

NetworkValueFn NetworkValueFn::bounded(double rho) {
  if (!(rho > 0.0 && rho < 1.0)) {
    throw std::invalid_argument("NetworkValueFn::bounded: rho must lie in (0,1)");
  }
  return NetworkValueFn(Kind::Bounded, rho, nullptr);
}

NetworkValueFn NetworkValueFn::zipf() { return NetworkValueFn(Kind::Zipf, 0.0, nullptr); }

NetworkValueFn NetworkValueFn::metcalfe() { return NetworkValueFn(Kind::Metcalfe, 0.0, nullptr); }

NetworkValueFn NetworkValueFn::general_concave(std::function<double(std::uint64_t)> v,
                                               std::uint64_t checked_up_to) {
  if (!v) throw std::invalid_argument("NetworkValueFn::general_concave: null function");
  if (v(0) != 0.0) {
    throw std::invalid_argument("NetworkValueFn::general_concave: v(0) must be 0");
  }
  // Concavity is enforced on increments from m = 1 on; the anchor v(0) = 0
  // stays outside the window so log-like functions with v(1) = 0 pass.
  double prev = 0.0;
  double prev_increment = 0.0;
  for (std::uint64_t m = 1; m <= checked_up_to; ++m) {
    const double value = v(m);
    const double increment = value - prev;
    if (increment < 0.0) {
      throw std::invalid_argument("NetworkValueFn::general_concave: v decreases at m=" +
                                  std::to_string(m));
    }
    if (m > 2 && increment > prev_increment + 1e-12) {
      throw std::invalid_argument("NetworkValueFn::general_concave: v not concave at m=" +
                                  std::to_string(m));
    }
    prev = value;
    prev_increment = increment;
  }
  return NetworkValueFn(Kind::GeneralConcave, 0.0, std::move(v));
}

double NetworkValueFn::evaluate(std::uint64_t m) const {
  switch (kind_) {
    case Kind::Bounded:
      if (m == 0) return 0.0;
      if (static_cast<double>(m) * log_rho_ < kSaturationLogThreshold) return 1.0;
      return 1.0 - std::pow(rho_, static_cast<double>(m));
    case Kind::Zipf:
      return m == 0 ? 0.0 : std::log(static_cast<double>(m));
    case Kind::Metcalfe:
      return static_cast<double>(m);
    case Kind::GeneralConcave:
      return general_(m);
  }
  return 0.0;
}

double NetworkValueFn::fluid(double mass) const {
  if (!(mass >= 0.0)) {
    throw std::invalid_argument("NetworkValueFn::fluid: mass must be >= 0");
  }
  switch (kind_) {
    case Kind::Bounded:
      if (mass == 0.0) return 0.0;
      if (mass * log_rho_ < kSaturationLogThreshold) return 1.0;
      return 1.0 - std::pow(rho_, mass);
    case Kind::Zipf:
      return mass <= 1.0 ? 0.0 : std::log(mass);
    case Kind::Metcalfe:
      return mass;
    case Kind::GeneralConcave: {
      const double lo = std::floor(mass);
      const double frac = mass - lo;
      const auto m_lo = static_cast<std::uint64_t>(lo);
      const double v_lo = general_(m_lo);
      if (frac == 0.0) return v_lo;
      return v_lo + frac * (general_(m_lo + 1) - v_lo);
    }
  }
  return 0.0;
}

double NetworkValueFn::rho() const {
  if (kind_ != Kind::Bounded) {
    throw std::logic_error("NetworkValueFn::rho: only defined for the bounded kind");
  }
  return rho_;
}

std::string NetworkValueFn::name() const {
  switch (kind_) {
    case Kind::Bounded:
      return "bounded";
    case Kind::Zipf:
      return "zipf";
    case Kind::Metcalfe:
      return "metcalfe";
    case Kind::GeneralConcave:
      return "general";
  }
  return "unknown";
}

}  // namespace netshare
