#pragma once

#include <cstdint>
#include <functional>
#include <string>

namespace netshare {

/// The externality function v(m): service value as a function of the
/// participant count. All solvers consume this closed interface.
///
/// Kinds:
///   Bounded(rho)   v(m) = 1 - rho^m, rho in (0,1). Saturates at 1.
///   Zipf           v(m) = log m for m >= 1, v(0) = 0 by convention so an
///                  empty platform has zero service value (never an error).
///   Metcalfe       v(m) = m.
///   GeneralConcave user-supplied v with v(0) = 0, non-decreasing and
///                  discretely concave (checked at construction on a prefix
///                  of the range).
class NetworkValueFn {
public:
  enum class Kind { Bounded, Zipf, Metcalfe, GeneralConcave };

  static NetworkValueFn bounded(double rho);
  static NetworkValueFn zipf();
  static NetworkValueFn metcalfe();
  static NetworkValueFn general_concave(std::function<double(std::uint64_t)> v,
                                        std::uint64_t checked_up_to = 1024);

  double evaluate(std::uint64_t m) const;
  double operator()(std::uint64_t m) const { return evaluate(m); }

  /// Evaluation at a real-valued participant mass, for the fluid threshold
  /// objectives. Zipf uses log(x) with log(x) = 0 for x <= 1; GeneralConcave
  /// interpolates linearly between adjacent integers.
  double fluid(double mass) const;

  Kind kind() const { return kind_; }

  /// Only meaningful for Bounded.
  double rho() const;

  std::string name() const;

private:
  NetworkValueFn(Kind kind, double rho, std::function<double(std::uint64_t)> fn);

  Kind kind_;
  double rho_ = 0.0;
  double log_rho_ = 0.0;
  std::function<double(std::uint64_t)> general_;
};

}  // namespace netshare
