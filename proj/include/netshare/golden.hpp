#pragma once

#include <cmath>
#include <functional>

namespace netshare {

/// Golden-section maximization on [a, b]. Returns the best evaluated point.
/// Assumes nothing beyond continuity: on a multimodal slice it converges to
/// a local maximum inside the bracket, so callers bracket the global one
/// with a dense grid first.
inline double golden_section_maximize(const std::function<double(double)>& f, double a, double b,
                                      double tol = 1e-10, int max_iter = 200) {
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - (b - a) * invphi;
  double d = a + (b - a) * invphi;
  double fc = f(c);
  double fd = f(d);
  for (int it = 0; it < max_iter && (b - a) > tol; ++it) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - (b - a) * invphi;
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + (b - a) * invphi;
      fd = f(d);
    }
  }
  return fc >= fd ? c : d;
}

}  // namespace netshare
