#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>

#include <boost/math/tools/toms748_solve.hpp>

#include "chialvo/errors.hpp"

namespace chialvo::roots {

/// Bracketed scalar root refinement (TOMS 748). The returned point is the
/// end of the final bracket with the smaller residual.
template <class F>
double refine(F&& fn, double lo, double hi, double flo, double fhi,
              int bits = 52, std::uintmax_t max_iter = 300) {
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (std::isnan(flo) || std::isnan(fhi) || (flo > 0.0) == (fhi > 0.0)) {
    throw BracketError("no sign change on [" + std::to_string(lo) + ", " +
                       std::to_string(hi) + "]");
  }
  std::uintmax_t iters = max_iter;
  const auto bracket = boost::math::tools::toms748_solve(
      fn, lo, hi, flo, fhi, boost::math::tools::eps_tolerance<double>(bits), iters);
  const double a = bracket.first;
  const double b = bracket.second;
  if (a == b) return a;
  return std::abs(fn(a)) <= std::abs(fn(b)) ? a : b;
}

template <class F>
double refine(F&& fn, double lo, double hi, int bits = 52) {
  return refine(fn, lo, hi, fn(lo), fn(hi), bits);
}

/// Bisection for residuals that are only piecewise smooth or expensive to
/// reason about; halves until the bracket width is below xtol.
template <class F>
double bisect(F&& fn, double lo, double hi, double xtol) {
  double flo = fn(lo);
  const double fhi = fn(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0)) {
    throw BracketError("no sign change on [" + std::to_string(lo) + ", " +
                       std::to_string(hi) + "]");
  }
  while (hi - lo > xtol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = fn(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace chialvo::roots
