#include "chialvo/map_core.hpp"

#include <cmath>
#include <string>

#include "chialvo/errors.hpp"

namespace chialvo {

MapParams::MapParams(double r, double k) : r_(r), k_(k) {
  if (!std::isfinite(r) || !std::isfinite(k)) {
    throw DomainError("map parameters must be finite");
  }
  if (k < 0.0) {
    throw DomainError("k must be non-negative, got " + std::to_string(k));
  }
}

namespace {

// exp(r - x), with the overflow guard shared by every formula.
double shared_exp(const MapParams& p, double x) {
  if (!std::isfinite(x)) {
    throw DomainError("map argument must be finite");
  }
  const double exponent = p.r() - x;
  if (exponent > kMaxExponent) {
    throw RangeError("exp(r - x) overflows: r - x = " + std::to_string(exponent));
  }
  return std::exp(exponent);
}

double checked(double v) {
  if (!std::isfinite(v)) {
    throw RangeError("map evaluation left the double range");
  }
  return v;
}

}  // namespace

MapJet jet(const MapParams& p, double x) {
  const double e = shared_exp(p, x);
  if (e == 0.0) {
    // Every term carries the factor exp(r - x).
    return {p.k(), 0.0, 0.0, 0.0, 0.0, 0.0};
  }
  const double x2 = x * x;
  const double slope = x * (2.0 - x) * e;
  return {
      checked(x2 * e + p.k()),
      checked(slope),
      checked((x2 - 4.0 * x + 2.0) * e),
      checked((-x2 + 6.0 * x - 6.0) * e),
      checked(x2 * e),
      checked(slope),
  };
}

double eval(const MapParams& p, double x) {
  const double e = shared_exp(p, x);
  if (e == 0.0) return p.k();
  return checked(x * x * e + p.k());
}

double deriv_x(const MapParams& p, double x) {
  const double e = shared_exp(p, x);
  if (e == 0.0) return 0.0;
  return checked(x * (2.0 - x) * e);
}

double deriv2_x(const MapParams& p, double x) {
  const double e = shared_exp(p, x);
  if (e == 0.0) return 0.0;
  return checked((x * x - 4.0 * x + 2.0) * e);
}

double deriv3_x(const MapParams& p, double x) {
  const double e = shared_exp(p, x);
  if (e == 0.0) return 0.0;
  return checked((-x * x + 6.0 * x - 6.0) * e);
}

double deriv_r(const MapParams& p, double x) {
  const double e = shared_exp(p, x);
  if (e == 0.0) return 0.0;
  return checked(x * x * e);
}

double deriv_k(const MapParams&, double) { return 1.0; }

double deriv_xr(const MapParams& p, double x) { return deriv_x(p, x); }

double deriv_xk(const MapParams&, double) { return 0.0; }

double schwarzian(double x) {
  if (!std::isfinite(x)) {
    throw DomainError("schwarzian argument must be finite");
  }
  const double w = 2.0 * x - x * x;
  if (w == 0.0) {
    return -std::numeric_limits<double>::infinity();
  }
  const double num = (((x - 8.0) * x + 24.0) * x - 24.0) * x + 12.0;
  return -0.5 * num / (w * w);
}

double schwarzian(const MapParams&, double x) { return schwarzian(x); }

double iterate_n(const MapParams& p, double x, int n) {
  for (int i = 0; i < n; ++i) x = eval(p, x);
  return x;
}

}  // namespace chialvo
