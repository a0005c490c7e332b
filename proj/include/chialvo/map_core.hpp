#pragma once

#include <limits>

namespace chialvo {

/// Parameters of the reduced map f(x) = x^2 exp(r - x) + k.
class MapParams {
 public:
  /// Throws DomainError when k < 0 or either value is not finite.
  MapParams(double r, double k);

  double r() const noexcept { return r_; }
  double k() const noexcept { return k_; }

  friend bool operator==(const MapParams&, const MapParams&) = default;

 private:
  double r_;
  double k_;
};

/// The critical point of f on (0, inf); independent of (r, k).
inline constexpr double kCriticalPoint = 2.0;

/// Largest admissible value of r - x before exp(r - x) overflows.
inline constexpr double kMaxExponent = 700.0;

/// Value and derivatives of f at one point, all built from a single
/// evaluation of exp(r - x).
struct MapJet {
  double value;   // f
  double dx;      // f'
  double dxx;     // f''
  double dxxx;    // f'''
  double dr;      // df/dr
  double dxr;     // d2f/dxdr
};

MapJet jet(const MapParams& p, double x);

double eval(const MapParams& p, double x);
double deriv_x(const MapParams& p, double x);
double deriv2_x(const MapParams& p, double x);
double deriv3_x(const MapParams& p, double x);

double deriv_r(const MapParams& p, double x);
/// Always 1: k enters additively.
double deriv_k(const MapParams& p, double x);
double deriv_xr(const MapParams& p, double x);
/// Always 0.
double deriv_xk(const MapParams& p, double x);

/// Closed-form Schwarzian derivative. It does not depend on (r, k).
/// Returns -infinity where f' vanishes (x = 0 and x = 2).
double schwarzian(const MapParams& p, double x);
double schwarzian(double x);

/// f applied n times.
double iterate_n(const MapParams& p, double x, int n);

}  // namespace chialvo
