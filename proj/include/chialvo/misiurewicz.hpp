#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace chialvo {

/// Largest k for which the three-step landing f^3(c) = x_f is searched.
inline constexpr double kMisiurewiczMaxK = 0.58;

/// One column of the transversality data at a parameter r:
/// the unstable fixed point z, zeta = f(c), zeta1 = f(zeta), the derivative
/// of the continued preimage dzeta/dr, df/dr at c, and
/// gamma = dzeta/dr - df/dr(c).
struct MisiurewiczResult {
  double k = 0.0;
  double r_star = 0.0;
  double z = 0.0;
  double zeta = 0.0;
  double zeta1 = 0.0;
  double dzeta_dr = 0.0;
  double df_dr_at_c = 0.0;
  double gamma = 0.0;
  double landing_residual = 0.0;  // f^3(c) - z
  double z_multiplier = 0.0;      // f'(z)
};

/// d(r) = f^3(c) - x_f(r), with x_f the fixed point right of c.
/// Empty where that fixed point does not exist.
std::optional<double> landing_distance(double k, double r);

/// Bracketed solve of d(r) = 0 on [r_lo, r_hi]. Throws DomainError above
/// k = 0.58, BracketError without a sign change, NumericError when z is not
/// repelling.
MisiurewiczResult misiurewicz_search(double k, double r_lo, double r_hi);

/// Every [r, r + step] on the grid where d changes sign.
std::vector<std::pair<double, double>> bracket_scan_for_misiurewicz(double k, double r_lo,
                                                                    double r_hi,
                                                                    double step);

/// Derivative of the fixed point z(r) right of c.
/// k = 0: z / (z - 1); k > 0: z^2 / (exp(z - r) + z^2 - 2z).
double dz_dr(double k, double r, double z);

/// Closed form of dzeta/dr at (k, r) for the triple (z, zeta, zeta1).
double dzeta_dr(double k, double r, double z, double zeta, double zeta1);

/// Recomputes dzeta_dr and gamma of a populated result.
double gamma(const MisiurewiczResult& res);

/// All transversality terms evaluated at a given r. Unlike
/// misiurewicz_search, the landing f^3(c) = z is not enforced; the residual
/// is reported instead. Used to tabulate at a rounded estimate of r*.
MisiurewiczResult misiurewicz_terms(double k, double r);

struct GammaCurveRow {
  double k = 0.0;
  std::optional<MisiurewiczResult> result;
  std::string error;  // filled when result is empty
};

/// r* and gamma for k = k_lo, k_lo + step, ..., k_hi. Each row is searched
/// near the previous r*; a row that fails is recorded and the scan goes on.
std::vector<GammaCurveRow> gamma_curve(double k_lo, double k_hi, double step);

}  // namespace chialvo
