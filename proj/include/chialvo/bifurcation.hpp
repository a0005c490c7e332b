#pragma once

#include <optional>
#include <string_view>
#include <vector>

namespace chialvo {

enum class BifurcationKind { flip, fold };
enum class BifurcationParam { r, k };
enum class Criticality { supercritical, subcritical, not_applicable };

std::string_view to_string(BifurcationKind k);
std::string_view to_string(BifurcationParam w);
std::string_view to_string(Criticality c);

/// Normal-form conditions are reported as raw values; a magnitude below
/// this counts as a violation.
inline constexpr double kConditionViolation = 1e-8;

/// A codimension-one bifurcation of a fixed point.
///
/// Fold conditions: A1 = d2f/dx2, A2 = df/d(param).
/// Flip conditions: B1 = (f'')^2 / 2 + f''' / 3 (the criticality quantity),
/// B2 = d2f/dx d(param). Conditions that do not apply are empty.
struct BifurcationPoint {
  BifurcationKind kind = BifurcationKind::flip;
  BifurcationParam wrt = BifurcationParam::r;
  double x0 = 0.0;
  double param0 = 0.0;
  double r = 0.0;  // map parameters at the bifurcation
  double k = 0.0;
  std::optional<double> criticality_value;
  Criticality criticality = Criticality::not_applicable;
  std::optional<double> condition_A1;
  std::optional<double> condition_A2;
  std::optional<double> condition_B1;
  std::optional<double> condition_B2;

  /// True when every applicable condition is away from zero.
  bool conditions_hold() const noexcept;
};

/// Period-doubling of the right fixed point with r as parameter:
/// x0 = (k + 3 + sqrt(k^2 - 2k + 9)) / 2, r0 = x0 - ln(x0 (x0 - 2)).
BifurcationPoint flip_point(double k);

/// Fold points with r as parameter, 0 <= k < 3 - 2 sqrt2. One point for
/// k = 0, two otherwise (smaller x first).
std::vector<BifurcationPoint> fold_points(double k);

/// The k value at which the degenerate fold happens.
double fold_degenerate_k();

/// Lower bound on r for a fold with respect to k, 2 - sqrt2 - ln(2 sqrt2 - 2).
double fold_in_k_threshold();

/// Fold with k as parameter: x(r) solves (2x - x^2) e^{r - x} = 1 on
/// (0, 2 - sqrt2) and k* = x - x / (2 - x).
BifurcationPoint fold_in_k(double r);

/// Locates a flip or fold on [r_lo, r_hi] for fixed k without the closed
/// forms. Flip: the right fixed point is re-solved at every r and the
/// residual f'(x(r)) + 1 is bracketed. Fold: the local extremum of
/// f(x) - x at f'(x) = 1 is followed and its value is bracketed; it crosses
/// zero exactly where a fixed-point pair is born or dies.
BifurcationPoint detect_bifurcation_numerically(double k, double r_lo, double r_hi,
                                                BifurcationKind kind);

}  // namespace chialvo
