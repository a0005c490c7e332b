#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "chialvo/map_core.hpp"

namespace chialvo {

enum class Stability { superattracting, attracting, neutral, repelling };
enum class Branch { left, critical, right };

std::string_view to_string(Stability s);
std::string_view to_string(Branch b);

/// |1 - |mu|| at or below this is reported as neutral.
inline constexpr double kNeutralBand = 1e-9;
/// Roots closer than this are merged and flagged as a tangency.
inline constexpr double kDegenerateSeparation = 1e-8;

struct FixedPoint {
  double x = 0.0;
  double multiplier = 0.0;
  Stability stability = Stability::repelling;
  Branch branch = Branch::left;
  bool degenerate = false;  // double root (fold tangency)

  /// Neutral points attract for maps with negative Schwarzian derivative.
  bool attracts() const noexcept { return stability != Stability::repelling; }
};

struct FixedPointConfiguration {
  std::vector<FixedPoint> points;  // ascending in x
  bool degenerate = false;         // some root is a double root

  std::size_t count() const noexcept { return points.size(); }
};

/// All fixed points on [0, inf). The map g(x) = f(x) - x has at most three
/// monotone pieces on [0, inf), split at the roots of f'(x) = 1; each piece
/// is bracketed and refined separately.
FixedPointConfiguration find_fixed_points(const MapParams& p);

/// Multiplier, stability and branch of a fixed point. Throws DomainError if
/// |f(x) - x| exceeds 1e-10 * max(1, |x|).
FixedPoint classify_stability(const MapParams& p, double x);

/// The unique fixed point on the decreasing branch (x > 2), when f(2) > 2.
std::optional<double> right_fixed_point(const MapParams& p);

enum class CoreCase {
  trivial_global_attractor,
  decreasing_branch_only,
  core_f2c_fc,
  core_x0_y0,
  left_fixed_point_inside,
};

std::string_view to_string(CoreCase c);

/// Invariant interval carrying the nontrivial dynamics.
struct DynamicalCore {
  double lo = 0.0;
  double hi = 0.0;
  CoreCase case_tag = CoreCase::trivial_global_attractor;
  bool contains_unique_fixed_point = false;

  bool contains(double x, double rel_tol = 1e-12) const noexcept;
};

DynamicalCore dynamical_core(const MapParams& p);

/// f^2(c) < c < f(c).
bool core_condition(const MapParams& p);

/// The preimage y > 2 of `target` on the decreasing branch.
/// Requires k < target <= f(2); throws BracketError otherwise.
double right_preimage(const MapParams& p, double target);

}  // namespace chialvo
