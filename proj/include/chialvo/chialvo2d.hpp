#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "chialvo/map_core.hpp"
#include "chialvo/orbit.hpp"

namespace chialvo {

/// Parameters of the full model
///   x' = x^2 exp(y - x) + k,   y' = a y - b x + c.
class FullParams {
 public:
  /// Requires a in (0, 1), b in [0, 1), c > 0, k >= 0.
  FullParams(double a, double b, double c, double k);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double c() const noexcept { return c_; }
  double k() const noexcept { return k_; }

  /// c / (1 - a), the y-coordinate of the rest state at k = 0.
  double rest_recovery() const noexcept { return c_ / (1.0 - a_); }

 private:
  double a_, b_, c_, k_;
};

struct State2D {
  double x = 0.0;
  double y = 0.0;
};

struct Trajectory2D {
  std::vector<State2D> states;  // initial state first, n + 1 entries
  FullParams params{0.5, 0.0, 1.0, 0.0};
};

Trajectory2D iterate2d(const FullParams& fp, double x0, double y0, std::size_t n);

/// Fixed points (x, y) with x >= 0, ascending in x. y = (c - b x) / (1 - a).
std::vector<State2D> fixed_points_2d(const FullParams& fp);

/// Mean of y over the last `window` states when their peak-to-peak spread is
/// at most tol.
std::optional<double> slow_plateau(const Trajectory2D& tr, std::size_t window, double tol);

/// Voltage trace of the reduced map, kept as its own entry point for the
/// mixed-mode oscillation runs.
Orbit mmo_trace(const MapParams& p, double x0, std::size_t n);

}  // namespace chialvo
