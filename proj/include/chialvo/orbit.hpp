#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chialvo/map_core.hpp"

namespace chialvo {

struct Orbit {
  double initial = 0.0;
  std::vector<double> points;
  MapParams params{0.0, 0.0};
};

/// Drops the first `transient` points of x0, f(x0), f^2(x0), ... and keeps
/// the next n.
Orbit iterate(const MapParams& p, double x0, std::size_t n, std::size_t transient = 0);

/// Distance to c below which a point is coded as C.
inline constexpr double kCriticalTolerance = 1e-12;

/// Symbol of one point: '0' left of c, '1' right of c, 'C' on c.
char symbol_of(double x);

struct Itinerary {
  std::string symbols;  // over {'0', '1', 'C'}
};

/// Symbols of x0, f(x0), ..., f^{n-1}(x0).
Itinerary itinerary(const MapParams& p, double x0, std::size_t n);

/// Itinerary of the critical value f(c).
Itinerary kneading(const MapParams& p, std::size_t n);

/// Normalized occupation of bins over the dynamical core.
struct Histogram {
  double lo = 0.0;
  double hi = 0.0;
  std::vector<double> mass;   // per bin, sums with mass_outside to 1
  double mass_outside = 0.0;  // samples that fell outside [lo, hi]
  std::size_t samples = 0;

  double bin_width() const noexcept;
  double bin_center(std::size_t i) const noexcept;
};

/// Birkhoff occupation histogram of the orbit of x0 after `transient`
/// iterates, over the dynamical core of p.
Histogram birkhoff_histogram(const MapParams& p, double x0, std::size_t n, std::size_t bins,
                             std::size_t transient = 1000);

/// L1 distance between two histograms with identical binning.
double l1_distance(const Histogram& a, const Histogram& b);

enum class AttractorKind { periodic, interval_candidate, undetermined };
std::string_view to_string(AttractorKind k);

struct AttractorReport {
  AttractorKind kind = AttractorKind::undetermined;
  int period = 0;
  std::vector<double> cycle;      // in orbit order
  double cycle_multiplier = 0.0;  // (f^n)' on the cycle
  double lyapunov = 0.0;
  std::optional<Histogram> histogram;
};

struct AttractorOptions {
  int max_period = 64;
  std::size_t n_iter = 100000;
  std::size_t transient = 10000;
  double closure_tol = 1e-9;
  double interval_lyapunov = 0.01;  // threshold for interval_candidate
  std::size_t histogram_bins = 0;   // 0: no histogram
};

/// Follows the critical orbit, which is attracted by the periodic attractor
/// whenever one exists, and looks for the smallest closing period.
/// Neutral cycles count as attracting. Without a closing cycle the report is
/// interval_candidate if the Lyapunov estimate exceeds the threshold and
/// undetermined otherwise; Cantor attractors are never claimed.
AttractorReport detect_periodic_attractor(const MapParams& p,
                                          const AttractorOptions& opts = {});

/// Mean of log|f'(x_j)| over n iterates after the transient. Returns
/// -infinity when the orbit meets a zero of f' (the critical point, or x = 0).
double lyapunov(const MapParams& p, double x0, std::size_t n, std::size_t transient = 0);

/// Rank (1 = smallest) of each of f(c), ..., f^depth(c) among themselves.
/// Different signatures certify that two maps are not combinatorially
/// equivalent; equal signatures at finite depth certify nothing.
/// Throws TieError when two points are within 1e-9.
std::vector<int> orbit_order_signature(const MapParams& p, std::size_t depth);

}  // namespace chialvo
