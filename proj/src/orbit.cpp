#include "chialvo/orbit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "chialvo/errors.hpp"
#include "chialvo/fixed_points.hpp"

namespace chialvo {

Orbit iterate(const MapParams& p, double x0, std::size_t n, std::size_t transient) {
  Orbit orbit{x0, {}, p};
  orbit.points.reserve(n);
  double x = x0;
  for (std::size_t i = 0; i < transient; ++i) x = eval(p, x);
  for (std::size_t i = 0; i < n; ++i) {
    orbit.points.push_back(x);
    if (i + 1 < n) x = eval(p, x);
  }
  return orbit;
}

char symbol_of(double x) {
  if (std::abs(x - kCriticalPoint) <= kCriticalTolerance) return 'C';
  return x < kCriticalPoint ? '0' : '1';
}

Itinerary itinerary(const MapParams& p, double x0, std::size_t n) {
  Itinerary it;
  it.symbols.reserve(n);
  double x = x0;
  for (std::size_t i = 0; i < n; ++i) {
    it.symbols.push_back(symbol_of(x));
    if (i + 1 < n) x = eval(p, x);
  }
  return it;
}

Itinerary kneading(const MapParams& p, std::size_t n) {
  return itinerary(p, eval(p, kCriticalPoint), n);
}

double Histogram::bin_width() const noexcept {
  return mass.empty() ? 0.0 : (hi - lo) / static_cast<double>(mass.size());
}

double Histogram::bin_center(std::size_t i) const noexcept {
  return lo + (static_cast<double>(i) + 0.5) * bin_width();
}

Histogram birkhoff_histogram(const MapParams& p, double x0, std::size_t n, std::size_t bins,
                             std::size_t transient) {
  if (bins == 0) throw DomainError("histogram needs at least one bin");
  if (n == 0) throw DomainError("histogram needs at least one sample");
  const DynamicalCore core = dynamical_core(p);
  Histogram h;
  h.lo = core.lo;
  h.hi = core.hi;
  h.mass.assign(bins, 0.0);
  h.samples = n;

  std::vector<std::size_t> counts(bins, 0);
  std::size_t outside = 0;
  const double width = h.hi - h.lo;
  double x = x0;
  for (std::size_t i = 0; i < transient; ++i) x = eval(p, x);
  for (std::size_t i = 0; i < n; ++i) {
    if (!core.contains(x)) {
      ++outside;
    } else if (width <= 0.0) {
      ++counts[0];
    } else {
      const double t = (x - h.lo) / width * static_cast<double>(bins);
      const auto b = static_cast<std::size_t>(
          std::clamp(t, 0.0, static_cast<double>(bins) - 0.5));
      ++counts[b];
    }
    x = eval(p, x);
  }
  const double total = static_cast<double>(n);
  for (std::size_t b = 0; b < bins; ++b) {
    h.mass[b] = static_cast<double>(counts[b]) / total;
  }
  h.mass_outside = static_cast<double>(outside) / total;
  return h;
}

double l1_distance(const Histogram& a, const Histogram& b) {
  if (a.mass.size() != b.mass.size()) {
    throw DomainError("histograms have different bin counts");
  }
  double d = std::abs(a.mass_outside - b.mass_outside);
  for (std::size_t i = 0; i < a.mass.size(); ++i) d += std::abs(a.mass[i] - b.mass[i]);
  return d;
}

std::string_view to_string(AttractorKind k) {
  switch (k) {
    case AttractorKind::periodic: return "periodic";
    case AttractorKind::interval_candidate: return "interval_candidate";
    case AttractorKind::undetermined: return "undetermined";
  }
  return "?";
}

double lyapunov(const MapParams& p, double x0, std::size_t n, std::size_t transient) {
  if (n == 0) throw DomainError("lyapunov needs at least one iterate");
  double x = x0;
  for (std::size_t i = 0; i < transient; ++i) x = eval(p, x);
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = std::abs(deriv_x(p, x));
    if (d == 0.0 || std::abs(x - kCriticalPoint) <= 1e-300) {
      return -std::numeric_limits<double>::infinity();
    }
    sum += std::log(d);
    x = eval(p, x);
  }
  return sum / static_cast<double>(n);
}

namespace {

bool closes(const MapParams& p, double x, int period, double tol) {
  const double y = iterate_n(p, x, period);
  return std::abs(y - x) <= tol * std::max(1.0, std::abs(x));
}

int smallest_period(const MapParams& p, double x, int max_period, double tol) {
  double y = x;
  for (int q = 1; q <= max_period; ++q) {
    y = eval(p, y);
    if (std::abs(y - x) <= tol * std::max(1.0, std::abs(x))) return q;
  }
  return 0;
}

}  // namespace

AttractorReport detect_periodic_attractor(const MapParams& p, const AttractorOptions& opts) {
  if (opts.max_period < 1) throw DomainError("max_period must be at least 1");
  AttractorReport report;
  double x = kCriticalPoint;
  for (std::size_t i = 0; i < opts.transient; ++i) x = eval(p, x);
  const double after_transient = x;

  std::size_t used = 0;
  int period = 0;
  while (used <= opts.n_iter) {
    period = smallest_period(p, x, opts.max_period, opts.closure_tol);
    if (period > 0) {
      // Let the orbit settle further so every cycle point closes, not just x.
      x = iterate_n(p, x, 64 * period);
      bool all = true;
      double y = x;
      for (int i = 0; i < period && all; ++i) {
        all = closes(p, y, period, opts.closure_tol);
        y = eval(p, y);
      }
      if (all && smallest_period(p, x, period, opts.closure_tol) == period) break;
      period = 0;
    }
    x = iterate_n(p, x, opts.max_period);
    used += static_cast<std::size_t>(opts.max_period);
  }

  if (period > 0) {
    double lambda = 1.0;
    double y = x;
    for (int i = 0; i < period; ++i) {
      report.cycle.push_back(y);
      lambda *= deriv_x(p, y);
      y = eval(p, y);
    }
    if (std::abs(lambda) <= 1.0 + opts.closure_tol) {
      report.kind = AttractorKind::periodic;
      report.period = period;
      report.cycle_multiplier = lambda;
      report.lyapunov = lambda == 0.0 ? -std::numeric_limits<double>::infinity()
                                      : std::log(std::abs(lambda)) / period;
    } else {
      report.cycle.clear();
    }
  }

  if (report.kind != AttractorKind::periodic) {
    report.lyapunov = lyapunov(p, after_transient, std::max<std::size_t>(opts.n_iter, 1));
    report.kind = report.lyapunov > opts.interval_lyapunov ? AttractorKind::interval_candidate
                                                           : AttractorKind::undetermined;
  }
  if (opts.histogram_bins > 0) {
    report.histogram = birkhoff_histogram(p, kCriticalPoint, std::max<std::size_t>(opts.n_iter, 1),
                                          opts.histogram_bins, opts.transient);
  }
  return report;
}

std::vector<int> orbit_order_signature(const MapParams& p, std::size_t depth) {
  std::vector<double> pts;
  pts.reserve(depth);
  double x = kCriticalPoint;
  for (std::size_t i = 0; i < depth; ++i) {
    x = eval(p, x);
    pts.push_back(x);
  }
  std::vector<std::size_t> order(depth);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return pts[a] < pts[b]; });
  for (std::size_t i = 1; i < depth; ++i) {
    if (pts[order[i]] - pts[order[i - 1]] <= 1e-9) {
      throw TieError("critical orbit points f^" + std::to_string(order[i - 1] + 1) +
                     "(c) and f^" + std::to_string(order[i] + 1) + "(c) coincide");
    }
  }
  std::vector<int> rank(depth);
  for (std::size_t i = 0; i < depth; ++i) rank[order[i]] = static_cast<int>(i) + 1;
  return rank;
}

}  // namespace chialvo
