#include "chialvo/fixed_points.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "chialvo/errors.hpp"
#include "chialvo/roots.hpp"

namespace chialvo {

std::string_view to_string(Stability s) {
  switch (s) {
    case Stability::superattracting: return "superattracting";
    case Stability::attracting: return "attracting";
    case Stability::neutral: return "neutral";
    case Stability::repelling: return "repelling";
  }
  return "?";
}

std::string_view to_string(Branch b) {
  switch (b) {
    case Branch::left: return "left";
    case Branch::critical: return "critical";
    case Branch::right: return "right";
  }
  return "?";
}

std::string_view to_string(CoreCase c) {
  switch (c) {
    case CoreCase::trivial_global_attractor: return "trivial_global_attractor";
    case CoreCase::decreasing_branch_only: return "decreasing_branch_only";
    case CoreCase::core_f2c_fc: return "core_f2c_fc";
    case CoreCase::core_x0_y0: return "core_x0_y0";
    case CoreCase::left_fixed_point_inside: return "left_fixed_point_inside";
  }
  return "?";
}

bool DynamicalCore::contains(double x, double rel_tol) const noexcept {
  const double slack = rel_tol * std::max(1.0, std::max(std::abs(lo), std::abs(hi)));
  return x >= lo - slack && x <= hi + slack;
}

namespace {

constexpr double kTangencyResidual = 1e-12;

struct Candidate {
  double x;
  bool tangent;
};

}  // namespace

FixedPointConfiguration find_fixed_points(const MapParams& p) {
  const auto g = [&](double x) { return eval(p, x) - x; };
  const auto h = [&](double x) { return deriv_x(p, x) - 1.0; };

  // f' increases on (0, 2 - sqrt2) and decreases on (2 - sqrt2, 2), and is
  // negative beyond 2, so f'(x) = 1 has at most two roots.
  const double m = 2.0 - std::numbers::sqrt2;
  std::vector<double> breaks{0.0};
  std::vector<double> turning;
  const double hm = h(m);
  if (hm > 0.0) {
    turning.push_back(roots::refine(h, 0.0, m));
    turning.push_back(roots::refine(h, m, kCriticalPoint));
  } else if (hm == 0.0) {
    turning.push_back(m);
  }
  breaks.insert(breaks.end(), turning.begin(), turning.end());
  breaks.push_back(std::max(eval(p, kCriticalPoint) + 1.0, 10.0));

  std::vector<Candidate> found;
  std::vector<double> gb(breaks.size());
  for (std::size_t i = 0; i < breaks.size(); ++i) {
    gb[i] = g(breaks[i]);
  }
  if (gb.front() == 0.0) found.push_back({0.0, false});
  for (std::size_t i = 1; i + 1 < breaks.size(); ++i) {
    if (std::abs(gb[i]) <= kTangencyResidual) {
      found.push_back({breaks[i], true});
      gb[i] = 0.0;
    }
  }
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double ga = gb[i];
    const double gc = gb[i + 1];
    if (ga == 0.0 || gc == 0.0) continue;
    if ((ga > 0.0) != (gc > 0.0)) {
      found.push_back({roots::refine(g, breaks[i], breaks[i + 1], ga, gc), false});
    }
  }

  std::sort(found.begin(), found.end(),
            [](const Candidate& a, const Candidate& b) { return a.x < b.x; });

  FixedPointConfiguration config;
  for (std::size_t i = 0; i < found.size();) {
    std::size_t j = i + 1;
    bool tangent = found[i].tangent;
    while (j < found.size() && found[j].x - found[i].x <= kDegenerateSeparation) {
      tangent = true;
      ++j;
    }
    // Prefer the tangency location when a merged cluster contains one.
    double x = found[i].x;
    for (std::size_t q = i; q < j; ++q) {
      if (found[q].tangent) x = found[q].x;
    }
    FixedPoint fp = classify_stability(p, x);
    fp.degenerate = tangent;
    config.degenerate = config.degenerate || tangent;
    config.points.push_back(fp);
    i = j;
  }
  return config;
}

FixedPoint classify_stability(const MapParams& p, double x) {
  const MapJet j = jet(p, x);
  if (std::abs(j.value - x) > 1e-10 * std::max(1.0, std::abs(x))) {
    throw DomainError("x = " + std::to_string(x) + " is not a fixed point");
  }
  FixedPoint fp;
  fp.x = x;
  fp.multiplier = j.dx;
  const double a = std::abs(j.dx);
  if (a == 0.0) {
    fp.stability = Stability::superattracting;
  } else if (std::abs(1.0 - a) <= kNeutralBand) {
    fp.stability = Stability::neutral;
  } else if (a < 1.0) {
    fp.stability = Stability::attracting;
  } else {
    fp.stability = Stability::repelling;
  }
  if (std::abs(x - kCriticalPoint) <= 1e-12) {
    fp.branch = Branch::critical;
  } else {
    fp.branch = x < kCriticalPoint ? Branch::left : Branch::right;
  }
  return fp;
}

std::optional<double> right_fixed_point(const MapParams& p) {
  const double fc = eval(p, kCriticalPoint);
  const double g2 = fc - kCriticalPoint;
  if (g2 <= 0.0) return std::nullopt;
  // g is strictly decreasing on [2, inf) and f <= f(2) < hi.
  const double hi = std::max(fc + 1.0, 10.0);
  const auto g = [&](double x) { return eval(p, x) - x; };
  return roots::refine(g, kCriticalPoint, hi, g2, g(hi));
}

bool core_condition(const MapParams& p) {
  const double fc = eval(p, kCriticalPoint);
  const double f2c = eval(p, fc);
  return f2c < kCriticalPoint && kCriticalPoint < fc;
}

double right_preimage(const MapParams& p, double target) {
  const double fc = eval(p, kCriticalPoint);
  if (!(target <= fc)) {
    throw BracketError("target " + std::to_string(target) +
                       " lies above the critical value f(2) = " + std::to_string(fc));
  }
  if (!(target > p.k())) {
    throw BracketError("target " + std::to_string(target) +
                       " is not above k; f only approaches k asymptotically");
  }
  if (target == fc) return kCriticalPoint;
  const auto g = [&](double y) { return eval(p, y) - target; };
  double hi = 2.0 * kCriticalPoint;
  while (g(hi) >= 0.0) {
    hi *= 2.0;
    if (hi > 1e6) {
      throw BracketError("right preimage bracket could not be grown");
    }
  }
  return roots::refine(g, kCriticalPoint, hi);
}

namespace {

std::size_t count_inside(const FixedPointConfiguration& config, const DynamicalCore& core) {
  return static_cast<std::size_t>(std::count_if(
      config.points.begin(), config.points.end(),
      [&](const FixedPoint& fp) { return core.contains(fp.x); }));
}

}  // namespace

DynamicalCore dynamical_core(const MapParams& p) {
  const double fc = eval(p, kCriticalPoint);
  const double f2c = eval(p, fc);
  if (f2c < 0.0) {
    throw NumericError("f^2(c) < 0, impossible for k >= 0");
  }

  if (p.k() >= 2.0) {
    return {f2c, fc, CoreCase::decreasing_branch_only, true};
  }

  const FixedPointConfiguration config = find_fixed_points(p);
  std::vector<double> left;
  std::optional<double> right;
  for (const FixedPoint& fp : config.points) {
    if (fp.x > kCriticalPoint) {
      right = fp.x;
    } else {
      left.push_back(fp.x);
    }
  }

  DynamicalCore core;
  if (!right) {
    // f(2) <= 2: f is increasing on [0, 2] and the critical orbit decreases
    // monotonically to the largest fixed point.
    const double attractor = left.empty() ? kCriticalPoint : left.back();
    core = {attractor, attractor, CoreCase::trivial_global_attractor, true};
    return core;
  }

  if (left.empty() || f2c >= left.back()) {
    core = {f2c, fc, CoreCase::core_f2c_fc, false};
  } else if (p.k() == 0.0) {
    // x1 sits inside [f^2(c), f(c)]; points below x1 fall into x = 0.
    core = {0.0, fc, CoreCase::left_fixed_point_inside, false};
  } else if (left.size() >= 2 && f2c >= left.front()) {
    const double x0 = left.front();
    const double y0 = right_preimage(p, x0);
    core = {x0, y0, CoreCase::core_x0_y0, false};
  } else {
    // f^2(c) lies left of every left fixed point, where f(x) > x, so
    // [f^2(c), f(c)] is still invariant.
    core = {f2c, fc, CoreCase::core_f2c_fc, false};
  }
  core.contains_unique_fixed_point = count_inside(config, core) == 1;
  return core;
}

}  // namespace chialvo
