#include "chialvo/bifurcation.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "chialvo/errors.hpp"
#include "chialvo/fixed_points.hpp"
#include "chialvo/map_core.hpp"
#include "chialvo/roots.hpp"

namespace chialvo {

std::string_view to_string(BifurcationKind k) {
  return k == BifurcationKind::flip ? "flip" : "fold";
}

std::string_view to_string(BifurcationParam w) {
  return w == BifurcationParam::r ? "r" : "k";
}

std::string_view to_string(Criticality c) {
  switch (c) {
    case Criticality::supercritical: return "supercritical";
    case Criticality::subcritical: return "subcritical";
    case Criticality::not_applicable: return "not_applicable";
  }
  return "?";
}

bool BifurcationPoint::conditions_hold() const noexcept {
  for (const auto& c : {condition_A1, condition_A2, condition_B1, condition_B2}) {
    if (c && std::abs(*c) < kConditionViolation) return false;
  }
  return true;
}

namespace {

void require_k(double k) {
  if (!std::isfinite(k) || k < 0.0) {
    throw DomainError("k must be finite and non-negative");
  }
}

BifurcationPoint make_fold_in_r(double k, double x0, double r0) {
  const MapParams p(r0, k);
  const MapJet j = jet(p, x0);
  BifurcationPoint b;
  b.kind = BifurcationKind::fold;
  b.wrt = BifurcationParam::r;
  b.x0 = x0;
  b.param0 = r0;
  b.r = r0;
  b.k = k;
  b.condition_A1 = j.dxx;
  b.condition_A2 = j.dr;
  return b;
}

BifurcationPoint make_flip_in_r(double k, double x0, double r0) {
  const MapParams p(r0, k);
  const MapJet j = jet(p, x0);
  BifurcationPoint b;
  b.kind = BifurcationKind::flip;
  b.wrt = BifurcationParam::r;
  b.x0 = x0;
  b.param0 = r0;
  b.r = r0;
  b.k = k;
  const double q = 0.5 * j.dxx * j.dxx + j.dxxx / 3.0;
  b.condition_B1 = q;
  b.condition_B2 = j.dxr;
  b.criticality_value = q;
  b.criticality = q > 0.0 ? Criticality::supercritical : Criticality::subcritical;
  return b;
}

}  // namespace

BifurcationPoint flip_point(double k) {
  require_k(k);
  const double x0 = (k + 3.0 + std::sqrt(k * k - 2.0 * k + 9.0)) / 2.0;
  const double r0 = x0 - std::log(x0 * (x0 - 2.0));
  return make_flip_in_r(k, x0, r0);
}

double fold_degenerate_k() { return 3.0 - 2.0 * std::numbers::sqrt2; }

std::vector<BifurcationPoint> fold_points(double k) {
  require_k(k);
  if (k >= fold_degenerate_k()) {
    throw DomainError("fold with respect to r requires k < 3 - 2 sqrt2, got k = " +
                      std::to_string(k));
  }
  const auto r_of = [](double x) { return x - std::log((2.0 - x) * x); };
  if (k == 0.0) {
    return {make_fold_in_r(0.0, 1.0, 1.0)};
  }
  const double disc = std::sqrt(k * k - 6.0 * k + 1.0);
  const double x1 = (k + 1.0 - disc) / 2.0;
  const double x2 = (k + 1.0 + disc) / 2.0;
  return {make_fold_in_r(k, x1, r_of(x1)), make_fold_in_r(k, x2, r_of(x2))};
}

double fold_in_k_threshold() {
  return 2.0 - std::numbers::sqrt2 - std::log(2.0 * std::numbers::sqrt2 - 2.0);
}

BifurcationPoint fold_in_k(double r) {
  if (!std::isfinite(r) || r <= fold_in_k_threshold()) {
    throw DomainError("fold with respect to k requires r > " +
                      std::to_string(fold_in_k_threshold()));
  }
  const double hi = 2.0 - std::numbers::sqrt2 - 1e-12;
  const auto m = [&](double x) { return (2.0 * x - x * x) * std::exp(r - x) - 1.0; };
  double x = 0.0;
  try {
    x = roots::refine(m, 1e-12, hi);
  } catch (const BracketError&) {
    throw DomainError("multiplier equation has no root below 2 - sqrt2 at r = " +
                      std::to_string(r));
  }
  const double k_star = x - x / (2.0 - x);
  const MapParams p(r, std::max(k_star, 0.0));
  const MapJet j = jet(p, x);
  BifurcationPoint b;
  b.kind = BifurcationKind::fold;
  b.wrt = BifurcationParam::k;
  b.x0 = x;
  b.param0 = k_star;
  b.r = r;
  b.k = k_star;
  b.condition_A1 = j.dxx;
  b.condition_A2 = deriv_k(p, x);
  return b;
}

namespace {

BifurcationPoint detect_flip(double k, double r_lo, double r_hi) {
  const auto branch = [&](double r) {
    const auto x = right_fixed_point(MapParams(r, k));
    if (!x) {
      throw BracketError("no fixed point on the decreasing branch at r = " +
                         std::to_string(r));
    }
    return *x;
  };
  const auto residual = [&](double r) {
    return deriv_x(MapParams(r, k), branch(r)) + 1.0;
  };
  const double r0 = roots::refine(residual, r_lo, r_hi);
  return make_flip_in_r(k, branch(r0), r0);
}

// Root of f'(x) = 1 on one side of 2 - sqrt2, if the pair of roots exists.
std::optional<double> turning_point(const MapParams& p, bool upper) {
  const double m = 2.0 - std::numbers::sqrt2;
  const auto h = [&](double x) { return deriv_x(p, x) - 1.0; };
  if (h(m) <= 0.0) return std::nullopt;
  return upper ? roots::refine(h, m, kCriticalPoint) : roots::refine(h, 0.0, m);
}

BifurcationPoint detect_fold(double k, double r_lo, double r_hi) {
  // Extremum value of g = f - x at the turning point, or +-1 when the pair of
  // turning points has not formed yet (then g is monotone, g' < 0, and the
  // sign is that of a collapsed extremum, which never touches zero).
  const auto extremum = [&](double r, bool upper) -> std::optional<double> {
    const MapParams p(r, k);
    const auto e = turning_point(p, upper);
    if (!e) return std::nullopt;
    return eval(p, *e) - *e;
  };
  for (const bool upper : {true, false}) {
    const auto lo = extremum(r_lo, upper);
    const auto hi = extremum(r_hi, upper);
    const double g_lo = lo.value_or(-1.0);
    const double g_hi = hi.value_or(-1.0);
    if ((g_lo > 0.0) == (g_hi > 0.0) && g_lo != 0.0 && g_hi != 0.0) continue;
    const auto residual = [&](double r) { return extremum(r, upper).value_or(-1.0); };
    // The residual jumps where the turning points are born, so plain
    // bisection is used rather than an interpolating solver.
    const double r0 = roots::bisect(residual, r_lo, r_hi, 1e-15);
    const auto e = turning_point(MapParams(r0, k), upper);
    if (!e) break;
    return make_fold_in_r(k, *e, r0);
  }
  throw BracketError("no fold on [" + std::to_string(r_lo) + ", " + std::to_string(r_hi) +
                     "] for k = " + std::to_string(k));
}

}  // namespace

BifurcationPoint detect_bifurcation_numerically(double k, double r_lo, double r_hi,
                                                BifurcationKind kind) {
  require_k(k);
  if (!(r_lo < r_hi)) {
    throw DomainError("bracket must satisfy r_lo < r_hi");
  }
  return kind == BifurcationKind::flip ? detect_flip(k, r_lo, r_hi)
                                       : detect_fold(k, r_lo, r_hi);
}

}  // namespace chialvo
