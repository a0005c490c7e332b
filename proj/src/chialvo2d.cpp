#include "chialvo/chialvo2d.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "chialvo/errors.hpp"
#include "chialvo/roots.hpp"

namespace chialvo {

FullParams::FullParams(double a, double b, double c, double k) : a_(a), b_(b), c_(c), k_(k) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) || !std::isfinite(k)) {
    throw DomainError("full-model parameters must be finite");
  }
  if (!(a > 0.0 && a < 1.0)) throw DomainError("a must lie in (0, 1)");
  if (!(b >= 0.0 && b < 1.0)) throw DomainError("b must lie in [0, 1)");
  if (!(c > 0.0)) throw DomainError("c must be positive");
  if (k < 0.0) throw DomainError("k must be non-negative");
}

Trajectory2D iterate2d(const FullParams& fp, double x0, double y0, std::size_t n) {
  if (n == 0) throw DomainError("iterate2d needs n >= 1");
  Trajectory2D tr{{}, fp};
  tr.states.reserve(n + 1);
  State2D s{x0, y0};
  tr.states.push_back(s);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = eval(MapParams(s.y, fp.k()), s.x);
    const double y = fp.a() * s.y - fp.b() * s.x + fp.c();
    s = {x, y};
    tr.states.push_back(s);
  }
  return tr;
}

std::vector<State2D> fixed_points_2d(const FullParams& fp) {
  const double denom = 1.0 - fp.a();
  const auto y_of = [&](double x) { return (fp.c() - fp.b() * x) / denom; };
  const auto g = [&](double x) { return eval(MapParams(y_of(x), fp.k()), x) - x; };

  // For x >= 2 the term x^2 exp(y(x) - x) is decreasing (b >= 0), so once
  // g < 0 there it stays negative.
  constexpr std::size_t kGrid = 100000;
  double x_max = 10.0;
  while (g(x_max) >= 0.0) {
    x_max *= 2.0;
    if (x_max > 1e6) throw BracketError("fixed-point scan range could not be bounded");
  }
  std::vector<double> roots_found;
  const std::size_t first = fp.k() == 0.0 ? 1 : 0;
  if (first == 1) roots_found.push_back(0.0);
  const double h = x_max / static_cast<double>(kGrid);
  double xa = static_cast<double>(first) * h;
  double ga = g(xa);
  if (ga == 0.0) roots_found.push_back(xa);
  for (std::size_t i = first + 1; i <= kGrid; ++i) {
    const double xb = static_cast<double>(i) * h;
    const double gb = g(xb);
    if (gb == 0.0) {
      roots_found.push_back(xb);
    } else if (ga != 0.0 && (ga > 0.0) != (gb > 0.0)) {
      roots_found.push_back(roots::refine(g, xa, xb, ga, gb));
    }
    xa = xb;
    ga = gb;
  }
  std::sort(roots_found.begin(), roots_found.end());
  std::vector<State2D> out;
  for (double x : roots_found) {
    if (!out.empty() && x - out.back().x <= 1e-8) continue;
    out.push_back({x, y_of(x)});
  }
  return out;
}

std::optional<double> slow_plateau(const Trajectory2D& tr, std::size_t window, double tol) {
  if (window == 0 || window > tr.states.size()) {
    throw DomainError("plateau window must be in [1, trajectory length]");
  }
  const auto first = tr.states.end() - static_cast<std::ptrdiff_t>(window);
  double lo = first->y;
  double hi = first->y;
  double sum = 0.0;
  for (auto it = first; it != tr.states.end(); ++it) {
    lo = std::min(lo, it->y);
    hi = std::max(hi, it->y);
    sum += it->y;
  }
  if (hi - lo > tol) return std::nullopt;
  return sum / static_cast<double>(window);
}

Orbit mmo_trace(const MapParams& p, double x0, std::size_t n) { return iterate(p, x0, n, 0); }

}  // namespace chialvo
