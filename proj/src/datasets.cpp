#include "chialvo/datasets.hpp"

#include <algorithm>

#include "chialvo/errors.hpp"

namespace chialvo {

std::vector<BifurcationColumn> bifurcation_diagram(SweepParam sweep, const ScanAxis& axis,
                                                   double fixed, const BifDiagOptions& opts) {
  const std::size_t n = axis.size();
  std::vector<BifurcationColumn> cols(n);
  const auto total = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 16)
  for (long long idx = 0; idx < total; ++idx) {
    auto& col = cols[static_cast<std::size_t>(idx)];
    const double v = axis.at(static_cast<std::size_t>(idx));
    col.r = sweep == SweepParam::r ? v : fixed;
    col.k = sweep == SweepParam::r ? fixed : v;
    try {
      const MapParams p(col.r, col.k);
      double x = iterate_n(p, kCriticalPoint, static_cast<int>(opts.transient));
      col.xs.reserve(opts.record);
      for (std::size_t i = 0; i < opts.record; ++i) {
        x = eval(p, x);
        col.xs.push_back(x);
      }
    } catch (const Error&) {
      col.xs.clear();
      col.range_error = true;
    }
  }
  return cols;
}

std::size_t distinct_values(std::span<const double> xs, double tol) {
  if (xs.empty()) return 0;
  std::vector<double> v(xs.begin(), xs.end());
  std::sort(v.begin(), v.end());
  std::size_t clusters = 1;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] - v[i - 1] > tol) ++clusters;
  }
  return clusters;
}

std::vector<CobwebSegment> cobweb(const MapParams& p, double x0, std::size_t n) {
  if (n == 0) throw DomainError("cobweb needs n >= 1");
  std::vector<CobwebSegment> segs;
  segs.reserve(2 * n);
  double x = x0;
  for (std::size_t i = 0; i < n; ++i) {
    const double y = eval(p, x);
    segs.push_back({x, x, x, y});
    segs.push_back({x, y, y, y});
    x = y;
  }
  return segs;
}

}  // namespace chialvo
