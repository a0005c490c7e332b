#include "chialvo/topo_chaos.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "chialvo/errors.hpp"

namespace chialvo {

ChaosScanCell chaos_condition(const MapParams& p) {
  const double c = kCriticalPoint;
  const double f1 = eval(p, c);
  const double f2 = eval(p, f1);
  const double f3 = eval(p, f2);
  ChaosScanCell cell;
  cell.r = p.r();
  cell.k = p.k();
  cell.margin_fc = f1 - c;
  cell.margin_f3c = c - f3;
  cell.margin_order = f3 - f2;
  cell.margin_min = std::min({cell.margin_fc, cell.margin_f3c, cell.margin_order});
  cell.satisfied = cell.margin_min > 0.0;
  return cell;
}

double f3_closed_form_k0(double r) {
  const double e = std::exp(r - 2.0);
  const double inner = 3.0 * r - 4.0 - 4.0 * e;
  const double exponent = 7.0 * r - 8.0 - 8.0 * e - 16.0 * std::exp(inner);
  if (!std::isfinite(exponent) || exponent > kMaxExponent) {
    throw RangeError("f^3(2) closed form leaves the double range");
  }
  return 256.0 * std::exp(exponent);
}

std::pair<double, double> h_and_g(double r) {
  const MapParams p(r, 0.0);
  const double f2 = iterate_n(p, kCriticalPoint, 2);
  const double f3 = eval(p, f2);
  return {f3 - kCriticalPoint, f2 - f3};
}

std::size_t ScanAxis::size() const {
  if (!(step > 0.0)) throw DomainError("scan step must be positive");
  if (hi < lo) throw DomainError("scan range is empty");
  return static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
}

double ScanAxis::at(std::size_t i) const { return lo + static_cast<double>(i) * step; }

std::vector<ChaosScanCell> chaos_scan(const ScanAxis& r_axis, const ScanAxis& k_axis) {
  const std::size_t nr = r_axis.size();
  const std::size_t nk = k_axis.size();
  if (k_axis.lo < 0.0) throw DomainError("k range must be non-negative");
  std::vector<ChaosScanCell> cells(nr * nk);
  const auto total = static_cast<long long>(cells.size());
#pragma omp parallel for schedule(static)
  for (long long idx = 0; idx < total; ++idx) {
    const auto i = static_cast<std::size_t>(idx);
    const double k = k_axis.at(i / nr);
    const double r = r_axis.at(i % nr);
    try {
      cells[i] = chaos_condition(MapParams(r, k));
    } catch (const Error&) {
      const double nan = std::numeric_limits<double>::quiet_NaN();
      cells[i] = {r, k, false, nan, nan, nan, nan};
    }
  }
  return cells;
}

}  // namespace chialvo
