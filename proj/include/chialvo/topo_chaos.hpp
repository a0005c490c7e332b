#pragma once

#include <utility>
#include <vector>

#include "chialvo/map_core.hpp"

namespace chialvo {

/// Sufficient condition f^2(c) < f^3(c) < c < f(c) at one (r, k).
struct ChaosScanCell {
  double r = 0.0;
  double k = 0.0;
  bool satisfied = false;
  double margin_fc = 0.0;     // f(c) - c
  double margin_f3c = 0.0;    // c - f^3(c)
  double margin_order = 0.0;  // f^3(c) - f^2(c)
  double margin_min = 0.0;
};

ChaosScanCell chaos_condition(const MapParams& p);

/// f^3(2) at k = 0 through the expanded exponential expression.
double f3_closed_form_k0(double r);

/// h(r) = f^3(2) - 2 and g(r) = f^2(2) - f^3(2) at k = 0.
std::pair<double, double> h_and_g(double r);

struct ScanAxis {
  double lo = 0.0;
  double hi = 0.0;
  double step = 1.0;

  /// Number of grid nodes lo, lo + step, ... not exceeding hi.
  std::size_t size() const;
  double at(std::size_t i) const;
};

/// Every cell of the grid, row-major with k outer and r inner.
/// Cells are evaluated in parallel when OpenMP is available. A cell whose
/// evaluation leaves the double range is unsatisfied with NaN margins.
std::vector<ChaosScanCell> chaos_scan(const ScanAxis& r_axis, const ScanAxis& k_axis);

}  // namespace chialvo
