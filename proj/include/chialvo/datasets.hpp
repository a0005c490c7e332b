#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "chialvo/map_core.hpp"
#include "chialvo/topo_chaos.hpp"

namespace chialvo {

enum class SweepParam { r, k };

struct BifurcationColumn {
  double r = 0.0;
  double k = 0.0;
  std::vector<double> xs;    // recorded iterates of the critical point
  bool range_error = false;  // the column could not be computed
};

struct BifDiagOptions {
  std::size_t transient = 1000;
  std::size_t record = 200;
};

/// One column per grid value of the swept parameter, the other held at
/// `fixed`. Columns are computed in parallel and returned in grid order.
std::vector<BifurcationColumn> bifurcation_diagram(SweepParam sweep, const ScanAxis& axis,
                                                   double fixed, const BifDiagOptions& opts = {});

/// Number of clusters after sorting, where neighbours closer than tol join.
std::size_t distinct_values(std::span<const double> xs, double tol = 1e-6);

struct CobwebSegment {
  double x_start, y_start, x_end, y_end;
};

/// 2n segments: (x_i, x_i) -> (x_i, x_{i+1}) -> (x_{i+1}, x_{i+1}).
std::vector<CobwebSegment> cobweb(const MapParams& p, double x0, std::size_t n);

}  // namespace chialvo
