#include "chialvo/misiurewicz.hpp"

#include <cmath>
#include <string>

#include "chialvo/errors.hpp"
#include "chialvo/fixed_points.hpp"
#include "chialvo/map_core.hpp"
#include "chialvo/roots.hpp"

namespace chialvo {

namespace {

constexpr double kCapSlack = 1e-12;

void require_k(double k) {
  if (!std::isfinite(k) || k < 0.0) {
    throw DomainError("k must be finite and non-negative");
  }
  if (k > kMisiurewiczMaxK + kCapSlack) {
    throw DomainError("the three-step landing search is limited to k <= 0.58, got k = " +
                      std::to_string(k));
  }
}

}  // namespace

std::optional<double> landing_distance(double k, double r) {
  const MapParams p(r, k);
  const auto z = right_fixed_point(p);
  if (!z) return std::nullopt;
  return iterate_n(p, kCriticalPoint, 3) - *z;
}

double dz_dr(double k, double r, double z) {
  double den = 0.0;
  double num = 0.0;
  if (k == 0.0) {
    num = z;
    den = z - 1.0;
  } else {
    num = z * z;
    den = std::exp(z - r) + z * z - 2.0 * z;
  }
  if (!std::isfinite(den) || std::abs(den) < 1e-300) {
    throw DomainError("dz/dr is singular at z = " + std::to_string(z));
  }
  return num / den;
}

double dzeta_dr(double k, double r, double z, double zeta, double zeta1) {
  const double a = 2.0 - zeta;
  const double b = 2.0 - zeta1;
  if (a == 0.0 || b == 0.0 || zeta == 0.0 || zeta1 == 0.0) {
    throw DomainError("dzeta/dr is singular: an orbit point sits on 0 or the critical point");
  }
  const double dz = dz_dr(k, r, z);
  return dz * std::exp(zeta + zeta1 - 2.0 * r) / (zeta * zeta1 * a * b) -
         zeta1 * std::exp(zeta - r) / (zeta * a * b) - zeta / a;
}

double gamma(const MisiurewiczResult& res) {
  const double d = dzeta_dr(res.k, res.r_star, res.z, res.zeta, res.zeta1);
  return d - res.df_dr_at_c;
}

MisiurewiczResult misiurewicz_terms(double k, double r) {
  const MapParams p(r, k);
  const auto z = right_fixed_point(p);
  if (!z) {
    throw BracketError("no fixed point right of c at r = " + std::to_string(r));
  }
  MisiurewiczResult res;
  res.k = k;
  res.r_star = r;
  res.z = *z;
  res.zeta = eval(p, kCriticalPoint);
  res.zeta1 = eval(p, res.zeta);
  res.df_dr_at_c = deriv_r(p, kCriticalPoint);
  res.dzeta_dr = dzeta_dr(k, r, res.z, res.zeta, res.zeta1);
  res.gamma = res.dzeta_dr - res.df_dr_at_c;
  res.landing_residual = eval(p, res.zeta1) - res.z;
  res.z_multiplier = deriv_x(p, res.z);
  return res;
}

MisiurewiczResult misiurewicz_search(double k, double r_lo, double r_hi) {
  require_k(k);
  const auto d = [&](double r) {
    const auto v = landing_distance(k, r);
    if (!v) {
      throw BracketError("no fixed point right of c at r = " + std::to_string(r));
    }
    return *v;
  };
  const double r_star = roots::refine(d, r_lo, r_hi);
  MisiurewiczResult res = misiurewicz_terms(k, r_star);
  if (std::abs(res.landing_residual) > 1e-10) {
    throw NumericError("landing residual " + std::to_string(res.landing_residual) +
                       " above 1e-10");
  }
  if (std::abs(res.z_multiplier) <= 1.0) {
    throw NumericError("fixed point z = " + std::to_string(res.z) + " is not repelling");
  }
  return res;
}

std::vector<std::pair<double, double>> bracket_scan_for_misiurewicz(double k, double r_lo,
                                                                    double r_hi,
                                                                    double step) {
  if (!(step > 0.0)) throw DomainError("step must be positive");
  if (!std::isfinite(k) || k < 0.0) throw DomainError("k must be non-negative");
  std::vector<std::pair<double, double>> out;
  const auto n = static_cast<long>(std::floor((r_hi - r_lo) / step + 1e-9));
  std::optional<double> prev;
  double prev_r = r_lo;
  for (long i = 0; i <= n; ++i) {
    const double r = r_lo + static_cast<double>(i) * step;
    const auto v = landing_distance(k, r);
    if (v && prev && ((*v > 0.0) != (*prev > 0.0) || *v == 0.0)) {
      out.emplace_back(prev_r, r);
    }
    prev = v;
    prev_r = r;
  }
  return out;
}

std::vector<GammaCurveRow> gamma_curve(double k_lo, double k_hi, double step) {
  if (!(step > 0.0)) throw DomainError("step must be positive");
  if (k_lo < 0.0 || k_hi > kMisiurewiczMaxK + kCapSlack || k_hi < k_lo) {
    throw DomainError("gamma curve range must lie inside [0, 0.58]");
  }
  constexpr double kScanStep = 1e-3;
  const auto n = static_cast<long>(std::floor((k_hi - k_lo) / step + 1e-9));
  std::vector<GammaCurveRow> rows;
  rows.reserve(static_cast<std::size_t>(n + 1));
  std::optional<double> seed;
  for (long i = 0; i <= n; ++i) {
    GammaCurveRow row;
    row.k = std::min(k_lo + static_cast<double>(i) * step, kMisiurewiczMaxK);
    try {
      const double lo = seed ? *seed - 0.02 : 1.3;
      const double hi = seed ? *seed + 0.1 : 4.0;
      const auto brackets = bracket_scan_for_misiurewicz(row.k, lo, hi, kScanStep);
      if (brackets.empty()) {
        throw BracketError("no sign change of the landing distance near r = " +
                           std::to_string(seed.value_or(lo)));
      }
      row.result = misiurewicz_search(row.k, brackets.front().first, brackets.front().second);
      seed = row.result->r_star;
    } catch (const Error& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace chialvo
