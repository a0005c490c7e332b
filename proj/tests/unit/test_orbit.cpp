#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "chialvo/bifurcation.hpp"
#include "chialvo/errors.hpp"
#include "chialvo/fixed_points.hpp"
#include "chialvo/map_core.hpp"
#include "chialvo/misiurewicz.hpp"
#include "chialvo/orbit.hpp"
#include "oracles.hpp"

using namespace chialvo;

TEST_SUITE("orbit") {

TEST_CASE("iterate") {
  const MapParams p(3.0 - std::log(3.0) - 0.1, 0.0);
  const auto o = iterate(p, 2.0, 10, 5000);
  REQUIRE(o.points.size() == 10);
  const double xf = *right_fixed_point(p);
  CHECK(o.points.back() == doctest::Approx(xf).epsilon(1e-12));
  for (std::size_t i = 1; i < o.points.size(); ++i) {
    CHECK(o.points[i] == eval(p, o.points[i - 1]));
  }

  const auto two = iterate(MapParams(2.0, 0.0), 2.0, 4, 5000);
  CHECK(std::abs(two.points[0] - two.points[2]) <= 1e-12);
  CHECK(std::abs(two.points[0] - two.points[1]) > 0.1);

  for (double x : iterate(MapParams(2.9, 0.0), 0.0, 20).points) CHECK(x == 0.0);

  const auto head = iterate(MapParams(2.5, 0.1), 1.3, 3);
  CHECK(head.points[0] == 1.3);
  CHECK(head.initial == 1.3);
}

TEST_CASE("symbols and kneading") {
  CHECK(symbol_of(1.0) == '0');
  CHECK(symbol_of(3.0) == '1');
  CHECK(symbol_of(2.0) == 'C');
  CHECK(symbol_of(2.0 + 1e-13) == 'C');

  // f(2) = 2 at r = 2 - ln 2, k = 0.
  const MapParams fixed_c(2.0 - std::log(2.0), 0.0);
  CHECK(std::abs(eval(fixed_c, 2.0) - 2.0) <= 1e-12);
  CHECK(kneading(fixed_c, 5).symbols == "CCCCC");

  CHECK(kneading(MapParams(2.7, 0.0), 1).symbols == "1");
  const MapParams p(2.7, 0.0);
  CHECK(kneading(p, 8).symbols == itinerary(p, eval(p, 2.0), 8).symbols);

  for (int i = 0; i < 50; ++i) {
    const MapParams q(testing::uniform(1.5, 3.0), testing::uniform(0.0, 0.5));
    const auto shorter = kneading(q, 30).symbols;
    const auto longer = kneading(q, 31).symbols;
    CHECK(longer.substr(0, 30) == shorter);
  }
}

TEST_CASE("attractor examples") {
  const auto four = detect_periodic_attractor(MapParams(2.258, 0.0));
  CHECK(four.kind == AttractorKind::periodic);
  CHECK(four.period == 4);
  CHECK(std::abs(four.cycle_multiplier) <= 1.0 + 1e-9);

  const auto one = detect_periodic_attractor(MapParams(1.8, 0.0));
  CHECK(one.kind == AttractorKind::periodic);
  REQUIRE(one.period == 1);
  CHECK(one.cycle[0] == doctest::Approx(2.84).epsilon(2e-3));

  // No periodic attractor at a Misiurewicz parameter; the positive
  // exponent makes it an interval candidate.
  const double r_star = misiurewicz_search(0.0, 2.43, 2.44).r_star;
  const auto mis = detect_periodic_attractor(MapParams(r_star, 0.0));
  CHECK(mis.kind != AttractorKind::periodic);
}

TEST_CASE("cycle points close and are minimal") {
  for (double r : {1.5, 2.0, 2.258, 2.3}) {
    const MapParams p(r, 0.0);
    const auto rep = detect_periodic_attractor(p);
    REQUIRE(rep.kind == AttractorKind::periodic);
    REQUIRE(rep.cycle.size() == static_cast<std::size_t>(rep.period));
    for (double x : rep.cycle) {
      double y = x;
      for (int i = 0; i < rep.period; ++i) y = eval(p, y);
      CHECK(std::abs(y - x) <= 1e-9);
    }
  }
}

TEST_CASE("lyapunov") {
  const MapParams p(1.8, 0.0);
  const double xf = *right_fixed_point(p);
  CHECK(lyapunov(p, 2.5, 100000, 1000) ==
        doctest::Approx(std::log(std::abs(deriv_x(p, xf)))).epsilon(1e-6));
  CHECK(lyapunov(MapParams(2.5, 0.0), 0.0, 10) == -std::numeric_limits<double>::infinity());

  for (double r : {1.5, 2.0, 2.258}) {
    const MapParams q(r, 0.0);
    const auto rep = detect_periodic_attractor(q);
    REQUIRE(rep.kind == AttractorKind::periodic);
    const double expected = std::log(std::abs(rep.cycle_multiplier)) / rep.period;
    const double lam = lyapunov(q, 2.3, 100000, 10000);
    CHECK(std::abs(lam - expected) <= 1e-3 * std::abs(expected));
  }
}

TEST_CASE("every orbit in the core finds the same cycle") {
  int checked = 0;
  while (checked < 20) {
    const MapParams p(testing::uniform(1.5, 3.0), testing::uniform(0.0, 0.4));
    if (!core_condition(p)) continue;
    const auto rep = detect_periodic_attractor(p);
    if (rep.kind != AttractorKind::periodic) continue;
    const auto core = dynamical_core(p);
    ++checked;
    for (int i = 0; i < 20; ++i) {
      const double x0 = testing::uniform(core.lo, core.hi);
      const auto tail = iterate(p, x0, 1, 20000);
      double x = tail.points[0];
      if (p.k() == 0.0 && x < 1e-6) continue;  // basin of 0
      double best = std::numeric_limits<double>::infinity();
      for (double y : rep.cycle) best = std::min(best, std::abs(x - y));
      CHECK(best <= 1e-6);
    }
  }
}

TEST_CASE("histograms") {
  const MapParams p(2.7, 0.0);
  const auto a = birkhoff_histogram(p, 0.9, 1000000, 100);
  const auto b = birkhoff_histogram(p, 3.1, 1000000, 100);
  CHECK(a.mass.size() == 100);
  CHECK(a.mass_outside == 0.0);
  double total = 0.0;
  for (double m : a.mass) total += m;
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(l1_distance(a, b) <= 0.05);

  const auto per = birkhoff_histogram(MapParams(2.258, 0.0), 2.0, 10000, 100, 10000);
  const auto occupied = std::count_if(per.mass.begin(), per.mass.end(),
                                      [](double m) { return m > 0.0; });
  CHECK(occupied <= 4);
  CHECK(per.mass_outside == 0.0);
  CHECK_THROWS_AS(birkhoff_histogram(p, 0.9, 10, 0), DomainError);
}

TEST_CASE("order signature") {
  const auto a = orbit_order_signature(MapParams(2.258, 0.0), 12);
  CHECK(a.size() == 12);
  CHECK(a == orbit_order_signature(MapParams(2.258, 0.0), 12));
  CHECK(a != orbit_order_signature(MapParams(1.8, 0.0), 12));
  // An attracting 2-cycle against an attracting 3-cycle.
  REQUIRE(detect_periodic_attractor(MapParams(2.0, 0.0)).period == 2);
  REQUIRE(detect_periodic_attractor(MapParams(2.6, 0.0)).period == 3);
  CHECK(orbit_order_signature(MapParams(2.0, 0.0), 6) !=
        orbit_order_signature(MapParams(2.6, 0.0), 6));
  CHECK_THROWS_AS(orbit_order_signature(MapParams(1.8, 0.0), 2000), TieError);
}

}  // TEST_SUITE
