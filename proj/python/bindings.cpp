#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "chialvo/chialvo.hpp"

namespace py = pybind11;
using namespace chialvo;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Chialvo map toolkit";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<NumericError>(m, "NumericError", PyExc_ArithmeticError);

  m.attr("CRITICAL_POINT") = kCriticalPoint;

  py::class_<MapParams>(m, "MapParams")
      .def(py::init<double, double>(), py::arg("r"), py::arg("k") = 0.0)
      .def_property_readonly("r", &MapParams::r)
      .def_property_readonly("k", &MapParams::k)
      .def("__repr__", [](const MapParams& p) {
        return "MapParams(r=" + std::to_string(p.r()) + ", k=" + std::to_string(p.k()) + ")";
      });

  m.def("eval", &eval, py::arg("p"), py::arg("x"));
  m.def("deriv_x", &deriv_x, py::arg("p"), py::arg("x"));
  m.def("deriv2_x", &deriv2_x, py::arg("p"), py::arg("x"));
  m.def("deriv3_x", &deriv3_x, py::arg("p"), py::arg("x"));
  m.def("deriv_r", &deriv_r, py::arg("p"), py::arg("x"));
  m.def("schwarzian", py::overload_cast<const MapParams&, double>(&schwarzian), py::arg("p"),
        py::arg("x"));
  m.def("iterate_n", &iterate_n, py::arg("p"), py::arg("x"), py::arg("n"));

  py::class_<FixedPoint>(m, "FixedPoint")
      .def_readonly("x", &FixedPoint::x)
      .def_readonly("multiplier", &FixedPoint::multiplier)
      .def_property_readonly("stability",
                             [](const FixedPoint& f) { return std::string(to_string(f.stability)); })
      .def_property_readonly("branch",
                             [](const FixedPoint& f) { return std::string(to_string(f.branch)); })
      .def_readonly("degenerate", &FixedPoint::degenerate);
  py::class_<FixedPointConfiguration>(m, "FixedPointConfiguration")
      .def_readonly("points", &FixedPointConfiguration::points)
      .def_readonly("degenerate", &FixedPointConfiguration::degenerate)
      .def("__len__", &FixedPointConfiguration::count);
  m.def("find_fixed_points", &find_fixed_points, py::arg("p"));
  m.def("classify_stability", &classify_stability, py::arg("p"), py::arg("x"));

  py::class_<DynamicalCore>(m, "DynamicalCore")
      .def_readonly("lo", &DynamicalCore::lo)
      .def_readonly("hi", &DynamicalCore::hi)
      .def_property_readonly("case_tag",
                             [](const DynamicalCore& c) { return std::string(to_string(c.case_tag)); })
      .def_readonly("contains_unique_fixed_point", &DynamicalCore::contains_unique_fixed_point);
  m.def("dynamical_core", &dynamical_core, py::arg("p"));
  m.def("core_condition", &core_condition, py::arg("p"));
  m.def("right_preimage", &right_preimage, py::arg("p"), py::arg("target"));

  py::class_<BifurcationPoint>(m, "BifurcationPoint")
      .def_property_readonly("kind", [](const BifurcationPoint& b) { return std::string(to_string(b.kind)); })
      .def_property_readonly("wrt", [](const BifurcationPoint& b) { return std::string(to_string(b.wrt)); })
      .def_readonly("x0", &BifurcationPoint::x0)
      .def_readonly("param0", &BifurcationPoint::param0)
      .def_readonly("r", &BifurcationPoint::r)
      .def_readonly("k", &BifurcationPoint::k)
      .def_readonly("criticality_value", &BifurcationPoint::criticality_value)
      .def_property_readonly("criticality",
                             [](const BifurcationPoint& b) { return std::string(to_string(b.criticality)); })
      .def_readonly("condition_A1", &BifurcationPoint::condition_A1)
      .def_readonly("condition_A2", &BifurcationPoint::condition_A2)
      .def_readonly("condition_B1", &BifurcationPoint::condition_B1)
      .def_readonly("condition_B2", &BifurcationPoint::condition_B2);
  m.def("flip_point", &flip_point, py::arg("k"));
  m.def("fold_points", &fold_points, py::arg("k"));
  m.def("fold_in_k", &fold_in_k, py::arg("r"));
  m.def(
      "detect_bifurcation_numerically",
      [](double k, double r_lo, double r_hi, const std::string& kind) {
        if (kind != "flip" && kind != "fold") throw DomainError("kind must be 'flip' or 'fold'");
        return detect_bifurcation_numerically(
            k, r_lo, r_hi, kind == "flip" ? BifurcationKind::flip : BifurcationKind::fold);
      },
      py::arg("k"), py::arg("r_lo"), py::arg("r_hi"), py::arg("kind"));

  py::class_<MisiurewiczResult>(m, "MisiurewiczResult")
      .def_readonly("k", &MisiurewiczResult::k)
      .def_readonly("r_star", &MisiurewiczResult::r_star)
      .def_readonly("z", &MisiurewiczResult::z)
      .def_readonly("zeta", &MisiurewiczResult::zeta)
      .def_readonly("zeta1", &MisiurewiczResult::zeta1)
      .def_readonly("dzeta_dr", &MisiurewiczResult::dzeta_dr)
      .def_readonly("df_dr_at_c", &MisiurewiczResult::df_dr_at_c)
      .def_readonly("gamma", &MisiurewiczResult::gamma)
      .def_readonly("landing_residual", &MisiurewiczResult::landing_residual);
  m.def("misiurewicz_search", &misiurewicz_search, py::arg("k"), py::arg("r_lo"), py::arg("r_hi"));
  m.def("misiurewicz_terms", &misiurewicz_terms, py::arg("k"), py::arg("r"));

  py::class_<ChaosScanCell>(m, "ChaosScanCell")
      .def_readonly("r", &ChaosScanCell::r)
      .def_readonly("k", &ChaosScanCell::k)
      .def_readonly("satisfied", &ChaosScanCell::satisfied)
      .def_readonly("margin_min", &ChaosScanCell::margin_min);
  m.def("chaos_condition", &chaos_condition, py::arg("p"));
  m.def("f3_closed_form_k0", &f3_closed_form_k0, py::arg("r"));
  m.def(
      "chaos_scan",
      [](double r_min, double r_max, double r_step, double k_min, double k_max, double k_step) {
        py::gil_scoped_release release;
        return chaos_scan({r_min, r_max, r_step}, {k_min, k_max, k_step});
      },
      py::arg("r_min"), py::arg("r_max"), py::arg("r_step"), py::arg("k_min"), py::arg("k_max"),
      py::arg("k_step"));

  m.def(
      "iterate",
      [](const MapParams& p, double x0, std::size_t n, std::size_t transient) {
        return iterate(p, x0, n, transient).points;
      },
      py::arg("p"), py::arg("x0"), py::arg("n"), py::arg("transient") = 0);
  m.def(
      "kneading", [](const MapParams& p, std::size_t n) { return kneading(p, n).symbols; },
      py::arg("p"), py::arg("n"));

  py::class_<AttractorReport>(m, "AttractorReport")
      .def_property_readonly("kind", [](const AttractorReport& a) { return std::string(to_string(a.kind)); })
      .def_readonly("period", &AttractorReport::period)
      .def_readonly("cycle", &AttractorReport::cycle)
      .def_readonly("cycle_multiplier", &AttractorReport::cycle_multiplier)
      .def_readonly("lyapunov", &AttractorReport::lyapunov);
  m.def(
      "detect_periodic_attractor",
      [](const MapParams& p, int max_period) {
        AttractorOptions opts;
        opts.max_period = max_period;
        return detect_periodic_attractor(p, opts);
      },
      py::arg("p"), py::arg("max_period") = 64);
  m.def("lyapunov", &lyapunov, py::arg("p"), py::arg("x0"), py::arg("n"),
        py::arg("transient") = 0);
  m.def(
      "birkhoff_histogram",
      [](const MapParams& p, double x0, std::size_t n, std::size_t bins) {
        const Histogram h = birkhoff_histogram(p, x0, n, bins);
        return py::make_tuple(h.lo, h.hi, h.mass, h.mass_outside);
      },
      py::arg("p"), py::arg("x0"), py::arg("n"), py::arg("bins"));

  py::class_<FullParams>(m, "FullParams")
      .def(py::init<double, double, double, double>(), py::arg("a"), py::arg("b"), py::arg("c"),
           py::arg("k") = 0.0)
      .def_property_readonly("rest_recovery", &FullParams::rest_recovery);
  m.def(
      "iterate2d",
      [](const FullParams& fp, double x0, double y0, std::size_t n) {
        std::vector<std::pair<double, double>> out;
        for (const State2D& s : iterate2d(fp, x0, y0, n).states) out.emplace_back(s.x, s.y);
        return out;
      },
      py::arg("fp"), py::arg("x0"), py::arg("y0"), py::arg("n"));
  m.def(
      "slow_plateau",
      [](const FullParams& fp, double x0, double y0, std::size_t n, std::size_t window,
         double tol) { return slow_plateau(iterate2d(fp, x0, y0, n), window, tol); },
      py::arg("fp"), py::arg("x0"), py::arg("y0"), py::arg("n"), py::arg("window") = 20,
      py::arg("tol") = 1e-3);

  m.def(
      "bifurcation_diagram",
      [](const std::string& sweep, double lo, double hi, double step, double fixed,
         std::size_t transient, std::size_t record) {
        if (sweep != "r" && sweep != "k") throw DomainError("sweep must be 'r' or 'k'");
        std::vector<BifurcationColumn> cols;
        {
          py::gil_scoped_release release;
          cols = bifurcation_diagram(sweep == "r" ? SweepParam::r : SweepParam::k,
                                     {lo, hi, step}, fixed, {transient, record});
        }
        py::list out;
        for (const auto& c : cols) out.append(py::make_tuple(c.r, c.k, c.xs, c.range_error));
        return out;
      },
      py::arg("sweep"), py::arg("lo"), py::arg("hi"), py::arg("step"), py::arg("fixed"),
      py::arg("transient") = 1000, py::arg("record") = 200);
  m.def(
      "cobweb",
      [](const MapParams& p, double x0, std::size_t n) {
        std::vector<std::tuple<double, double, double, double>> out;
        for (const auto& s : cobweb(p, x0, n)) out.emplace_back(s.x_start, s.y_start, s.x_end, s.y_end);
        return out;
      },
      py::arg("p"), py::arg("x0"), py::arg("n"));
}
