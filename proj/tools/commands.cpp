#include "commands.hpp"

#include <random>

#include "chialvo/chialvo.hpp"

namespace chialvo::cli {

namespace {

using nlohmann::ordered_json;

class Builder {
 public:
  Builder(CLI::App& app, CommandList& list, const std::string& name, const std::string& desc) {
    auto cmd = std::make_unique<Command>();
    cmd->name = name;
    cmd->app = app.add_subcommand(name, desc);
    cmd_ = cmd.get();
    list.push_back(std::move(cmd));

    add("out", cmd_->out, "Output file (default: $CHIALVO_OUTPUT_DIR/<command>.<format>)",
        true);
    cmd_->app->add_option("--format", cmd_->format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    record("format", cmd_->format);
    add("seed", cmd_->seed, "Seed for random initial conditions");
  }

  /// Registers --name bound to `var`. Optional inputs are echoed only when
  /// given on the command line.
  template <typename T>
  CLI::Option* add(const std::string& name, T& var, const std::string& desc,
                   bool optional = false) {
    CLI::Option* o = cmd_->app->add_option("--" + name, var, desc);
    if (!optional) o->capture_default_str();
    cmd_->inputs.push_back({name, [&var] { return ordered_json(var); },
                            [o, optional] { return !optional || o->count() > 0; }});
    return o;
  }

  template <typename T>
  CLI::Option* required(const std::string& name, T& var, const std::string& desc) {
    return add(name, var, desc, true)->required();
  }

  CLI::Option* positive(const std::string& name, double& var, const std::string& desc) {
    return add(name, var, desc)->check(CLI::PositiveNumber);
  }

  /// Storage for parsed values, owned by the command.
  template <typename T>
  T& hold() {
    auto p = std::make_shared<T>();
    cmd_->storage.push_back(p);
    return *p;
  }

  void run(std::function<Table()> fn) { cmd_->run = std::move(fn); }

  const Command& command() const { return *cmd_; }

 private:
  template <typename T>
  void record(const std::string& name, T& var) {
    cmd_->inputs.push_back({name, [&var] { return ordered_json(var); }, [] { return true; }});
  }

  Command* cmd_;
};

std::int64_t as_int(std::size_t v) { return static_cast<std::int64_t>(v); }

Table bifurcation_table(const std::vector<BifurcationPoint>& pts) {
  Table t{{"kind", "wrt", "x0", "param0", "r", "k", "criticality_value", "criticality",
           "condition_A1", "condition_A2", "condition_B1", "condition_B2", "conditions_hold"},
          {}};
  for (const auto& b : pts) {
    t.add({std::string(to_string(b.kind)), std::string(to_string(b.wrt)), b.x0, b.param0, b.r,
           b.k, opt(b.criticality_value), std::string(to_string(b.criticality)),
           opt(b.condition_A1), opt(b.condition_A2), opt(b.condition_B1), opt(b.condition_B2),
           b.conditions_hold()});
  }
  return t;
}

const std::vector<std::string> kMisiurewiczColumns{
    "k", "r_star", "z", "zeta", "zeta1", "dzeta_dr", "df_dr_at_c", "gamma",
    "landing_residual", "z_multiplier"};

std::vector<Cell> misiurewicz_row(const MisiurewiczResult& m) {
  return {m.k,        m.r_star,     m.z,     m.zeta,
          m.zeta1,    m.dzeta_dr,   m.df_dr_at_c, m.gamma,
          m.landing_residual, m.z_multiplier};
}

/// x0 if given, otherwise a seeded uniform draw from the dynamical core.
double initial_point(const MapParams& p, const CLI::App* app, double x0, std::uint64_t seed) {
  if (app->get_option("--x0")->count() > 0) return x0;
  const DynamicalCore core = dynamical_core(p);
  std::mt19937_64 gen(seed);
  return std::uniform_real_distribution<double>(core.lo, core.hi)(gen);
}

struct MapArgs {
  double r = 0.0;
  double k = 0.0;
};

void map_args(Builder& b, MapArgs& a) {
  b.required("r", a.r, "Parameter r");
  b.add("k", a.k, "Parameter k >= 0");
}

}  // namespace

void register_commands(CLI::App& app, CommandList& list) {
  {
    Builder b(app, list, "fixed-points", "Fixed points of the reduced map");
    auto& a = b.hold<MapArgs>();
    map_args(b, a);
    b.run([&a] {
      const auto cfg = find_fixed_points(MapParams(a.r, a.k));
      Table t{{"x", "multiplier", "stability", "branch", "degenerate"}, {}};
      for (const auto& fp : cfg.points) {
        t.add({fp.x, fp.multiplier, std::string(to_string(fp.stability)),
               std::string(to_string(fp.branch)), fp.degenerate});
      }
      return t;
    });
  }
  {
    Builder b(app, list, "core", "Dynamical core");
    auto& a = b.hold<MapArgs>();
    map_args(b, a);
    b.run([&a] {
      const MapParams p(a.r, a.k);
      const auto core = dynamical_core(p);
      Table t{{"r", "k", "lo", "hi", "case", "contains_unique_fixed_point", "core_condition"},
              {}};
      t.add({a.r, a.k, core.lo, core.hi, std::string(to_string(core.case_tag)),
             core.contains_unique_fixed_point, core_condition(p)});
      return t;
    });
  }
  {
    Builder b(app, list, "flip", "Period-doubling point with r as parameter");
    auto& k = b.hold<double>();
    b.add("k", k, "Parameter k >= 0");
    b.run([&k] { return bifurcation_table({flip_point(k)}); });
  }
  {
    Builder b(app, list, "fold", "Fold points with r as parameter");
    auto& k = b.hold<double>();
    b.add("k", k, "Parameter k in [0, 3 - 2 sqrt2)");
    b.run([&k] { return bifurcation_table(fold_points(k)); });
  }
  {
    Builder b(app, list, "fold-k", "Fold point with k as parameter");
    auto& r = b.hold<double>();
    b.required("r", r, "Parameter r above the fold threshold");
    b.run([&r] { return bifurcation_table({fold_in_k(r)}); });
  }
  {
    struct Args {
      double k = 0.0, r_lo = 0.0, r_hi = 0.0;
      std::string kind = "flip";
    };
    Builder b(app, list, "bifurcate-numeric", "Locate a flip or fold without closed forms");
    auto& a = b.hold<Args>();
    b.add("k", a.k, "Parameter k >= 0");
    b.required("r-lo", a.r_lo, "Lower end of the r bracket");
    b.required("r-hi", a.r_hi, "Upper end of the r bracket");
    b.add("kind", a.kind, "flip or fold")->check(CLI::IsMember({"flip", "fold"}));
    b.run([&a] {
      const auto kind = a.kind == "flip" ? BifurcationKind::flip : BifurcationKind::fold;
      return bifurcation_table({detect_bifurcation_numerically(a.k, a.r_lo, a.r_hi, kind)});
    });
  }
  {
    struct Args {
      double k = 0.0, r_lo = 2.0, r_hi = 4.0, step = 1e-3, at = 0.0;
    };
    Builder b(app, list, "misiurewicz", "Three-step landing parameter and transversality terms");
    auto& a = b.hold<Args>();
    b.add("k", a.k, "Parameter k in [0, 0.58]");
    b.add("r-lo", a.r_lo, "Lower end of the search range");
    b.add("r-hi", a.r_hi, "Upper end of the search range");
    b.positive("scan-step", a.step, "Grid step used to bracket the landing");
    b.add("at", a.at, "Evaluate the terms at this r instead of searching", true);
    const CLI::App* sub = b.command().app;
    b.run([&a, sub] {
      MisiurewiczResult res;
      if (sub->get_option("--at")->count() > 0) {
        res = misiurewicz_terms(a.k, a.at);
      } else {
        if (a.k > kMisiurewiczMaxK) {
          throw DomainError("the landing search is limited to k <= 0.58");
        }
        const auto brackets = bracket_scan_for_misiurewicz(a.k, a.r_lo, a.r_hi, a.step);
        if (brackets.empty()) {
          throw BracketError("no sign change of the landing distance on the range");
        }
        res = misiurewicz_search(a.k, brackets.front().first, brackets.front().second);
      }
      Table t{kMisiurewiczColumns, {}};
      t.add(misiurewicz_row(res));
      return t;
    });
  }
  {
    struct Args {
      double k_min = 0.0, k_max = kMisiurewiczMaxK, k_step = 1e-3;
    };
    Builder b(app, list, "gamma-table", "Landing parameter and gamma along k");
    auto& a = b.hold<Args>();
    b.add("k-min", a.k_min, "First k");
    b.add("k-max", a.k_max, "Last k");
    b.positive("k-step", a.k_step, "Step in k");
    b.run([&a] {
      auto cols = kMisiurewiczColumns;
      cols.push_back("error");
      Table t{cols, {}};
      for (const auto& row : gamma_curve(a.k_min, a.k_max, a.k_step)) {
        std::vector<Cell> cells;
        if (row.result) {
          cells = misiurewicz_row(*row.result);
          cells.push_back(std::monostate{});
        } else {
          cells.assign(cols.size(), std::monostate{});
          cells.front() = row.k;
          cells.back() = row.error;
        }
        t.add(std::move(cells));
      }
      return t;
    });
  }
  {
    struct Args {
      double r_min = 2.0, r_max = 14.0, r_step = 0.025;
      double k_min = 0.0, k_max = 0.35, k_step = 0.002;
    };
    Builder b(app, list, "chaos-scan", "Sufficient chaos condition on an (r, k) grid");
    auto& a = b.hold<Args>();
    b.add("r-min", a.r_min, "First r");
    b.add("r-max", a.r_max, "Last r");
    b.positive("r-step", a.r_step, "Step in r");
    b.add("k-min", a.k_min, "First k");
    b.add("k-max", a.k_max, "Last k");
    b.positive("k-step", a.k_step, "Step in k");
    b.run([&a] {
      Table t{{"r", "k", "satisfied", "margin_fc", "margin_f3c", "margin_order", "margin_min"},
              {}};
      for (const auto& c :
           chaos_scan({a.r_min, a.r_max, a.r_step}, {a.k_min, a.k_max, a.k_step})) {
        t.add({c.r, c.k, c.satisfied, c.margin_fc, c.margin_f3c, c.margin_order, c.margin_min});
      }
      return t;
    });
  }
  {
    struct Args {
      MapArgs m;
      std::size_t n = 32;
    };
    Builder b(app, list, "kneading", "Itinerary of the critical value");
    auto& a = b.hold<Args>();
    map_args(b, a.m);
    b.add("n", a.n, "Number of symbols")->check(CLI::PositiveNumber);
    b.run([&a] {
      const MapParams p(a.m.r, a.m.k);
      const auto orbit = iterate(p, eval(p, kCriticalPoint), a.n);
      const auto symbols = kneading(p, a.n).symbols;
      Table t{{"index", "x", "symbol"}, {}};
      for (std::size_t i = 0; i < a.n; ++i) {
        t.add({as_int(i), orbit.points[i], std::string(1, symbols[i])});
      }
      return t;
    });
  }
  {
    struct Args {
      MapArgs m;
      AttractorOptions o;
    };
    Builder b(app, list, "attractor", "Periodic attractor of the critical orbit");
    auto& a = b.hold<Args>();
    map_args(b, a.m);
    b.add("max-period", a.o.max_period, "Largest period tried")->check(CLI::PositiveNumber);
    b.add("n-iter", a.o.n_iter, "Iterates for the Lyapunov estimate");
    b.add("transient", a.o.transient, "Iterates discarded first");
    b.add("closure-tol", a.o.closure_tol, "Cycle closure tolerance");
    b.run([&a] {
      const auto rep = detect_periodic_attractor(MapParams(a.m.r, a.m.k), a.o);
      Table t{{"kind", "period", "index", "x", "cycle_multiplier", "lyapunov"}, {}};
      const std::string kind(to_string(rep.kind));
      if (rep.cycle.empty()) {
        t.add({kind, std::int64_t{0}, std::monostate{}, std::monostate{}, std::monostate{},
               rep.lyapunov});
      }
      for (std::size_t i = 0; i < rep.cycle.size(); ++i) {
        t.add({kind, std::int64_t{rep.period}, as_int(i), rep.cycle[i], rep.cycle_multiplier,
               rep.lyapunov});
      }
      return t;
    });
  }
  {
    struct Args {
      MapArgs m;
      double x0 = 0.0;
      std::size_t n = 100000, transient = 1000;
    };
    Builder b(app, list, "lyapunov", "Lyapunov exponent of an orbit");
    auto& a = b.hold<Args>();
    map_args(b, a.m);
    b.add("x0", a.x0, "Initial point (default: seeded draw from the core)", true);
    b.add("n", a.n, "Averaged iterates")->check(CLI::PositiveNumber);
    b.add("transient", a.transient, "Iterates discarded first");
    const CLI::App* sub = b.command().app;
    const Command& cmd = b.command();
    b.run([&a, sub, &cmd] {
      const MapParams p(a.m.r, a.m.k);
      const double x0 = initial_point(p, sub, a.x0, cmd.seed);
      Table t{{"r", "k", "x0", "n", "transient", "lyapunov"}, {}};
      t.add({a.m.r, a.m.k, x0, as_int(a.n), as_int(a.transient),
             lyapunov(p, x0, a.n, a.transient)});
      return t;
    });
  }
  {
    struct Args {
      MapArgs m;
      double x0 = 0.0;
      std::size_t n = 1000000, bins = 100, transient = 1000;
    };
    Builder b(app, list, "histogram", "Occupation histogram over the dynamical core");
    auto& a = b.hold<Args>();
    map_args(b, a.m);
    b.add("x0", a.x0, "Initial point (default: seeded draw from the core)", true);
    b.add("n", a.n, "Samples")->check(CLI::PositiveNumber);
    b.add("bins", a.bins, "Number of bins")->check(CLI::PositiveNumber);
    b.add("transient", a.transient, "Iterates discarded first");
    const CLI::App* sub = b.command().app;
    const Command& cmd = b.command();
    b.run([&a, sub, &cmd] {
      const MapParams p(a.m.r, a.m.k);
      const double x0 = initial_point(p, sub, a.x0, cmd.seed);
      const auto h = birkhoff_histogram(p, x0, a.n, a.bins, a.transient);
      Table t{{"bin", "lo", "hi", "mass"}, {}};
      for (std::size_t i = 0; i < h.mass.size(); ++i) {
        const double lo = h.lo + h.bin_width() * static_cast<double>(i);
        t.add({std::to_string(i), lo, lo + h.bin_width(), h.mass[i]});
      }
      t.add({std::string("outside"), std::monostate{}, std::monostate{}, h.mass_outside});
      return t;
    });
  }
  {
    struct Args {
      double r = 0.0, k = 0.0;
      double r_min = 0.0, r_max = 0.0, r_step = 1e-3;
      double k_min = 0.0, k_max = 0.0, k_step = 1e-3;
      BifDiagOptions o;
    };
    Builder b(app, list, "bifdiag", "Bifurcation diagram of the critical orbit");
    auto& a = b.hold<Args>();
    auto* fixed_k = b.add("k", a.k, "Hold k fixed and sweep r", true);
    auto* fixed_r = b.add("r", a.r, "Hold r fixed and sweep k", true);
    fixed_k->excludes(fixed_r);
    b.add("r-min", a.r_min, "First r", true);
    b.add("r-max", a.r_max, "Last r", true);
    b.positive("r-step", a.r_step, "Step in r");
    b.add("k-min", a.k_min, "First k", true);
    b.add("k-max", a.k_max, "Last k", true);
    b.positive("k-step", a.k_step, "Step in k");
    b.add("transient", a.o.transient, "Iterates discarded per column");
    b.add("record", a.o.record, "Iterates recorded per column")->check(CLI::PositiveNumber);
    const CLI::App* sub = b.command().app;
    b.run([&a, sub] {
      const auto given = [sub](const char* name) { return sub->get_option(name)->count() > 0; };
      std::vector<BifurcationColumn> cols;
      if (given("--k")) {
        if (!given("--r-min") || !given("--r-max")) {
          throw BadArguments("--k needs --r-min and --r-max");
        }
        cols = bifurcation_diagram(SweepParam::r, {a.r_min, a.r_max, a.r_step}, a.k, a.o);
      } else if (given("--r")) {
        if (!given("--k-min") || !given("--k-max")) {
          throw BadArguments("--r needs --k-min and --k-max");
        }
        cols = bifurcation_diagram(SweepParam::k, {a.k_min, a.k_max, a.k_step}, a.r, a.o);
      } else {
        throw BadArguments("give either --k (sweep r) or --r (sweep k)");
      }
      Table t{{"r", "k", "sample", "x", "range_error"}, {}};
      for (const auto& c : cols) {
        if (c.range_error) {
          t.add({c.r, c.k, std::monostate{}, std::monostate{}, true});
          continue;
        }
        for (std::size_t i = 0; i < c.xs.size(); ++i) {
          t.add({c.r, c.k, as_int(i), c.xs[i], false});
        }
      }
      return t;
    });
  }
  {
    struct Args {
      MapArgs m;
      double x0 = 2.0;
      std::size_t n = 50;
    };
    Builder b(app, list, "cobweb", "Cobweb segments");
    auto& a = b.hold<Args>();
    map_args(b, a.m);
    b.add("x0", a.x0, "Initial point");
    b.add("n", a.n, "Iterates")->check(CLI::PositiveNumber);
    b.run([&a] {
      Table t{{"segment", "x_start", "y_start", "x_end", "y_end"}, {}};
      const auto segs = cobweb(MapParams(a.m.r, a.m.k), a.x0, a.n);
      for (std::size_t i = 0; i < segs.size(); ++i) {
        const auto& s = segs[i];
        t.add({as_int(i), s.x_start, s.y_start, s.x_end, s.y_end});
      }
      return t;
    });
  }
  {
    struct Args {
      double a = 0.876, b = 0.0, c = 0.28, k = 0.0, x0 = 5.0, y0 = 3.0;
      std::size_t n = 80;
    };
    Builder b(app, list, "simulate2d", "Trajectory of the full two-variable model");
    auto& a = b.hold<Args>();
    b.add("a", a.a, "Recovery time constant in (0, 1)");
    b.add("b", a.b, "Activation dependence in [0, 1)");
    b.add("c", a.c, "Offset > 0");
    b.add("k", a.k, "Perturbation >= 0");
    b.add("x0", a.x0, "Initial x");
    b.add("y0", a.y0, "Initial y");
    b.add("n", a.n, "Iterates")->check(CLI::PositiveNumber);
    b.run([&a] {
      const auto tr = iterate2d(FullParams(a.a, a.b, a.c, a.k), a.x0, a.y0, a.n);
      Table t{{"n", "x", "y"}, {}};
      for (std::size_t i = 0; i < tr.states.size(); ++i) {
        t.add({as_int(i), tr.states[i].x, tr.states[i].y});
      }
      return t;
    });
  }
  {
    struct Args {
      MapArgs m;
      double x0 = 2.2;
      std::size_t n = 500;
    };
    Builder b(app, list, "mmo", "Voltage trace of the reduced map");
    auto& a = b.hold<Args>();
    map_args(b, a.m);
    b.add("x0", a.x0, "Initial point");
    b.add("n", a.n, "Iterates")->check(CLI::PositiveNumber);
    b.run([&a] {
      const auto o = mmo_trace(MapParams(a.m.r, a.m.k), a.x0, a.n);
      Table t{{"n", "x"}, {}};
      for (std::size_t i = 0; i < o.points.size(); ++i) t.add({as_int(i), o.points[i]});
      return t;
    });
  }
}

}  // namespace chialvo::cli
