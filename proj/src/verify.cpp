#include "swsplit/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "swsplit/homogeneous.hpp"
#include "swsplit/simulation.hpp"

namespace swsplit {

std::string to_string(CPropertyClass c) {
  switch (c) {
    case CPropertyClass::Exact: return "Exact";
    case CPropertyClass::Approximate: return "Approximate";
    case CPropertyClass::Fails: return "Fails";
  }
  return "unknown";
}

BottomSpec bump_bottom_spec(BumpProfile bump) {
  return {[bump](double x) { return bump_bottom(x, bump); }, 0.0, 1.0};
}

std::optional<double> convergence_order(const std::vector<std::pair<double, double>>& errors) {
  if (errors.size() < 2) throw ConfigError("convergence order needs at least two (dx, error) pairs");
  for (std::size_t i = 1; i < errors.size(); ++i) {
    if (!(errors[i].first < errors[i - 1].first)) throw ConfigError("dx values must be strictly decreasing");
  }
  if (errors.front().first <= 0.0 || errors.back().first <= 0.0) throw ConfigError("dx must be positive");
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (const auto& [dx, err] : errors) {
    if (!(err > 0.0)) return std::nullopt;
    const double x = std::log(dx);
    const double y = std::log(err);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double n = static_cast<double>(errors.size());
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

namespace {

bool decays(const std::vector<CPropertyGridResult>& grids, double CPropertyGridResult::*member,
            const std::optional<double>& order) {
  const bool at_zero = std::all_of(grids.begin(), grids.end(),
                                   [&](const CPropertyGridResult& g) { return g.*member <= kExactTolerance; });
  return at_zero || (order && *order >= kApproximateOrder);
}

std::optional<double> order_of(const std::vector<CPropertyGridResult>& grids,
                               double CPropertyGridResult::*member) {
  if (grids.size() < 2) return std::nullopt;
  std::vector<std::pair<double, double>> pairs;
  for (const auto& g : grids) pairs.emplace_back(g.dx, g.*member);
  return convergence_order(pairs);
}

}  // namespace

CPropertyReport check_c_property(Scheme scheme, const BottomSpec& bottom, double surface_level,
                                 const std::vector<std::size_t>& grid_sizes, std::size_t n_steps,
                                 const RunConfig& base) {
  if (grid_sizes.empty()) throw ConfigError("at least one grid size is required");
  RunConfig config = base;
  config.scheme = scheme;
  config.t_end = std::numeric_limits<double>::infinity();
  config.snapshot_times.clear();
  config.wet_dry = false;
  config.validate();

  std::vector<std::size_t> sizes = grid_sizes;
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());

  CPropertyReport report;
  report.scheme = scheme;
  report.n_steps = n_steps;
  const BoundaryCondition walls = BoundaryCondition::walls();
  for (std::size_t n : sizes) {
    Grid grid = make_grid(bottom.x_left, bottom.x_right, n);
    Bathymetry bathy = Bathymetry::sample(grid, bottom.bottom);
    for (double b : bathy.b) {
      if (!(surface_level - b > config.dry_eps)) {
        throw ConfigError("surface level must exceed the bottom everywhere for a lake at rest");
      }
    }
    const auto& bs = bathy.b;
    std::vector<State> rest(n);
    for (std::size_t j = 0; j < n; ++j) rest[j] = {surface_level - bs[j], 0.0};
    Field field{grid, rest, bathy, 0.0};
    const Field initial = field;

    for (std::size_t step = 0; step < n_steps; ++step) {
      field = split_step(field, walls, config, cfl_dt(field, config)).field;
    }
    CPropertyGridResult result{n, field.grid.dx, 0.0, 0.0};
    for (std::size_t j = 0; j < n; ++j) {
      result.max_abs_q = std::max(result.max_abs_q, std::abs(field.states[j].q));
      result.max_abs_dh = std::max(result.max_abs_dh, std::abs(field.states[j].h - initial.states[j].h));
    }
    report.max_abs_q = std::max(report.max_abs_q, result.max_abs_q);
    report.max_abs_dh = std::max(report.max_abs_dh, result.max_abs_dh);
    report.grids.push_back(result);
  }
  // Grids were sorted by cell count, so dx is already decreasing.
  report.order_dh = order_of(report.grids, &CPropertyGridResult::max_abs_dh);
  report.order_q = order_of(report.grids, &CPropertyGridResult::max_abs_q);

  if (report.max_abs_q <= kExactTolerance && report.max_abs_dh <= kExactTolerance) {
    report.classification = CPropertyClass::Exact;
  } else if (decays(report.grids, &CPropertyGridResult::max_abs_dh, report.order_dh) &&
             decays(report.grids, &CPropertyGridResult::max_abs_q, report.order_q)) {
    report.classification = CPropertyClass::Approximate;
  } else {
    report.classification = CPropertyClass::Fails;
  }
  return report;
}

SchemeDifference surface_difference(const Field& a, const Field& b, double dry_eps) {
  if (a.size() != b.size()) throw ConfigError("fields live on different grids");
  SchemeDifference diff{};
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a.states[j].h < dry_eps || b.states[j].h < dry_eps) continue;
    const double d = std::abs((a.states[j].h + a.bathymetry.b_pristine[j]) -
                              (b.states[j].h + b.bathymetry.b_pristine[j]));
    diff.l1 += d * a.grid.dx;
    diff.linf = std::max(diff.linf, d);
  }
  return diff;
}

SchemeComparison compare_schemes(const Scenario& scenario, const std::vector<Scheme>& schemes,
                                 const RunConfig& config) {
  SchemeComparison out;
  for (Scheme s : schemes) {
    RunConfig c = config;
    c.scheme = s;
    SimulationSummary summary = run_simulation(scenario, c);
    SchemeOutcome outcome{s, std::move(summary.final_field), std::nullopt, std::nullopt};
    if (scenario.has_reference()) {
      outcome.analytic_linf = analytic_error(outcome.final_field, scenario, Norm::Linf, c.dry_eps);
      outcome.analytic_l1 = analytic_error(outcome.final_field, scenario, Norm::L1, c.dry_eps);
    }
    out.runs.push_back(std::move(outcome));
  }
  for (std::size_t i = 0; i < out.runs.size(); ++i) {
    for (std::size_t k = i + 1; k < out.runs.size(); ++k) {
      SchemeDifference d = surface_difference(out.runs[i].final_field, out.runs[k].final_field, config.dry_eps);
      d.first = out.runs[i].scheme;
      d.second = out.runs[k].scheme;
      out.differences.push_back(d);
    }
  }
  return out;
}

namespace {

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6e", v);
  return buf;
}

std::string order_text(const std::optional<double>& order) {
  if (!order) return "n/a";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", *order);
  return buf;
}

}  // namespace

std::string to_text(const CPropertyReport& report) {
  std::ostringstream os;
  os << "C-property check: scheme " << to_string(report.scheme) << ", " << report.n_steps << " steps\n";
  os << "  cells           dx        max|q|       max|h-h0|\n";
  for (const auto& g : report.grids) {
    char line[128];
    std::snprintf(line, sizeof line, "  %5zu  %11.4e  %12.4e  %12.4e\n", g.n_cells, g.dx, g.max_abs_q,
                  g.max_abs_dh);
    os << line;
  }
  os << "  order(h) = " << order_text(report.order_dh) << ", order(q) = " << order_text(report.order_q) << '\n';
  os << "  classification: " << to_string(report.classification);
  if (report.classification == CPropertyClass::Approximate) {
    os << " order≈" << order_text(report.order_dh);
  }
  os << '\n';
  return os.str();
}

std::string to_key_value(const CPropertyReport& report) {
  std::ostringstream os;
  os << "scheme=" << to_string(report.scheme) << '\n';
  os << "n_steps=" << report.n_steps << '\n';
  for (const auto& g : report.grids) {
    os << "grid." << g.n_cells << ".dx=" << sci(g.dx) << '\n';
    os << "grid." << g.n_cells << ".max_abs_q=" << sci(g.max_abs_q) << '\n';
    os << "grid." << g.n_cells << ".max_abs_dh=" << sci(g.max_abs_dh) << '\n';
  }
  os << "max_abs_q=" << sci(report.max_abs_q) << '\n';
  os << "max_abs_dh=" << sci(report.max_abs_dh) << '\n';
  os << "order_dh=" << order_text(report.order_dh) << '\n';
  os << "order_q=" << order_text(report.order_q) << '\n';
  os << "classification=" << to_string(report.classification) << '\n';
  return os.str();
}

std::string to_text(const SchemeComparison& comparison) {
  std::ostringstream os;
  os << "scheme   analytic Linf   analytic L1\n";
  for (const auto& r : comparison.runs) {
    os << to_string(r.scheme) << "    " << (r.analytic_linf ? sci(*r.analytic_linf) : std::string("n/a")) << "   "
       << (r.analytic_l1 ? sci(*r.analytic_l1) : std::string("n/a")) << '\n';
  }
  os << "pair           L1 diff        Linf diff\n";
  for (const auto& d : comparison.differences) {
    os << to_string(d.first) << '/' << to_string(d.second) << "   " << sci(d.l1) << "   " << sci(d.linf) << '\n';
  }
  return os.str();
}

std::string to_key_value(const SchemeComparison& comparison) {
  std::ostringstream os;
  for (const auto& r : comparison.runs) {
    if (r.analytic_linf) os << to_string(r.scheme) << ".analytic_linf=" << sci(*r.analytic_linf) << '\n';
    if (r.analytic_l1) os << to_string(r.scheme) << ".analytic_l1=" << sci(*r.analytic_l1) << '\n';
  }
  for (const auto& d : comparison.differences) {
    const std::string key = to_string(d.first) + "_" + to_string(d.second);
    os << key << ".l1=" << sci(d.l1) << '\n' << key << ".linf=" << sci(d.linf) << '\n';
  }
  return os.str();
}

}  // namespace swsplit
