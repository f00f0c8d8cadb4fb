#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "swsplit/flux.hpp"
#include "swsplit/simulation.hpp"
#include "swsplit/verify.hpp"

namespace py = pybind11;
using namespace swsplit;

namespace {

py::array_t<double> to_array(const std::vector<double>& v) { return py::array_t<double>(v.size(), v.data()); }

py::dict field_dict(const Field& f) {
  std::vector<double> h, q;
  for (const State& s : f.states) {
    h.push_back(s.h);
    q.push_back(s.q);
  }
  const auto& b = f.bathymetry.b_pristine.empty() ? f.bathymetry.b : f.bathymetry.b_pristine;
  py::dict d;
  d["time"] = f.time;
  d["x"] = to_array(f.grid.cell_centers);
  d["b"] = to_array(b);
  d["b_eff"] = to_array(f.bathymetry.b);
  d["h"] = to_array(h);
  d["q"] = to_array(q);
  d["eta"] = to_array(free_surface(f));
  return d;
}

Scenario scenario(int number, bool paper_literal_bump) {
  return scenario_by_number(number, paper_literal_bump ? BumpProfile::Literal : BumpProfile::Scaled);
}

py::dict run(int test, const std::string& scheme_name, std::optional<std::size_t> cells,
             std::optional<double> cfl, std::optional<double> t_end, std::optional<double> manning,
             bool paper_literal_bump) {
  const Scheme scheme = scheme_from_string(scheme_name);
  const Scenario s = scenario(test, paper_literal_bump);
  RunConfig c = s.default_config(scheme);
  if (cells) c.n_cells = *cells;
  if (cfl) c.cfl = *cfl;
  if (t_end) c.t_end = *t_end;
  if (manning) c.manning_M = *manning;
  c.snapshot_times = {};

  SimulationSummary summary;
  {
    py::gil_scoped_release release;
    summary = run_simulation(s, c);
  }
  py::dict d = field_dict(summary.final_field);
  d["steps"] = summary.steps;
  d["min_depth"] = summary.min_depth;
  d["max_abs_q"] = summary.max_abs_q;
  d["initial_mass"] = summary.initial_mass;
  d["final_mass"] = summary.final_mass;
  d["boundary_inflow"] = summary.boundary_inflow;
  if (s.has_reference()) d["analytic_linf"] = analytic_error(summary.final_field, s, Norm::Linf, c.dry_eps);
  return d;
}

py::dict c_property(const std::string& scheme_name, const std::vector<std::size_t>& grids, std::size_t steps,
                    double surface, double manning) {
  RunConfig base;
  base.manning_M = manning;
  CPropertyReport r;
  {
    py::gil_scoped_release release;
    r = check_c_property(scheme_from_string(scheme_name), bump_bottom_spec(), surface, grids, steps, base);
  }
  py::list rows;
  for (const auto& g : r.grids) {
    py::dict row;
    row["n_cells"] = g.n_cells;
    row["dx"] = g.dx;
    row["max_abs_q"] = g.max_abs_q;
    row["max_abs_dh"] = g.max_abs_dh;
    rows.append(row);
  }
  py::dict d;
  d["classification"] = to_string(r.classification);
  d["grids"] = rows;
  d["max_abs_q"] = r.max_abs_q;
  d["max_abs_dh"] = r.max_abs_dh;
  d["order_dh"] = r.order_dh;
  d["order_q"] = r.order_q;
  return d;
}

}  // namespace

PYBIND11_MODULE(swsplit, m) {
  m.doc() = "1D shallow water solver with Q-scheme time splitting.";

  py::register_exception<SolverError>(m, "SolverError", PyExc_RuntimeError);

  m.def("initial_field", [](int test, std::optional<std::size_t> cells, bool paper_literal_bump) {
        const Scenario s = scenario(test, paper_literal_bump);
        return field_dict(s.initial_field(cells.value_or(s.default_cells)));
      },
      py::arg("test"), py::arg("cells") = py::none(), py::arg("paper_literal_bump") = false);

  m.def("run", &run, "Run a benchmark to its end time and return the final field and mass ledger.",
        py::arg("test"), py::arg("scheme"), py::arg("cells") = py::none(), py::arg("cfl") = py::none(),
        py::arg("t_end") = py::none(), py::arg("manning") = py::none(), py::arg("paper_literal_bump") = false);

  m.def("check_c_property", &c_property, "Lake-at-rest check on the bump bottom.", py::arg("scheme"),
        py::arg("grids") = std::vector<std::size_t>{50, 100, 200}, py::arg("steps") = kDefaultCPropertySteps,
        py::arg("surface") = 1.0, py::arg("manning") = 0.0);

  m.def("convergence_order", &convergence_order, py::arg("errors"));

  m.def("numerical_flux", [](std::pair<double, double> u, std::pair<double, double> v, double g) {
        Physics p;
        p.g = g;
        return numerical_flux({u.first, u.second}, {v.first, v.second}, p);
      },
      py::arg("u"), py::arg("v"), py::arg("g") = kDefaultGravity);

  m.def("physical_flux", [](std::pair<double, double> w, double g) { return physical_flux({w.first, w.second}, g); },
        py::arg("w"), py::arg("g") = kDefaultGravity);
}
