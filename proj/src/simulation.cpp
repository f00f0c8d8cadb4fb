#include "swsplit/simulation.hpp"

#include <algorithm>
#include <cmath>

#include "swsplit/homogeneous.hpp"
#include "swsplit/sources.hpp"
#include "swsplit/wetdry.hpp"

namespace swsplit {

StepResult split_step(const Field& field, const BoundaryCondition& bc, const RunConfig& config, double dt) {
  const Field prev = config.wet_dry ? redefine_bottom(field, config.dry_eps) : field;
  const Ghosts ghosts = fill_ghosts(prev, bc, prev.time);
  const std::vector<Vec2> fluxes = interface_fluxes(prev, ghosts, config);
  const Field hat = apply_conservation(prev, fluxes, dt);
  const SourceContext ctx = make_source_context(prev, ghosts);

  Field next;
  switch (config.scheme) {
    case Scheme::QTra1: next = source_step_trapezoidal(hat, ctx, dt, config); break;
    case Scheme::QTra2: next = source_step_upwind(hat, prev, ctx, dt, config); break;
    case Scheme::QTra3: next = source_step_friction(hat, prev, ctx, dt, config); break;
  }
  enforce_positivity(next);
  if (config.wet_dry) next = zero_front_discharge(next, config.dry_eps);
  return {std::move(next), dt * (fluxes.front()[0] - fluxes.back()[0])};
}

void validate_run(const Scenario& scenario, const Field& initial, const RunConfig& config) {
  config.validate();
  if (config.wet_dry && config.scheme != Scheme::QTra3) {
    throw ConfigError("wet/dry treatment is only available with qtra3");
  }
  if (!config.wet_dry) {
    for (std::size_t j = 0; j < initial.size(); ++j) {
      if (initial.states[j].h < config.dry_eps) {
        throw ConfigError("scenario '" + scenario.name + "' has dry cells; " + to_string(config.scheme) +
                          " requires a fully wet domain");
      }
    }
  }
}

SimulationSummary run_simulation(const Scenario& scenario, const RunConfig& config, const SnapshotSink& sink) {
  return run_simulation(scenario.initial_field(config.n_cells), scenario, config, sink);
}

SimulationSummary run_simulation(Field field, const Scenario& scenario, const RunConfig& config,
                                 const SnapshotSink& sink) {
  validate_run(scenario, field, config);

  auto scheduled = [&](double t) {
    return std::find(config.snapshot_times.begin(), config.snapshot_times.end(), t) !=
           config.snapshot_times.end();
  };
  auto observe = [](SimulationSummary& s, const Field& f) {
    for (const State& w : f.states) {
      s.min_depth = std::min(s.min_depth, w.h);
      s.max_abs_q = std::max(s.max_abs_q, std::abs(w.q));
    }
  };

  SimulationSummary summary;
  summary.initial_mass = field.total_mass();
  summary.min_depth = field.states.front().h;
  observe(summary, field);
  if (sink && scheduled(field.time)) sink(field);

  while (field.time < config.t_end) {
    const double stop = next_stop(field.time, config);
    const double dt = cfl_dt(field, config);
    StepResult step = split_step(field, scenario.bc, config, dt);
    if (std::abs(step.field.time - stop) <= 1e-12 * std::max(1.0, std::abs(stop))) step.field.time = stop;
    field = std::move(step.field);
    summary.boundary_inflow += step.boundary_inflow;
    ++summary.steps;
    observe(summary, field);
    if (sink && scheduled(field.time)) sink(field);
  }

  summary.final_mass = field.total_mass();
  summary.final_field = std::move(field);
  return summary;
}

}  // namespace swsplit
