#pragma once

#include <cstddef>
#include <functional>

#include "swsplit/boundary.hpp"
#include "swsplit/core.hpp"
#include "swsplit/scenarios.hpp"

namespace swsplit {

/// Receives the field at every scheduled snapshot time.
using SnapshotSink = std::function<void(const Field&)>;

struct StepResult {
  Field field;
  /// Mass entering through both boundaries during the step, m^2 (per unit width).
  double boundary_inflow = 0.0;
};

/// One splitting step: optional bottom redefinition, homogeneous step, the
/// scheme's source step, optional front discharge zeroing. dt is taken as given.
StepResult split_step(const Field& field, const BoundaryCondition& bc, const RunConfig& config, double dt);

struct SimulationSummary {
  std::size_t steps = 0;
  double min_depth = 0.0;
  double max_abs_q = 0.0;
  double initial_mass = 0.0;
  double final_mass = 0.0;
  /// Time-integrated mass flux through the boundaries (inflow positive).
  double boundary_inflow = 0.0;
  Field final_field;

  /// final_mass - (initial_mass + boundary_inflow).
  double mass_defect() const { return final_mass - (initial_mass + boundary_inflow); }
};

/// Checks that the scheme suits the scenario and its initial field; throws ConfigError.
void validate_run(const Scenario& scenario, const Field& initial, const RunConfig& config);

/// Runs the scenario from its initial condition on config.n_cells cells up to
/// config.t_end, landing exactly on every snapshot time.
SimulationSummary run_simulation(const Scenario& scenario, const RunConfig& config,
                                 const SnapshotSink& sink = {});

/// Same, starting from a caller-supplied field.
SimulationSummary run_simulation(Field initial, const Scenario& scenario, const RunConfig& config,
                                 const SnapshotSink& sink = {});

}  // namespace swsplit
