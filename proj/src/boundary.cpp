#include "swsplit/boundary.hpp"

#include <sstream>

namespace swsplit {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

struct GhostCell {
  State state;
  double b;
};

GhostCell ghost_for(const BoundarySpec& spec, const State& adjacent, double b_adjacent, double t) {
  const GhostCell wall{{adjacent.h, -adjacent.q}, b_adjacent};
  return std::visit(
      overloaded{
          [&](const Wall&) { return wall; },
          [&](const PrescribedDepth& p) {
            const double depth = p.surface(t) - b_adjacent;
            if (depth < 0.0) {
              std::ostringstream os;
              os << "prescribed surface " << p.surface(t) << " lies below the boundary bottom "
                 << b_adjacent << " at t = " << t;
              throw BoundaryConsistencyError(os.str());
            }
            return GhostCell{{depth, adjacent.q}, b_adjacent};
          },
          [&](const PrescribedDischarge& p) {
            if (t >= p.t_begin && t <= p.t_end) return GhostCell{{adjacent.h, p.discharge(t)}, b_adjacent};
            return wall;
          },
          [&](const Transmissive&) { return GhostCell{adjacent, b_adjacent}; },
      },
      spec);
}

}  // namespace

Ghosts fill_ghosts(const Field& field, const BoundaryCondition& bc, double t) {
  const std::size_t n = field.size();
  const GhostCell left = ghost_for(bc.left, field.states.front(), field.bathymetry.b.front(), t);
  const GhostCell right = ghost_for(bc.right, field.states[n - 1], field.bathymetry.b[n - 1], t);
  return {left.state, right.state, left.b, right.b};
}

}  // namespace swsplit
