#include <doctest.h>

#include <cmath>
#include <random>

#include "swsplit/homogeneous.hpp"
#include "swsplit/sources.hpp"

using namespace swsplit;

namespace {

constexpr double g = 9.81;

struct Setup {
  Field prev;
  Field hat;
  SourceContext ctx;
  double dt;
};

Field field_from(const std::vector<double>& h, const std::vector<double>& q, const std::vector<double>& b,
                 double length = 1.0) {
  const std::size_t n = h.size();
  Field f{make_grid(0.0, length, n), std::vector<State>(n), Bathymetry::from_values(b), 0.0};
  for (std::size_t j = 0; j < n; ++j) f.states[j] = {h[j], q[j]};
  return f;
}

Setup homogeneous_setup(const Field& prev, const RunConfig& config) {
  const BoundaryCondition walls = BoundaryCondition::walls();
  const double dt = cfl_dt(prev, config);
  const Ghosts ghosts = fill_ghosts(prev, walls, prev.time);
  Field hat = apply_conservation(prev, interface_fluxes(prev, ghosts, config), dt);
  return {prev, std::move(hat), make_source_context(prev, ghosts), dt};
}

Field random_lake(std::mt19937_64& rng, std::size_t n, double level) {
  std::uniform_real_distribution<double> bed(-2.0, level - 0.05);
  std::vector<double> b(n), h(n), q(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    b[j] = bed(rng);
    h[j] = level - b[j];
  }
  return field_from(h, q, b);
}

Field random_flow(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> bed(0.0, 0.5), depth(0.5, 2.0), vel(-1.5, 1.5);
  std::vector<double> b(n), h(n), q(n);
  for (std::size_t j = 0; j < n; ++j) {
    b[j] = bed(rng);
    h[j] = depth(rng);
    q[j] = h[j] * vel(rng);
  }
  return field_from(h, q, b);
}

RunConfig base_config() {
  RunConfig c;
  c.t_end = 1e9;
  c.cfl = 0.5;
  return c;
}

}  // namespace

TEST_CASE("source context slopes use mirrored ghost bottoms") {
  const Field f = field_from({1, 1, 1}, {0, 0, 0}, {0.0, 0.2, 0.6});
  const SourceContext ctx = make_source_context(f, fill_ghosts(f, BoundaryCondition::walls(), 0.0));
  const double dx = f.grid.dx;
  CHECK(ctx.b_prime_left[0] == 0.0);
  CHECK(ctx.b_prime_right[2] == 0.0);
  CHECK(ctx.b_prime_left[1] == doctest::Approx(0.2 / dx));
  CHECK(ctx.b_prime_right[1] == doctest::Approx(0.4 / dx));
  CHECK(ctx.b_prime_central[1] == doctest::Approx(0.6 / (2.0 * dx)));
  CHECK(ctx.b_prime_central[0] == doctest::Approx(0.2 / (2.0 * dx)));
}

TEST_CASE("flat bottom: every source step is the identity") {
  std::mt19937_64 rng(2);
  RunConfig c = base_config();
  c.manning_M = 0.0;
  Field prev = random_flow(rng, 25);
  for (double& b : prev.bathymetry.b) b = 0.3;
  prev.bathymetry.b_pristine = prev.bathymetry.b;
  const Setup s = homogeneous_setup(prev, c);
  for (const Field& out : {source_step_trapezoidal(s.hat, s.ctx, s.dt, c),
                           source_step_upwind(s.hat, s.prev, s.ctx, s.dt, c),
                           source_step_friction(s.hat, s.prev, s.ctx, s.dt, c)}) {
    for (std::size_t j = 0; j < out.size(); ++j) CHECK(out.states[j] == s.hat.states[j]);
  }
}

TEST_CASE("trapezoidal step scalar value") {
  Field hat = field_from({1, 1, 1}, {0, 0, 0}, {0, 0, 0});
  SourceContext ctx;
  ctx.b_prime_central = {0.1, 0.1, 0.1};
  ctx.b_prime_left = ctx.b_prime_right = {0, 0, 0};
  ctx.h_prev = {1, 1, 1};
  RunConfig c;
  const Field out = source_step_trapezoidal(hat, ctx, 0.01, c);
  for (const State& s : out.states) {
    CHECK(s.q == doctest::Approx(-9.81e-3).epsilon(1e-14));
    CHECK(s.h == 1.0);
  }
}

TEST_CASE("trapezoidal step never touches depths") {
  std::mt19937_64 rng(8);
  const RunConfig c = base_config();
  for (int trial = 0; trial < 20; ++trial) {
    const Setup s = homogeneous_setup(random_flow(rng, 30), c);
    const Field out = source_step_trapezoidal(s.hat, s.ctx, s.dt, c);
    for (std::size_t j = 0; j < out.size(); ++j) CHECK(out.states[j].h == s.hat.states[j].h);
  }
}

TEST_CASE("trapezoidal step on a lake at rest leaves the residual predicted by its algebra") {
  // With b_j = A - h_j the step gives
  //   q_j = g dt/(4 dx) (h_{j+1} - h_{j-1}) ((h_j + h_hat_j) - (h_{j+1} + h_{j-1})),
  // which vanishes only where the depth is locally linear.
  std::mt19937_64 rng(4);
  const RunConfig c = base_config();
  const Setup s = homogeneous_setup(random_lake(rng, 12, 1.0), c);
  const Field out = source_step_trapezoidal(s.hat, s.ctx, s.dt, c);
  const std::size_t n = out.size();
  const double dx = out.grid.dx;
  auto h = [&](std::ptrdiff_t j) {
    j = std::clamp<std::ptrdiff_t>(j, 0, static_cast<std::ptrdiff_t>(n) - 1);
    return s.prev.states[static_cast<std::size_t>(j)].h;
  };
  double max_q = 0.0;
  for (std::size_t jj = 0; jj < n; ++jj) {
    const auto j = static_cast<std::ptrdiff_t>(jj);
    const double expected =
        g * s.dt / (4.0 * dx) * (h(j + 1) - h(j - 1)) * ((h(j) + s.hat.states[jj].h) - (h(j + 1) + h(j - 1)));
    CHECK(out.states[jj].q == doctest::Approx(expected).epsilon(1e-10).scale(1e-12));
    max_q = std::max(max_q, std::abs(out.states[jj].q));
  }
  CHECK(max_q > 1e-6);
}

TEST_CASE("one-sided update scalar values") {
  const Physics physics{};
  const State hat{1.0, 0.0};
  const State left = upwind_side_update(hat, {1.0, 0.0}, {1.0, 0.0}, 0.1 / 0.1, Side::Left, 0.01, 0.0, physics);
  CHECK(left.q == doctest::Approx(-0.0981).epsilon(1e-14));
  CHECK(left.h == doctest::Approx(1.0 - 0.01 * std::sqrt(g)).epsilon(1e-14));
  const State right =
      upwind_side_update(hat, {1.0, 0.0}, {1.0, 0.0}, 0.1 / 0.1, Side::Right, 0.01, 0.0, physics);
  CHECK(right.q == doctest::Approx(-0.0981).epsilon(1e-14));
  CHECK(right.h == doctest::Approx(1.0 + 0.01 * std::sqrt(g)).epsilon(1e-14));
}

TEST_CASE("upwind step is exact on lakes at rest") {
  std::mt19937_64 rng(77);
  const RunConfig c = base_config();
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<std::size_t> size(2, 60);
    std::uniform_real_distribution<double> level(0.5, 20.0);
    const Setup s = homogeneous_setup(random_lake(rng, size(rng), level(rng)), c);
    const Field out = source_step_upwind(s.hat, s.prev, s.ctx, s.dt, c);
    for (std::size_t j = 0; j < out.size(); ++j) {
      CHECK(std::abs(out.states[j].h - s.prev.states[j].h) <= 1e-13 * std::max(1.0, s.prev.states[j].h));
      CHECK(std::abs(out.states[j].q) <= 1e-13 * std::max(1.0, s.prev.states[j].h * s.prev.states[j].h));
    }
  }
}

TEST_CASE("upwind step matches the lake-at-rest closed forms") {
  // Independent scalar evaluation: h_L = h_hat - dt/dx (b_j - b_{j-1}) c_L,
  // h_R = h_hat + dt/dx (b_{j+1} - b_j) c_R, q_{L,R} = q_hat - dt/(2dx) g db (h + h').
  std::mt19937_64 rng(31);
  const RunConfig c = base_config();
  const Setup s = homogeneous_setup(random_lake(rng, 15, 3.0), c);
  const Field out = source_step_upwind(s.hat, s.prev, s.ctx, s.dt, c);
  const std::size_t n = out.size();
  const double dx = out.grid.dx;
  auto idx = [&](std::ptrdiff_t j) {
    return static_cast<std::size_t>(std::clamp<std::ptrdiff_t>(j, 0, static_cast<std::ptrdiff_t>(n) - 1));
  };
  auto h = [&](std::ptrdiff_t j) { return s.prev.states[idx(j)].h; };
  auto b = [&](std::ptrdiff_t j) { return s.prev.bathymetry.b[idx(j)]; };
  for (std::size_t jj = 0; jj < n; ++jj) {
    const auto j = static_cast<std::ptrdiff_t>(jj);
    const State hat = s.hat.states[jj];
    const double cl = std::sqrt(g * (h(j) + h(j - 1)) / 2.0);
    const double cr = std::sqrt(g * (h(j + 1) + h(j)) / 2.0);
    const double hl = hat.h - s.dt / dx * (b(j) - b(j - 1)) * cl;
    const double hr = hat.h + s.dt / dx * (b(j + 1) - b(j)) * cr;
    const double ql = hat.q - s.dt / (2.0 * dx) * g * (b(j) - b(j - 1)) * (h(j) + h(j - 1));
    const double qr = hat.q - s.dt / (2.0 * dx) * g * (b(j + 1) - b(j)) * (h(j + 1) + h(j));
    CHECK(std::abs(out.states[jj].h - 0.5 * (hl + hr)) <= 1e-13);
    CHECK(std::abs(out.states[jj].q - 0.5 * (ql + qr)) <= 1e-12);
    CHECK(std::abs(0.5 * (hl + hr) - h(j)) <= 1e-13);
    CHECK(std::abs(0.5 * (ql + qr)) <= 1e-12);
  }
}

TEST_CASE("left and right projected sources average back to the source") {
  std::mt19937_64 rng(15);
  std::uniform_real_distribution<double> depth(0.05, 5.0), vel(-4.0, 4.0), slope(-2.0, 2.0);
  const Physics physics{};
  int tested = 0;
  while (tested < 1000) {
    const double h = depth(rng), u = vel(rng);
    if (std::abs(std::abs(u) - std::sqrt(g * h)) < 1e-3) continue;
    ++tested;
    const State w{h, h * u};
    const UpwindMatrices d = upwind_matrices(w, w, physics);
    const Vec2 source{0.0, -g * h * slope(rng)};
    const Vec2 gl = d.D_L * source, gr = d.D_R * source;
    CHECK(std::abs(0.5 * (gl[0] + gr[0]) - source[0]) <= 1e-12 * (1.0 + std::abs(source[1])));
    CHECK(std::abs(0.5 * (gl[1] + gr[1]) - source[1]) <= 1e-12 * (1.0 + std::abs(source[1])));
  }
}

TEST_CASE("semi-implicit discharge scalar value") {
  const double q = semi_implicit_discharge(1.0, 1.0, 0.1, 9.81, 1.0, 0.0, 0.015, 1.0);
  CHECK(q == doctest::Approx(1.0 / (1.0 + 0.1 * 9.81 * 0.000225)).epsilon(1e-15));
  CHECK(q == doctest::Approx(0.999779).epsilon(1e-6));
  CHECK_THROWS_AS(semi_implicit_discharge(1.0, -1e6, 1.0, 9.81, 1.0, 0.0, 0.015, 1.0), FrictionStabilityError);
}

TEST_CASE("friction step with M = 0 is bit-identical to the upwind step") {
  std::mt19937_64 rng(99);
  RunConfig c = base_config();
  c.manning_M = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const Setup s = homogeneous_setup(random_flow(rng, 40), c);
    const Field a = source_step_upwind(s.hat, s.prev, s.ctx, s.dt, c);
    const Field b = source_step_friction(s.hat, s.prev, s.ctx, s.dt, c);
    for (std::size_t j = 0; j < a.size(); ++j) CHECK(a.states[j] == b.states[j]);
  }
}

TEST_CASE("friction is inactive on a resting field") {
  std::mt19937_64 rng(13);
  RunConfig c = base_config();
  c.manning_M = 0.015;
  const Setup s = homogeneous_setup(random_lake(rng, 30, 2.0), c);
  // The homogeneous step sets q_hat != 0, but the frozen q^n is zero everywhere.
  const Field a = source_step_upwind(s.hat, s.prev, s.ctx, s.dt, c);
  const Field b = source_step_friction(s.hat, s.prev, s.ctx, s.dt, c);
  for (std::size_t j = 0; j < a.size(); ++j) CHECK(a.states[j] == b.states[j]);
}

TEST_CASE("friction only slows the flow on a flat bed") {
  std::mt19937_64 rng(61);
  RunConfig c = base_config();
  c.manning_M = 0.03;
  for (int trial = 0; trial < 30; ++trial) {
    Field prev = random_flow(rng, 40);
    for (double& b : prev.bathymetry.b) b = 0.0;
    prev.bathymetry.b_pristine = prev.bathymetry.b;
    const Setup s = homogeneous_setup(prev, c);
    const Field out = source_step_friction(s.hat, s.prev, s.ctx, s.dt, c);
    for (std::size_t j = 0; j < out.size(); ++j) {
      const double before = s.hat.states[j].q, after = out.states[j].q;
      CHECK(std::abs(after) <= std::abs(before));
      CHECK((before == 0.0 || after == 0.0 || std::signbit(before) == std::signbit(after)));
    }
  }
}

TEST_CASE("wet/dry limiter keeps a thin uphill cell from over-draining") {
  // Freshly wetted cell sitting well above its neighbour's surface.
  const Field prev = field_from({3e-4, 3e-6}, {-1e-5, 0.0}, {0.4964, 0.5003}, 0.048);
  RunConfig c = base_config();
  c.scheme = Scheme::QTra3;
  c.manning_M = 0.015;
  const double dt = 4.8e-3;
  const Ghosts ghosts = fill_ghosts(prev, BoundaryCondition::walls(), 0.0);
  const Field hat = apply_conservation(prev, interface_fluxes(prev, ghosts, c), dt);
  const SourceContext ctx = make_source_context(prev, ghosts);

  const Field unlimited = source_step_friction(hat, prev, ctx, dt, c);
  CHECK(unlimited.states[1].h < 0.0);

  c.wet_dry = true;
  const Field limited = source_step_friction(hat, prev, ctx, dt, c);
  CHECK(limited.states[1].h >= 0.0);
  CHECK(limited.states[1].h <= 1e-18);
  const double mass_hat = hat.states[0].h + hat.states[1].h;
  const double mass_out = limited.states[0].h + limited.states[1].h;
  CHECK(mass_out == doctest::Approx(mass_hat).epsilon(1e-14));
  CHECK(limited.states[0].q == unlimited.states[0].q);
}

TEST_CASE("wet/dry limiter is inactive when nothing would go negative") {
  std::mt19937_64 rng(23);
  RunConfig c = base_config();
  c.manning_M = 0.02;
  for (int trial = 0; trial < 50; ++trial) {
    const Setup s = homogeneous_setup(random_flow(rng, 30), c);
    RunConfig wd = c;
    wd.wet_dry = true;
    const Field a = source_step_friction(s.hat, s.prev, s.ctx, s.dt, c);
    const Field b = source_step_friction(s.hat, s.prev, s.ctx, s.dt, wd);
    for (std::size_t j = 0; j < a.size(); ++j) CHECK(a.states[j] == b.states[j]);
  }
}
