#include <doctest.h>

#include <cmath>

#include "swsplit/verify.hpp"

using namespace swsplit;

TEST_CASE("convergence order examples") {
  CHECK(*convergence_order({{0.1, 1e-2}, {0.05, 2.5e-3}}) == doctest::Approx(2.0));
  CHECK(*convergence_order({{0.1, 1e-2}, {0.05, 5e-3}}) == doctest::Approx(1.0));
  CHECK(*convergence_order({{0.1, 3e-4}, {0.05, 3e-4}}) == doctest::Approx(0.0).scale(1.0));
  CHECK(!convergence_order({{0.1, 1e-2}, {0.05, 0.0}}).has_value());
  CHECK_THROWS_AS(convergence_order({{0.1, 1e-2}}), ConfigError);
  CHECK_THROWS_AS(convergence_order({{0.05, 1e-2}, {0.1, 1e-3}}), ConfigError);
}

TEST_CASE("convergence order is a least-squares fit") {
  // Three points on e = 3 dx^1.5 with multiplicative noise that cancels in the fit.
  const double k = 1.1;
  const auto order = convergence_order(
      {{0.4, 3.0 * std::pow(0.4, 1.5) * k}, {0.2, 3.0 * std::pow(0.2, 1.5) / (k * k)},
       {0.1, 3.0 * std::pow(0.1, 1.5) * k}});
  REQUIRE(order);
  CHECK(*order == doctest::Approx(1.5));
}

TEST_CASE("upwind source scheme is exact at rest on every grid") {
  for (Scheme scheme : {Scheme::QTra2, Scheme::QTra3}) {
    RunConfig base;
    base.manning_M = scheme == Scheme::QTra3 ? 0.03 : 0.0;
    const CPropertyReport r =
        check_c_property(scheme, bump_bottom_spec(), 1.0, {50, 100, 200}, kDefaultCPropertySteps, base);
    CHECK(r.classification == CPropertyClass::Exact);
    REQUIRE(r.grids.size() == 3);
    for (const auto& g : r.grids) {
      CHECK(g.max_abs_q <= kExactTolerance);
      CHECK(g.max_abs_dh <= kExactTolerance);
    }
  }
}

TEST_CASE("upwind source scheme is exact on a single coarse grid") {
  const CPropertyReport r = check_c_property(Scheme::QTra2, bump_bottom_spec(), 1.0, {7});
  CHECK(r.classification == CPropertyClass::Exact);
}

TEST_CASE("trapezoidal source scheme is not exact at rest") {
  const CPropertyReport r = check_c_property(Scheme::QTra1, bump_bottom_spec(), 1.0, {50, 100, 200});
  CHECK(r.classification != CPropertyClass::Exact);
  CHECK(r.max_abs_q > kExactTolerance);
  CHECK(r.max_abs_dh > kExactTolerance);
}

TEST_CASE("trapezoidal source defect decays at second order once the bump is resolved") {
  const CPropertyReport r = check_c_property(Scheme::QTra1, bump_bottom_spec(), 1.0, {800, 1600, 3200});
  REQUIRE(r.order_dh);
  REQUIRE(r.order_q);
  CHECK(*r.order_dh >= kApproximateOrder);
  CHECK(*r.order_q >= kApproximateOrder);
  CHECK(r.classification == CPropertyClass::Approximate);
}

TEST_CASE("any scheme on a flat bottom stays exactly at rest") {
  const BottomSpec flat{[](double) { return 0.2; }, 0.0, 1.0};
  for (Scheme scheme : {Scheme::QTra1, Scheme::QTra2, Scheme::QTra3}) {
    const CPropertyReport r = check_c_property(scheme, flat, 1.0, {20, 40});
    CHECK(r.max_abs_q == 0.0);
    CHECK(r.max_abs_dh == 0.0);
    CHECK(r.classification == CPropertyClass::Exact);
  }
}

TEST_CASE("c-property check is deterministic") {
  const auto a = check_c_property(Scheme::QTra1, bump_bottom_spec(), 1.0, {50, 100});
  const auto b = check_c_property(Scheme::QTra1, bump_bottom_spec(), 1.0, {100, 50, 50});
  CHECK(to_key_value(a) == to_key_value(b));
  CHECK(to_text(a) == to_text(b));
}

TEST_CASE("c-property check rejects a surface below the bottom") {
  CHECK_THROWS_AS(check_c_property(Scheme::QTra2, bump_bottom_spec(), 0.1, {50}), ConfigError);
  CHECK_THROWS_AS(check_c_property(Scheme::QTra2, bump_bottom_spec(), 1.0, {}), ConfigError);
}

TEST_CASE("report formats") {
  const auto r = check_c_property(Scheme::QTra2, bump_bottom_spec(), 1.0, {20, 40}, 5);
  const std::string text = to_text(r);
  CHECK(text.find("classification: Exact") != std::string::npos);
  const std::string kv = to_key_value(r);
  CHECK(kv.find("classification=Exact") != std::string::npos);
  CHECK(kv.find("scheme=qtra2") != std::string::npos);
}

TEST_CASE("scheme comparison") {
  const Scenario s = test2_stationary();
  RunConfig c = s.default_config(Scheme::QTra2);
  const SchemeComparison cmp = compare_schemes(s, {Scheme::QTra1, Scheme::QTra2}, c);
  REQUIRE(cmp.runs.size() == 2);
  REQUIRE(cmp.differences.size() == 1);
  CHECK(*cmp.runs[0].analytic_linf > 0.0);
  CHECK(*cmp.runs[1].analytic_linf <= 1e-12);
  CHECK(cmp.differences[0].first == Scheme::QTra1);
  CHECK(cmp.differences[0].l1 > 0.0);

  const SchemeDifference self = surface_difference(cmp.runs[0].final_field, cmp.runs[0].final_field);
  CHECK(self.l1 == 0.0);
  CHECK(self.linf == 0.0);
  CHECK(to_key_value(cmp).find("qtra1_qtra2") != std::string::npos);
}
