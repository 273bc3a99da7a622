#include <doctest.h>

#include <cmath>

#include "pdicke/exact.hpp"
#include "pdicke/qpt.hpp"

using namespace pdicke;

TEST_SUITE("qpt") {

TEST_CASE("critical couplings at the symmetric point") {
  const ModelParams p = standard_dicke(1.0, 2.0, 16);
  const CriticalData cd = critical_data(p);
  CHECK(cd.lambda2_c == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(cd.lambda1_c == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(cd.lambda3 == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(cd.lambda4 == doctest::Approx(1.0).epsilon(1e-13));
  // mu = omega0 (omega + 0) / (lambda3+lambda4)^2 = 1/4
  CHECK(cd.mu == doctest::Approx(0.25).epsilon(1e-13));

  ModelParams free;
  CHECK(std::isinf(critical_data(free).mu));
}

TEST_CASE("rotating wave order parameters on the worked point") {
  ModelParams base;
  base.omega = 1.0;
  base.omega0 = 1.0;
  base.alpha = base.beta = 0.5;
  const BogoliubovReduction red = trivial_reduction(base);
  double jz, n;
  {
    const OrderParams o = analytic_order_params_tc(red, 1.0, 2.0);
    jz = o.jz_over_j;
    n = o.n_over_j;
  }
  CHECK(jz == doctest::Approx(-0.25).epsilon(1e-14));
  CHECK(n == doctest::Approx(1.875).epsilon(1e-14));

  // boundary continuity at lambda1 = lambda1_c = 1
  const OrderParams edge = analytic_order_params_tc(red, 1.0, 1.0);
  CHECK(edge.jz_over_j == -1.0);
  CHECK(edge.n_over_j == 0.0);
  const OrderParams below = analytic_order_params_tc(red, 1.0, 0.5);
  CHECK(below.jz_over_j == -1.0);
  CHECK(below.n_over_j == 0.0);
}

TEST_CASE("dicke order parameters on the worked point") {
  const OrderParams o = analytic_order_params_dicke(1.0, 1.0, 1.0);
  CHECK(o.jz_over_j == doctest::Approx(-0.25).epsilon(1e-14));
  CHECK(o.n_over_j == doctest::Approx(1.875).epsilon(1e-14));

  const OrderParams edge = analytic_order_params_dicke(1.0, 1.0, 0.5);
  CHECK(edge.jz_over_j == -1.0);
  CHECK(edge.n_over_j == 0.0);

  const OrderParams far = analytic_order_params_dicke(1.0, 1.0, 100.0);
  CHECK(std::abs(far.jz_over_j) < 1e-3);
}

TEST_CASE("general criterion reduces to the dicke formula on a grid") {
  for (int i = 0; i < 100; ++i) {
    const double l2 = 0.05 + 0.035 * i;
    const ModelParams p = standard_dicke(l2, 2.0, 16);
    const GeneralOrderParams g = analytic_order_params_general(p);
    const OrderParams d = analytic_order_params_dicke(1.0, 1.0, l2);
    CHECK(std::abs(g.jz_over_j - d.jz_over_j) < 1e-12);
    CHECK(std::abs(g.n_over_j - d.n_over_j) < 1e-12);
  }
}

TEST_CASE("general criterion reduces to the rotating wave formula on a grid") {
  for (int i = 0; i < 100; ++i) {
    const double l1 = 0.1 + 0.05 * i;
    const double j = 2.0;
    ModelParams p;
    p.omega = 1.3;
    p.omega0 = 0.7;
    p.alpha = p.beta = l1 / std::sqrt(2.0 * j);
    p.j = j;
    const GeneralOrderParams g = analytic_order_params_general(p);
    const OrderParams t =
        analytic_order_params_tc(trivial_reduction(p), 0.7, l1);
    CHECK(std::abs(g.jz_over_j - t.jz_over_j) < 1e-12);
    CHECK(std::abs(g.n_over_j - t.n_over_j) < 1e-12);
  }
}

TEST_CASE("mu example from the general criterion") {
  ModelParams p;
  p.omega = 1.0;
  p.omega0 = 1.0;
  p.j = 2.0;
  p.alpha = p.beta = 0.5;  // lambda3 = sqrt(2j alpha beta) = 1
  p.gamma = p.delta = 0.5;
  const GeneralOrderParams g = analytic_order_params_general(p);
  CHECK(g.mu == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(g.jz_over_j == doctest::Approx(-0.25).epsilon(1e-14));
}

TEST_CASE("free model has a pinned ground state at every j") {
  const ModelParams p = standard_dicke(1e-12, 4.0, 16);
  const ScanRecord rec = finite_j_order_params(p, {16, 64, 1e-8});
  CHECK(rec.converged);
  CHECK(rec.jz_over_j == doctest::Approx(-1.0).epsilon(1e-9));
  CHECK(rec.n_over_j == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("finite size values drift toward the analytic limit") {
  const ScanRecord r1 = finite_j_order_params(standard_dicke(1.0, 1.0, 16),
                                              {16, 128, 1e-8});
  const ScanRecord r2 = finite_j_order_params(standard_dicke(1.0, 2.0, 16),
                                              {16, 128, 1e-8});
  REQUIRE(r1.converged);
  REQUIRE(r2.converged);
  CHECK(r1.analytic_jz == doctest::Approx(-0.25).epsilon(1e-13));
  const double e1 = std::abs(r1.jz_over_j - r1.analytic_jz);
  const double e2 = std::abs(r2.jz_over_j - r2.analytic_jz);
  CHECK(e2 < e1);
  CHECK(e2 < 0.05);
  CHECK(std::abs(r1.jz_over_j) <= 1.0);
  CHECK(r1.n_over_j >= -1e-10);
}

TEST_CASE("records flag missing convergence instead of failing") {
  const ModelParams p = standard_dicke(1.0, 2.0, 16);
  const ScanRecord rec = finite_j_order_params(p, {16, 16, 1e-30});
  CHECK_FALSE(rec.converged);
  CHECK(rec.error.empty());
  CHECK(std::isfinite(rec.jz_over_j));
}

TEST_CASE("invalid points are reported in the record") {
  ModelParams p;
  p.alpha = 1.0;
  p.beta = -1.0;
  p.j = 1.0;
  p.cutoff = 8;
  const ScanRecord rec = finite_j_order_params(p, {8, 16, 1e-8});
  CHECK_FALSE(rec.error.empty());
  CHECK(std::isnan(rec.jz_over_j));
  CHECK_FALSE(rec.converged);
}

TEST_CASE("scan covers the grid coupling major") {
  SweepSpec sweep;
  sweep.param = "lambda2";
  sweep.start = 0.2;
  sweep.stop = 0.8;
  sweep.steps = 3;
  sweep.j_list = {1.0, 2.0};
  const auto records = scan(sweep, {16, 32, 1e-8});
  REQUIRE(records.size() == 6);
  CHECK(records[0].coupling == doctest::Approx(0.2));
  CHECK(records[0].j == 1.0);
  CHECK(records[1].j == 2.0);
  CHECK(records[4].coupling == doctest::Approx(0.8));
  CHECK(records.back().coupling == 0.8);  // exact endpoint

  // determinism: a rerun reproduces every record bit for bit
  const auto again = scan(sweep, {16, 32, 1e-8});
  for (std::size_t i = 0; i < records.size(); ++i) {
    CHECK(records[i].jz_over_j == again[i].jz_over_j);
    CHECK(records[i].n_over_j == again[i].n_over_j);
    CHECK(records[i].e0_over_j == again[i].e0_over_j);
  }
}

TEST_CASE("scan carries invalid rows without stopping") {
  SweepSpec sweep;
  sweep.param = "alpha";  // base.beta stays zero: half-vanished pair
  sweep.start = 0.1;
  sweep.stop = 0.5;
  sweep.steps = 2;
  sweep.j_list = {0.5};
  const auto records = scan(sweep, {8, 16, 1e-8});
  REQUIRE(records.size() == 2);
  for (const auto& rec : records) {
    CHECK_FALSE(rec.error.empty());
    CHECK(std::isnan(rec.jz_over_j));
  }
}

TEST_CASE("scan rejects malformed sweeps") {
  SweepSpec sweep;
  sweep.j_list = {1.0};
  sweep.steps = 1;
  CHECK_THROWS_AS(scan(sweep, {}), contract_error);
  sweep.steps = 2;
  sweep.j_list = {};
  CHECK_THROWS_AS(scan(sweep, {}), contract_error);
  sweep.j_list = {2.0, 1.0};
  CHECK_THROWS_AS(scan(sweep, {}), contract_error);
  sweep.j_list = {1.0};
  sweep.param = "unknown_knob";
  CHECK_THROWS_AS(scan(sweep, {}), contract_error);
}

TEST_CASE("nonhermitian sweep tracks the hermitian one at equal coupling") {
  SweepSpec hermitian;
  hermitian.param = "lambda2";
  hermitian.start = 0.4;
  hermitian.stop = 1.2;
  hermitian.steps = 3;
  hermitian.j_list = {1.0};

  SweepSpec skew = hermitian;
  skew.param = "lambda2_nh";
  skew.base.alpha = 2.0;
  skew.base.beta = 0.5;
  skew.base.gamma = 2.0;
  skew.base.delta = 0.5;

  const auto a = scan(hermitian, {16, 64, 1e-9});
  const auto b = scan(skew, {16, 64, 1e-9});
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(std::abs(a[i].jz_over_j - b[i].jz_over_j) < 1e-8);
    CHECK(std::abs(a[i].n_over_j - b[i].n_over_j) < 1e-8);
    CHECK(std::abs(a[i].e0_over_j - b[i].e0_over_j) < 1e-8);
  }
}

}  // TEST_SUITE
