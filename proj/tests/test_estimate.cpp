#include <doctest.h>

#include <cmath>

#include "jamlim/estimate.hpp"
#include "jamlim/exact1d.hpp"
#include "util.hpp"

using namespace jamlim;
using namespace jamlim::testing;

TEST_CASE("tail_bound: exact small cases") {
  CHECK(tail_bound(0, 1, 1) == 1.0);
  CHECK(tail_bound(0, 3, 2) == 1.0);
  CHECK(tail_bound(1, 1, 1) == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(tail_bound(3, 1, 1) == doctest::Approx(27.0 / 24.0).epsilon(1e-14));
  CHECK(tail_bound(5, 2, 1) == doctest::Approx(std::pow(9.0, 5) / 720.0).epsilon(1e-13));
  CHECK_THROWS_AS(tail_bound(-1, 1, 1), std::invalid_argument);
}

TEST_CASE("tail_bound stays accurate over the full double range") {
  // against the log-space evaluation itself for consistency across the branch
  const double a = tail_bound(170, 1, 1);
  const double b = std::exp(170.0 * std::log(3.0) - std::lgamma(172.0));
  CHECK(a == doctest::Approx(b).epsilon(1e-9));
  CHECK(tail_bound(200, 1, 1) < 1e-100);
  CHECK(tail_bound(1000, 1, 1) == 0.0);  // far below the smallest double
  CHECK(tail_bound(4, 1, 1) == doctest::Approx(81.0 / 120.0).epsilon(1e-14));
}

TEST_CASE("discrepancy_bound: direct substitution") {
  // k = ceil((n-m)/nu)
  CHECK(discrepancy_bound(1, 0, 1, 1) == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(discrepancy_bound(6, 0, 1, 1) ==
        doctest::Approx(std::pow(3.0, 6) / 720.0).epsilon(1e-13));
  CHECK(discrepancy_bound(5, 1, 2, 2) ==
        doctest::Approx(9.0 * std::pow(25.0, 2) / 2.0).epsilon(1e-13));
  CHECK_THROWS_AS(discrepancy_bound(3, 3, 1, 1), std::invalid_argument);
}

TEST_CASE("pairwise_sum and make_estimate") {
  std::vector<double> v = {1.0, 2.0, 3.0, 4.0};
  CHECK(pairwise_sum(v) == 10.0);
  const Estimate e = make_estimate(v);
  CHECK(e.mean == doctest::Approx(2.5));
  CHECK(e.std_error == doctest::Approx(std::sqrt((5.0 / 3.0) / 4.0)));
  CHECK(e.ci_low == doctest::Approx(e.mean - 1.96 * e.std_error));
  CHECK(e.ci_high == doctest::Approx(e.mean + 1.96 * e.std_error));
  CHECK(e.replicas == 4);
  CHECK_THROWS_AS(make_estimate(std::vector<double>{1.0}), std::invalid_argument);
}

TEST_CASE("density_box: deterministic schemes have zero variance") {
  const auto full = ParkingScheme::full_table(1, 1);
  const Estimate e = density_box(9, 50, 5, full);
  CHECK(e.mean == 1.0);
  CHECK(e.std_error == 0.0);

  const auto nn = ParkingScheme::nn_exclusion(1, 1);
  const Estimate lone = density_box(9, 20, 0, nn);
  CHECK(lone.mean == 1.0);  // a lone site always adsorbs under null boundary
}

TEST_CASE("density_box agrees with the exact 3-site enumeration") {
  const auto nn = ParkingScheme::nn_exclusion(1, 1);
  const Estimate e = density_box(1234, 4000, 1, nn);
  const double exact = exact1d::brute_force_rho_segment(3);  // 5/9
  CHECK(std::abs(e.mean - exact) < 4.0 * std::sqrt(2.0 / 81.0 / 4000.0) + 1e-12);
}

TEST_CASE("density results are independent of the job count") {
  const auto nn = ParkingScheme::nn_exclusion(1, 1);
  const Estimate a = density_box(77, 500, 8, nn, BoundaryCondition::null(), 1);
  const Estimate b = density_box(77, 500, 8, nn, BoundaryCondition::null(), 4);
  CHECK(a.mean == b.mean);
  CHECK(a.std_error == b.std_error);
  const Estimate c = density_perfect(77, 500, nn, kDefaultArmourBudget, 3);
  const Estimate d = density_perfect(77, 500, nn, kDefaultArmourBudget, 1);
  CHECK(c.mean == d.mean);
}

TEST_CASE("density_perfect: sanity around the known 1D value") {
  const auto nn = ParkingScheme::nn_exclusion(1, 1);
  const Estimate e = density_perfect(5150, 4000, nn);
  CHECK(std::abs(e.mean - 0.4324) < 4.0 * e.std_error + 1e-3);
  const auto full = ParkingScheme::full_table(1, 1);
  CHECK(density_perfect(5150, 100, full).mean == 1.0);
}

TEST_CASE("density_perfect reproduces the known 2D value") {
  // square-lattice nearest-neighbour exclusion jams at ~0.3641
  const auto nn = ParkingScheme::nn_exclusion(2, 1, Norm::L1);
  const Estimate e = density_perfect(424242, 20000, nn, kDefaultArmourBudget, 4);
  CHECK(std::abs(e.mean - 0.3641) < 0.015);
}

TEST_CASE("density_ergodic: deterministic full-table value and 1D sanity") {
  const auto full = ParkingScheme::full_table(1, 1);
  CHECK(density_ergodic(3, 50, full) == 1.0);
  const auto nn = ParkingScheme::nn_exclusion(1, 1);
  const double rho = density_ergodic(3, 2000, nn);
  CHECK(std::abs(rho - 0.4324) < 0.02);
  CHECK_THROWS_AS(density_ergodic(3, 0, nn), std::invalid_argument);
}

TEST_CASE("ergodic and replica estimates of the density agree") {
  const auto nn = ParkingScheme::nn_exclusion(1, 1);
  const double erg = density_ergodic(21, 4000, nn);
  const Estimate mc = density_perfect(22, 4000, nn);
  CHECK(std::abs(erg - mc.mean) < 3.0 * (mc.std_error + 0.008));
}

TEST_CASE("std_error shrinks like the square root of the replica count") {
  const auto nn = ParkingScheme::nn_exclusion(1, 1);
  std::vector<double> log_r, log_se;
  for (std::uint64_t r : {100ull, 1000ull, 10000ull}) {
    const Estimate e = density_box(31337, r, 5, nn);
    log_r.push_back(std::log(static_cast<double>(r)));
    log_se.push_back(std::log(e.std_error));
  }
  const double slope = (log_se.back() - log_se.front()) / (log_r.back() - log_r.front());
  CHECK(slope > -0.65);
  CHECK(slope < -0.35);
}

TEST_CASE("perfect sampling is translation invariant in distribution") {
  const std::uint64_t reps = 4000;
  const auto mean_at = [&](int dim, const Site& x) {
    const auto nn = ParkingScheme::nn_exclusion(dim, 1);
    std::vector<double> hits(reps);
    for (std::uint64_t r = 0; r < reps; ++r) {
      UniformField f(900 + r, dim);
      hits[r] = perfect_site(f, x, nn);
    }
    return make_estimate(hits);
  };
  const Estimate o1 = mean_at(1, s1(0));
  for (const Site& x : {s1(17), s1(-6)}) {
    const Estimate e = mean_at(1, x);
    CHECK(std::abs(o1.mean - e.mean) <
          3.0 * std::sqrt(o1.std_error * o1.std_error + e.std_error * e.std_error));
  }
  const Estimate o2 = mean_at(2, s2(0, 0));
  const Estimate e2 = mean_at(2, s2(3, -2));
  CHECK(std::abs(o2.mean - e2.mean) <
        3.0 * std::sqrt(o2.std_error * o2.std_error + e2.std_error * e2.std_error));
}

TEST_CASE("correlation: degenerate schemes are flagged") {
  const auto full = ParkingScheme::full_table(1, 1);
  const CorrelationReport rep = correlation(1, 200, s1(2), full);
  CHECK(rep.degenerate);
  CHECK(rep.n11 == 200);
}

TEST_CASE("correlation: short-range dependence is significant, long-range bounded") {
  const auto nn = ParkingScheme::nn_exclusion(1, 1);
  const CorrelationReport near = correlation(42, 20000, s1(2), nn);
  CHECK_FALSE(near.degenerate);
  CHECK(std::abs(near.rho_hat) <= 1.0 + 1e-9);
  CHECK(std::abs(near.rho_hat) > 3.0 * near.rho_std_error);  // genuinely correlated
  CHECK_FALSE(near.bound_applicable);  // |x|/2ν − 2 < 0 at |x| = 2

  const CorrelationReport far = correlation(42, 20000, s1(12), nn);
  CHECK(far.bound_applicable);
  CHECK(far.bound > 0.0);
  CHECK(std::abs(far.rho_hat) - 3.0 * far.rho_std_error <= far.bound);
  // k = 12/2 - 2 = 4: curve value (2/σ̂²)·3^4/4!
  CHECK(far.bound ==
        doctest::Approx(2.0 / far.sigma0_sq_hat * std::pow(3.0, 4) / 24.0).epsilon(1e-12));
}

TEST_CASE("correlation: joint marginals match the direct density estimate") {
  const auto nn = ParkingScheme::nn_exclusion(1, 1);
  const std::uint64_t reps = 20000;
  const CorrelationReport rep = correlation(2024, reps, s1(3), nn);
  const double marginal =
      static_cast<double>(rep.n11 + rep.n10) / static_cast<double>(reps);
  const Estimate direct = density_perfect(777777, reps, nn);  // independent seeds
  const double se = std::sqrt(2.0) * (direct.std_error + 1e-6);
  CHECK(std::abs(marginal - direct.mean) < 3.0 * se);
}

TEST_CASE("correlation input validation") {
  const auto nn = ParkingScheme::nn_exclusion(1, 1);
  CHECK_THROWS_AS(correlation(1, 100, s1(0), nn), std::invalid_argument);
  CHECK_THROWS_AS(correlation(1, 1, s1(2), nn), std::invalid_argument);
}

TEST_CASE("local_discrepancy: the trivial event has zero discrepancy") {
  const auto nn = ParkingScheme::nn_exclusion(1, 1);
  const auto rows = local_discrepancy(7, 100, 0, event_all_true(), {2, 4}, nn);
  REQUIRE(rows.size() == 2);
  for (const auto& row : rows) {
    CHECK(row.mu_limit == 1.0);
    CHECK(row.mu_n == 1.0);
    CHECK(row.diff == 0.0);
    CHECK(row.std_error == 0.0);
  }
}

TEST_CASE("local_discrepancy: gaps sit under the coupling bound and vanish with n") {
  const auto nn = ParkingScheme::nn_exclusion(1, 1);
  const auto rows =
      local_discrepancy(99, 20000, 0, event_origin_occupied(), {2, 4, 6}, nn);
  REQUIRE(rows.size() == 3);
  for (const auto& row : rows) {
    // |mu - mu_n| is dominated by the per-seed disagreement probability,
    // which the armour tail bounds
    const double cap = std::min(1.0, tail_bound(row.n, 1, 1));
    CHECK(std::abs(row.diff) <= cap + 3.0 * row.std_error);
    CHECK(row.bound > 0.0);
  }
  // the exact gap at n=2 is 7/15 - rho; at n=6 it is within MC noise of zero
  CHECK(std::abs(rows[0].diff - (0.43233235838 - 7.0 / 15.0)) <
        4.0 * rows[0].std_error + 1e-12);
  CHECK(std::abs(rows[2].diff) <= 3.0 * rows[2].std_error + 1e-12);
  // larger boxes cannot be significantly worse
  CHECK(rows[0].abs_diff >=
        rows[2].abs_diff - 3.0 * (rows[0].std_error + rows[2].std_error) - 1e-12);
}

TEST_CASE("local_discrepancy: table events work") {
  const auto nn = ParkingScheme::nn_exclusion(1, 1);
  // event {η(0) = 1} written as a table over Λ_1: occupied center, any ends
  const auto pred = event_table(1, 1, {"010", "011", "110", "111"});
  const auto a = local_discrepancy(5, 4000, 1, pred, {4}, nn);
  const auto b = local_discrepancy(5, 4000, 1, event_origin_occupied(), {4}, nn);
  CHECK(a[0].mu_limit == b[0].mu_limit);
  CHECK(a[0].mu_n == b[0].mu_n);
}

TEST_CASE("local_discrepancy input validation") {
  const auto nn = ParkingScheme::nn_exclusion(1, 1);
  CHECK_THROWS_AS(local_discrepancy(1, 100, 2, event_all_true(), {2}, nn),
                  std::invalid_argument);
  CHECK_THROWS_AS(local_discrepancy(1, 1, 0, event_all_true(), {2}, nn),
                  std::invalid_argument);
}
