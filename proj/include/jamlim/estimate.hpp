#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "jamlim/armour.hpp"
#include "jamlim/config.hpp"
#include "jamlim/field.hpp"
#include "jamlim/scheme.hpp"

namespace jamlim {

/// Order-insensitive pairwise summation; identical result for any job count.
double pairwise_sum(std::span<const double> values);

/// Monte Carlo point estimate with a normal 95% confidence interval.
struct Estimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t replicas = 0;
  double ci_low = 0.0;
  double ci_high = 0.0;
};

Estimate make_estimate(std::span<const double> values);

struct CorrelationReport {
  Site x;
  double cov_hat = 0.0;
  double sigma0_sq_hat = 0.0;
  double sigmax_sq_hat = 0.0;
  double rho_hat = 0.0;
  double rho_std_error = 0.0;
  double bound = 0.0;          // decay-curve value when applicable
  bool bound_applicable = false;
  bool degenerate = false;     // a marginal has zero variance
  std::uint64_t replicas = 0;
  // Joint spin counts at (origin, x).
  std::uint64_t n11 = 0, n10 = 0, n01 = 0, n00 = 0;
};

struct DiscrepancyRow {
  Coord n = 0;
  double mu_limit = 0.0;   // window-sampler estimate of the event
  double mu_n = 0.0;       // box-process estimate at radius n
  double diff = 0.0;       // paired mean difference (same seeds)
  double abs_diff = 0.0;
  double std_error = 0.0;  // standard error of the paired difference
  double ci_low = 0.0;
  double ci_high = 0.0;
  double bound = 0.0;      // analytic speed-of-convergence curve
  std::uint64_t replicas = 0;
};

/// (2ν+1)^{d·n} / (n+1)!  — the escape-probability bound for armour radii.
/// Exact stepwise product for moderate n; log-space for huge n.
double tail_bound(std::int64_t n, int dim, Coord nu);

/// (2m+1)^d · (2ν+1)^{d·k} / k! with k = ⌈(n-m)/ν⌉; the analytic curve for
/// local-event discrepancies between the box process at radius n and the
/// limit on Λ_m. Requires n > m.
double discrepancy_bound(Coord n, Coord m, int dim, Coord nu);

/// Mean jamming density of the box process over independent replicas; the
/// replica r runs on the field seeded seed0 + r.
Estimate density_box(std::uint64_t seed0, std::uint64_t replicas, Coord n,
                     const ParkingScheme& scheme,
                     const BoundaryCondition& bc = BoundaryCondition::null(),
                     unsigned jobs = 1);

/// Spatial average of the limit process over Λ_n for a single field; one
/// number, no confidence interval.
double density_ergodic(std::uint64_t seed, Coord n, const ParkingScheme& scheme,
                       std::uint64_t budget = kDefaultArmourBudget);

/// Monte Carlo mean of the exact infinite-volume spin at the origin.
Estimate density_perfect(std::uint64_t seed0, std::uint64_t replicas,
                         const ParkingScheme& scheme,
                         std::uint64_t budget = kDefaultArmourBudget, unsigned jobs = 1);

/// Joint sampling of (spin at origin, spin at x) under one field per replica;
/// sample covariance, variances, correlation, and the decay-curve value.
CorrelationReport correlation(std::uint64_t seed0, std::uint64_t replicas, const Site& x,
                              const ParkingScheme& scheme,
                              std::uint64_t budget = kDefaultArmourBudget, unsigned jobs = 1);

using WindowPredicate = std::function<bool(const Configuration&)>;

/// |μ̂(L) − μ̂_n(L)| for a window event L on Λ_m, per box radius n. Both
/// estimators share the replica seed schedule, so the difference is the
/// paired per-seed disagreement.
std::vector<DiscrepancyRow> local_discrepancy(std::uint64_t seed0, std::uint64_t replicas,
                                              Coord m, const WindowPredicate& predicate,
                                              const std::vector<Coord>& box_radii,
                                              const ParkingScheme& scheme,
                                              std::uint64_t budget = kDefaultArmourBudget,
                                              unsigned jobs = 1);

/// Named window events for the discrepancy estimator.
WindowPredicate event_origin_occupied();
WindowPredicate event_all_true();
/// Acceptance table over the Λ_m window, row-major bitstrings.
WindowPredicate event_table(int dim, Coord m, std::set<std::string> accepted);

}  // namespace jamlim
