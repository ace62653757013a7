#include "jamlim/estimate.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

namespace jamlim {

namespace {

// Runs fn(r) for r in [0, replicas), partitioned statically over jobs.
// Exceptions from workers are rethrown on the caller thread.
template <class Fn>
void run_replicas(std::uint64_t replicas, unsigned jobs, const Fn& fn) {
  if (jobs <= 1 || replicas < 2) {
    for (std::uint64_t r = 0; r < replicas; ++r) fn(r);
    return;
  }
  const unsigned workers = static_cast<unsigned>(
      std::min<std::uint64_t>(jobs, replicas));
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    threads.emplace_back([&, w]() {
      try {
        for (std::uint64_t r = w; r < replicas; r += workers) fn(r);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

double pairwise_sum_impl(const double* v, std::size_t n) {
  if (n <= 32) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += v[i];
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum_impl(v, half) + pairwise_sum_impl(v + half, n - half);
}

}  // namespace

double pairwise_sum(std::span<const double> values) {
  return pairwise_sum_impl(values.data(), values.size());
}

Estimate make_estimate(std::span<const double> values) {
  if (values.size() < 2) throw std::invalid_argument("estimate requires >= 2 replicas");
  const auto n = static_cast<double>(values.size());
  Estimate e;
  e.replicas = values.size();
  e.mean = pairwise_sum(values) / n;
  std::vector<double> sq(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double d = values[i] - e.mean;
    sq[i] = d * d;
  }
  const double var = pairwise_sum(sq) / (n - 1.0);
  e.std_error = std::sqrt(var / n);
  e.ci_low = e.mean - 1.96 * e.std_error;
  e.ci_high = e.mean + 1.96 * e.std_error;
  return e;
}

double tail_bound(std::int64_t n, int dim, Coord nu) {
  if (n < 0) throw std::invalid_argument("tail_bound: negative path length");
  if (dim < 1 || dim > kMaxDim) throw std::invalid_argument("dimension out of range");
  if (nu < 1) throw std::invalid_argument("interaction radius must be >= 1");
  const long double degree = std::pow(static_cast<long double>(2 * nu + 1),
                                      static_cast<long double>(dim));
  if (n <= 170) {
    // (2ν+1)^{dn}/(n+1)! = Π_{k=1..n} (2ν+1)^d/(k+1)
    long double r = 1.0L;
    for (std::int64_t k = 1; k <= n; ++k) r *= degree / static_cast<long double>(k + 1);
    const double out = static_cast<double>(r);
    return std::isfinite(out) ? out : std::numeric_limits<double>::infinity();
  }
  const long double log_value = static_cast<long double>(n) * std::log(degree) -
                                std::lgamma(static_cast<long double>(n) + 2.0L);
  const double out = static_cast<double>(std::exp(log_value));
  return std::isfinite(out) ? out : std::numeric_limits<double>::infinity();
}

double discrepancy_bound(Coord n, Coord m, int dim, Coord nu) {
  if (n <= m) throw std::invalid_argument("discrepancy_bound requires n > m");
  if (m < 0) throw std::invalid_argument("negative window radius");
  const Coord k = (n - m + nu - 1) / nu;  // ⌈(n-m)/ν⌉
  const long double degree = std::pow(static_cast<long double>(2 * nu + 1),
                                      static_cast<long double>(dim));
  long double r = std::pow(static_cast<long double>(2 * m + 1),
                           static_cast<long double>(dim));
  if (k <= 300) {
    for (Coord i = 1; i <= k; ++i) r *= degree / static_cast<long double>(i);
  } else {
    r *= std::exp(static_cast<long double>(k) * std::log(degree) -
                   std::lgamma(static_cast<long double>(k) + 1.0L));
  }
  const double out = static_cast<double>(r);
  return std::isfinite(out) ? out : std::numeric_limits<double>::infinity();
}

Estimate density_box(std::uint64_t seed0, std::uint64_t replicas, Coord n,
                     const ParkingScheme& scheme, const BoundaryCondition& bc,
                     unsigned jobs) {
  if (replicas < 2) throw std::invalid_argument("density_box requires >= 2 replicas");
  const double volume = static_cast<double>(box_site_count(scheme.dim(), n));
  std::vector<double> values(replicas);
  run_replicas(replicas, jobs, [&](std::uint64_t r) {
    UniformField field(seed0 + r, scheme.dim());
    const Configuration cfg = park_box(field, n, scheme, bc);
    values[r] = static_cast<double>(cfg.occupied_count()) / volume;
  });
  return make_estimate(values);
}

double density_ergodic(std::uint64_t seed, Coord n, const ParkingScheme& scheme,
                       std::uint64_t budget) {
  if (n < 1) throw std::invalid_argument("density_ergodic requires n >= 1");
  UniformField field(seed, scheme.dim());
  const Configuration cfg =
      perfect_window(field, Box::centered(scheme.dim(), n).sites(), scheme, budget);
  return static_cast<double>(cfg.occupied_count()) / static_cast<double>(cfg.size());
}

Estimate density_perfect(std::uint64_t seed0, std::uint64_t replicas,
                         const ParkingScheme& scheme, std::uint64_t budget, unsigned jobs) {
  if (replicas < 2) throw std::invalid_argument("density_perfect requires >= 2 replicas");
  const Site origin = Site::origin(scheme.dim());
  std::vector<double> values(replicas);
  run_replicas(replicas, jobs, [&](std::uint64_t r) {
    UniformField field(seed0 + r, scheme.dim());
    values[r] = static_cast<double>(perfect_site(field, origin, scheme, budget));
  });
  return make_estimate(values);
}

namespace {

// Delta-method standard error of the sample correlation of a binary pair,
// treating (n11, n10, n01, n00) as multinomial counts.
double correlation_std_error(double p11, double p10, double p01, std::uint64_t replicas) {
  const auto rho_of = [](double q11, double q10, double q01) {
    const double pa = q11 + q10;
    const double pb = q11 + q01;
    const double va = pa * (1.0 - pa);
    const double vb = pb * (1.0 - pb);
    if (va <= 0.0 || vb <= 0.0) return 0.0;
    return (q11 - pa * pb) / std::sqrt(va * vb);
  };
  const double h = 1e-7;
  const double g11 = (rho_of(p11 + h, p10, p01) - rho_of(p11 - h, p10, p01)) / (2 * h);
  const double g10 = (rho_of(p11, p10 + h, p01) - rho_of(p11, p10 - h, p01)) / (2 * h);
  const double g01 = (rho_of(p11, p10, p01 + h) - rho_of(p11, p10, p01 - h)) / (2 * h);
  const double g[3] = {g11, g10, g01};
  const double p[3] = {p11, p10, p01};
  double var = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const double cov = (i == j ? p[i] * (1.0 - p[i]) : -p[i] * p[j]);
      var += g[i] * g[j] * cov;
    }
  if (var < 0.0) var = 0.0;
  return std::sqrt(var / static_cast<double>(replicas));
}

}  // namespace

CorrelationReport correlation(std::uint64_t seed0, std::uint64_t replicas, const Site& x,
                              const ParkingScheme& scheme, std::uint64_t budget,
                              unsigned jobs) {
  if (replicas < 2) throw std::invalid_argument("correlation requires >= 2 replicas");
  const Site origin = Site::origin(scheme.dim());
  if (x == origin) throw std::invalid_argument("correlation requires x != 0");
  if (x.d != scheme.dim()) throw std::invalid_argument("site/scheme dimension mismatch");

  std::vector<std::uint8_t> codes(replicas);
  run_replicas(replicas, jobs, [&](std::uint64_t r) {
    UniformField field(seed0 + r, scheme.dim());
    const Configuration cfg = perfect_window(field, {origin, x}, scheme, budget);
    codes[r] = static_cast<std::uint8_t>(2 * cfg.spin_at(origin) + cfg.spin_at(x));
  });

  CorrelationReport rep;
  rep.x = x;
  rep.replicas = replicas;
  for (std::uint8_t c : codes) {
    switch (c) {
      case 3: ++rep.n11; break;
      case 2: ++rep.n10; break;
      case 1: ++rep.n01; break;
      default: ++rep.n00; break;
    }
  }
  const double R = static_cast<double>(replicas);
  const std::uint64_t na = rep.n11 + rep.n10;  // spin at origin
  const std::uint64_t nb = rep.n11 + rep.n01;  // spin at x
  rep.cov_hat = (static_cast<double>(rep.n11) -
                 static_cast<double>(na) * static_cast<double>(nb) / R) /
                (R - 1.0);
  rep.sigma0_sq_hat =
      static_cast<double>(na) * (R - static_cast<double>(na)) / (R * (R - 1.0));
  rep.sigmax_sq_hat =
      static_cast<double>(nb) * (R - static_cast<double>(nb)) / (R * (R - 1.0));
  rep.degenerate = (na == 0 || na == replicas || nb == 0 || nb == replicas);
  if (!rep.degenerate) {
    rep.rho_hat = rep.cov_hat / std::sqrt(rep.sigma0_sq_hat * rep.sigmax_sq_hat);
    rep.rho_std_error = correlation_std_error(static_cast<double>(rep.n11) / R,
                                              static_cast<double>(rep.n10) / R,
                                              static_cast<double>(rep.n01) / R, replicas);
  }
  // Decay curve (2/σ̂₀²)·(2ν+1)^{d·k}/k! with k = ⌊|x|/2ν⌋ − 2.
  const Coord k = sup_norm(x) / (2 * scheme.nu()) - 2;
  rep.bound_applicable = (k >= 0) && !rep.degenerate;
  if (rep.bound_applicable) {
    long double r = 2.0L / static_cast<long double>(rep.sigma0_sq_hat);
    const long double degree = std::pow(static_cast<long double>(2 * scheme.nu() + 1),
                                        static_cast<long double>(scheme.dim()));
    for (Coord i = 1; i <= k; ++i) r *= degree / static_cast<long double>(i);
    rep.bound = static_cast<double>(r);
    if (!std::isfinite(rep.bound)) rep.bound = std::numeric_limits<double>::infinity();
  }
  return rep;
}

std::vector<DiscrepancyRow> local_discrepancy(std::uint64_t seed0, std::uint64_t replicas,
                                              Coord m, const WindowPredicate& predicate,
                                              const std::vector<Coord>& box_radii,
                                              const ParkingScheme& scheme,
                                              std::uint64_t budget, unsigned jobs) {
  if (replicas < 2) throw std::invalid_argument("local_discrepancy requires >= 2 replicas");
  if (m < 0) throw std::invalid_argument("negative window radius");
  for (Coord n : box_radii)
    if (n <= m) throw std::invalid_argument("box radius must exceed the window radius");

  const std::vector<Site> window = Box::centered(scheme.dim(), m).sites();
  const std::size_t rows = box_radii.size();

  std::vector<std::uint8_t> limit_hits(replicas);
  std::vector<std::vector<std::uint8_t>> box_hits(rows,
                                                  std::vector<std::uint8_t>(replicas));
  run_replicas(replicas, jobs, [&](std::uint64_t r) {
    UniformField field(seed0 + r, scheme.dim());
    limit_hits[r] = predicate(perfect_window(field, window, scheme, budget)) ? 1 : 0;
    for (std::size_t i = 0; i < rows; ++i) {
      const Configuration boxed = park_box(field, box_radii[i], scheme);
      box_hits[i][r] = predicate(boxed.restricted_to(window)) ? 1 : 0;
    }
  });

  const double R = static_cast<double>(replicas);
  std::vector<double> diffs(replicas);
  std::vector<DiscrepancyRow> out;
  out.reserve(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::uint64_t r = 0; r < replicas; ++r)
      diffs[r] = static_cast<double>(limit_hits[r]) - static_cast<double>(box_hits[i][r]);
    const Estimate est = make_estimate(diffs);
    DiscrepancyRow row;
    row.n = box_radii[i];
    row.mu_limit = pairwise_sum(std::vector<double>(limit_hits.begin(), limit_hits.end())) / R;
    row.mu_n = pairwise_sum(std::vector<double>(box_hits[i].begin(), box_hits[i].end())) / R;
    row.diff = est.mean;
    row.abs_diff = std::abs(est.mean);
    row.std_error = est.std_error;
    row.ci_low = est.ci_low;
    row.ci_high = est.ci_high;
    row.bound = discrepancy_bound(box_radii[i], m, scheme.dim(), scheme.nu());
    row.replicas = replicas;
    out.push_back(row);
  }
  return out;
}

WindowPredicate event_origin_occupied() {
  return [](const Configuration& cfg) {
    return cfg.spin_at(Site::origin(cfg.dim)) == 1;
  };
}

WindowPredicate event_all_true() {
  return [](const Configuration&) { return true; };
}

WindowPredicate event_table(int dim, Coord m, std::set<std::string> accepted) {
  const std::uint64_t cells = box_site_count(dim, m);
  for (const std::string& row : accepted)
    if (row.size() != cells) throw std::invalid_argument("event table row has wrong length");
  return [accepted = std::move(accepted), cells](const Configuration& cfg) {
    if (cfg.size() != cells) throw std::invalid_argument("window has wrong cell count");
    std::string key(cfg.size(), '0');
    for (std::size_t i = 0; i < cfg.spins.size(); ++i) key[i] = cfg.spins[i] ? '1' : '0';
    return accepted.count(key) != 0;
  };
}

}  // namespace jamlim
