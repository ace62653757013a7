#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "jamlim/field.hpp"
#include "jamlim/simulate.hpp"

namespace jamlim {

inline constexpr std::uint64_t kDefaultArmourBudget = 10'000'000ull;

/// Raised when an armour exploration would exceed its site budget. The
/// exploration never returns a truncated set as if it were complete.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::uint64_t budget, std::uint64_t explored)
      : std::runtime_error("armour exploration exceeded budget of " + std::to_string(budget) +
                           " sites (explored " + std::to_string(explored) + " candidates)"),
        budget(budget),
        explored(explored) {}
  std::uint64_t budget;
  std::uint64_t explored;
};

/// The influence set of a seed set: every site from which a strictly
/// decreasing ν-step path leads into the seeds, plus the seeds themselves.
struct Armour {
  std::vector<Site> seeds;  // originating set, sorted
  std::vector<Site> sites;  // closure, sorted
  /// sup over (a, x) in sites × seeds of |a - x|_sup.
  Coord max_radius_seen = 0;
  /// Number of candidate sites examined during exploration.
  std::uint64_t explored = 0;

  /// Smallest r with sites ⊆ Λ_r (sup-norm distance to the origin).
  Coord containment_radius() const {
    Coord r = 0;
    for (const Site& s : sites) r = std::max(r, sup_norm(s));
    return r;
  }
};

/// Breadth-first closure of X under the step y → z with |z-y|_sup ≤ ν and
/// value(z) < value(y). Strict value comparison: a tie terminates a path.
template <FieldLike F>
Armour armour(const F& field, std::vector<Site> seeds, Coord nu,
              std::uint64_t budget = kDefaultArmourBudget) {
  if (seeds.empty()) throw std::invalid_argument("armour: empty seed set");
  if (nu < 1) throw std::invalid_argument("armour: interaction radius must be >= 1");
  const int d = field.dim();
  for (const Site& s : seeds)
    if (s.d != d) throw std::invalid_argument("armour: site/field dimension mismatch");
  std::sort(seeds.begin(), seeds.end(), SiteLexLess{});
  seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
  if (budget < seeds.size()) throw BudgetExceeded(budget, 0);

  const std::vector<Site> offsets = window_offsets(d, nu);

  // Bounding boxes of the seeds and of the growing closure.
  std::array<Coord, kMaxDim> seed_lo{}, seed_hi{}, lo{}, hi{};
  for (int i = 0; i < d; ++i) {
    seed_lo[i] = seed_hi[i] = seeds[0].c[i];
  }
  for (const Site& s : seeds)
    for (int i = 0; i < d; ++i) {
      seed_lo[i] = std::min(seed_lo[i], s.c[i]);
      seed_hi[i] = std::max(seed_hi[i], s.c[i]);
    }
  lo = seed_lo;
  hi = seed_hi;

  std::unordered_set<Site, SiteHash> visited(seeds.begin(), seeds.end());
  std::deque<std::pair<Site, double>> queue;
  for (const Site& s : seeds) queue.emplace_back(s, field.value(s));

  std::uint64_t explored = 0;
  while (!queue.empty()) {
    auto [y, vy] = queue.front();
    queue.pop_front();
    for (const Site& off : offsets) {
      if (sup_norm(off) == 0) continue;
      const Site z = translate(y, off);
      ++explored;
      if (visited.count(z)) continue;
      const double vz = field.value(z);
      if (vz < vy) {
        if (visited.size() + 1 > budget) throw BudgetExceeded(budget, explored);
        visited.insert(z);
        queue.emplace_back(z, vz);
        for (int i = 0; i < d; ++i) {
          lo[i] = std::min(lo[i], z.c[i]);
          hi[i] = std::max(hi[i], z.c[i]);
        }
      }
    }
  }

  Armour out;
  out.seeds = std::move(seeds);
  out.sites.assign(visited.begin(), visited.end());
  std::sort(out.sites.begin(), out.sites.end(), SiteLexLess{});
  out.explored = explored;
  for (int i = 0; i < d; ++i)
    out.max_radius_seen =
        std::max({out.max_radius_seen, hi[i] - seed_lo[i], seed_hi[i] - lo[i]});
  return out;
}

/// Exact sample of the infinite-volume spin at one site: park on the armour
/// of {x} with null boundary condition and read the spin at x.
template <FieldLike F>
int perfect_site(const F& field, const Site& x, const ParkingScheme& scheme,
                 std::uint64_t budget = kDefaultArmourBudget) {
  Armour a = armour(field, {x}, scheme.nu(), budget);
  Configuration cfg = park(field, std::move(a.sites), scheme);
  return cfg.spin_at(x);
}

/// Exact joint sample of the infinite-volume marginal on a finite window:
/// one armour for the whole window, one parking run, restricted to it.
template <FieldLike F>
Configuration perfect_window(const F& field, std::vector<Site> window,
                             const ParkingScheme& scheme,
                             std::uint64_t budget = kDefaultArmourBudget,
                             Armour* armour_out = nullptr) {
  Armour a = armour(field, std::move(window), scheme.nu(), budget);
  Configuration cfg = park(field, a.sites, scheme);
  Configuration out = cfg.restricted_to(a.seeds);
  if (armour_out) *armour_out = std::move(a);
  return out;
}

}  // namespace jamlim
