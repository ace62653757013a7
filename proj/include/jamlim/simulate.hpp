#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "jamlim/config.hpp"
#include "jamlim/field.hpp"
#include "jamlim/scheme.hpp"

namespace jamlim {

/// Runs the parking process on a finite target set: sites are visited in
/// increasing field order and a site adsorbs iff its ν-window is admissible.
/// The window reads the evolving configuration inside the target and the
/// boundary condition outside. Returns the jamming limit restricted to the
/// target (sorted support, ambient 0).
template <FieldLike F>
Configuration park(const F& field, std::vector<Site> target, const ParkingScheme& scheme,
                   const BoundaryCondition& bc = BoundaryCondition::null()) {
  if (target.empty()) throw std::invalid_argument("park: empty target set");
  const int d = field.dim();
  if (scheme.dim() != d) throw std::invalid_argument("park: scheme/field dimension mismatch");
  for (const Site& s : target)
    if (s.d != d) throw std::invalid_argument("park: site/field dimension mismatch");

  std::sort(target.begin(), target.end(), SiteLexLess{});
  target.erase(std::unique(target.begin(), target.end()), target.end());
  const std::size_t m = target.size();

  std::unordered_map<Site, std::uint32_t, SiteHash> index;
  index.reserve(m * 2);
  for (std::size_t i = 0; i < m; ++i) index.emplace(target[i], static_cast<std::uint32_t>(i));

  std::vector<std::uint32_t> order(m);
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return field_less(field, target[a], target[b]);
  });

  std::vector<std::uint8_t> spins(m, 0);
  auto spin_of = [&](const Site& q) -> std::uint8_t {
    auto it = index.find(q);
    if (it != index.end()) return spins[it->second];
    return bc.outside_spin(q);
  };

  if (scheme.kind() == SchemeKind::Mask) {
    const std::vector<Site>& mask = scheme.mask();
    for (std::uint32_t i : order) {
      const Site& x = target[i];
      bool blocked = false;
      for (const Site& off : mask) {
        if (spin_of(translate(x, off))) {
          blocked = true;
          break;
        }
      }
      if (!blocked) spins[i] = 1;
    }
  } else {
    const std::vector<Site> offsets = window_offsets(d, scheme.nu());
    Window w(d, scheme.nu());
    for (std::uint32_t i : order) {
      const Site& x = target[i];
      for (std::size_t k = 0; k < offsets.size(); ++k)
        w.values[k] = spin_of(translate(x, offsets[k]));
      // The center cell is the site's own spin, still 0 at arrival time.
      if (scheme.admits(w)) spins[i] = 1;
    }
  }

  Configuration out;
  out.dim = d;
  out.sites = std::move(target);
  out.spins = std::move(spins);
  out.ambient_default = 0;
  return out;
}

/// Parking process on the box Λ_n centered at the origin.
template <FieldLike F>
Configuration park_box(const F& field, Coord n, const ParkingScheme& scheme,
                       const BoundaryCondition& bc = BoundaryCondition::null()) {
  if (n < 0) throw std::invalid_argument("park_box: negative radius");
  return park(field, Box::centered(field.dim(), n).sites(), scheme, bc);
}

}  // namespace jamlim
