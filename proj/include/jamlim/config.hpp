#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jamlim/lattice.hpp"

namespace jamlim {

/// A finite-support spin configuration. Sites are kept sorted
/// lexicographically; spins are parallel to them. Sites outside the support
/// carry `ambient_default`.
struct Configuration {
  int dim = 1;
  std::vector<Site> sites;
  std::vector<std::uint8_t> spins;
  std::uint8_t ambient_default = 0;

  static Configuration empty(int dim) {
    Configuration c;
    c.dim = dim;
    return c;
  }
  /// Builds from unsorted parallel arrays; sorts by site, rejects duplicates.
  static Configuration from_pairs(int dim, std::vector<Site> sites,
                                  std::vector<std::uint8_t> spins,
                                  std::uint8_t ambient_default = 0);

  std::size_t size() const { return sites.size(); }
  bool has(const Site& s) const;
  std::uint8_t spin_at(const Site& s) const;
  std::uint64_t occupied_count() const;

  /// Restriction to the given sites; spins outside the support read ambient.
  Configuration restricted_to(const std::vector<Site>& subset) const;

  std::string to_json_string() const;
  static Configuration from_json_string(const std::string& text);
  static Configuration from_file(const std::string& path);

  friend bool operator==(const Configuration& a, const Configuration& b) {
    return a.dim == b.dim && a.sites == b.sites && a.spins == b.spins &&
           a.ambient_default == b.ambient_default;
  }
};

/// Spin values assumed outside the target set of a parking run.
class BoundaryCondition {
 public:
  enum class Kind { Null, ConstantOne, Explicit };

  static BoundaryCondition null() { return BoundaryCondition(Kind::Null); }
  static BoundaryCondition ones() { return BoundaryCondition(Kind::ConstantOne); }
  static BoundaryCondition explicit_config(Configuration cfg) {
    BoundaryCondition bc(Kind::Explicit);
    bc.cfg_ = std::move(cfg);
    return bc;
  }

  Kind kind() const { return kind_; }
  const Configuration& config() const { return cfg_; }

  std::uint8_t outside_spin(const Site& s) const {
    switch (kind_) {
      case Kind::Null: return 0;
      case Kind::ConstantOne: return 1;
      case Kind::Explicit: return cfg_.spin_at(s);
    }
    return 0;
  }

  std::string describe() const {
    switch (kind_) {
      case Kind::Null: return "null";
      case Kind::ConstantOne: return "ones";
      case Kind::Explicit: return "explicit";
    }
    return "null";
  }

 private:
  explicit BoundaryCondition(Kind kind) : kind_(kind) {}
  Kind kind_;
  Configuration cfg_;
};

}  // namespace jamlim
