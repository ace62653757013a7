#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "jamlim/lattice.hpp"

namespace jamlim {

/// Spin values over the window Λ_ν, row-major order, center entry at index
/// (size-1)/2. Admissibility is only defined for windows with vacant center.
struct Window {
  int dim = 1;
  Coord nu = 1;
  std::vector<std::uint8_t> values;

  Window(int dim_, Coord nu_)
      : dim(dim_), nu(nu_), values(box_site_count(dim_, nu_), 0) {}
  Window(int dim_, Coord nu_, std::vector<std::uint8_t> v)
      : dim(dim_), nu(nu_), values(std::move(v)) {}

  std::size_t center_index() const { return (values.size() - 1) / 2; }
  /// Row-major index of an offset inside Λ_ν.
  std::size_t index_of(const Site& offset) const;
  std::uint8_t& at(const Site& offset) { return values[index_of(offset)]; }
  std::uint8_t at(const Site& offset) const { return values[index_of(offset)]; }
};

enum class SchemeKind { Mask, Table };
enum class Norm { L1, LInf };

/// The set of admissible local windows under which an arriving particle
/// adsorbs. Two representations: an exclusion mask (occupied mask sites veto
/// adsorption; covers every hard-core exclusion at any d, ν) and an explicit
/// truth table of admissible windows (arbitrary schemes, small windows only).
class ParkingScheme {
 public:
  static ParkingScheme exclusion_mask(int dim, Coord nu, std::vector<Site> mask);
  static ParkingScheme truth_table(int dim, Coord nu, std::set<std::string> table);

  /// Nearest-neighbour exclusion: mask = offsets of Λ_ν \ {0} with ‖m‖ ≤ ν.
  static ParkingScheme nn_exclusion(int dim, Coord nu, Norm norm = Norm::L1);

  /// Truth table admitting every vacant-center window (no constraint at all).
  static ParkingScheme full_table(int dim, Coord nu);

  static ParkingScheme from_json_string(const std::string& text);
  static ParkingScheme from_file(const std::string& path);

  int dim() const { return dim_; }
  Coord nu() const { return nu_; }
  SchemeKind kind() const { return kind_; }
  const std::vector<Site>& mask() const { return mask_; }
  const std::set<std::string>& table() const { return table_; }
  /// Row-major indices of the mask offsets inside Λ_ν.
  const std::vector<std::size_t>& mask_indices() const { return mask_indices_; }

  bool admits(const Window& w) const;

  /// Whether the admissible set is closed under removing particles. Mask
  /// schemes are decreasing by construction; tables are checked entry-wise.
  bool is_decreasing() const;

  /// Canonical single-line JSON; the single source of truth for file schemes.
  std::string canonical_json() const;
  /// FNV-1a 64-bit digest of the canonical JSON, 16 hex chars.
  std::string hash_hex() const;

 private:
  ParkingScheme() = default;

  int dim_ = 1;
  Coord nu_ = 1;
  SchemeKind kind_ = SchemeKind::Mask;
  std::vector<Site> mask_;                 // sorted lexicographically
  std::vector<std::size_t> mask_indices_;  // parallel to mask_
  std::set<std::string> table_;            // bitstrings, row-major, center '0'
};

}  // namespace jamlim
