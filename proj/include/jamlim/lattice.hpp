#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace jamlim {

// Hard cap on the lattice dimension; sites are flat value types sized for it.
inline constexpr int kMaxDim = 8;

using Coord = std::int64_t;

/// A lattice site: a d-tuple of signed integer coordinates.
struct Site {
  std::array<Coord, kMaxDim> c{};
  std::int32_t d = 1;

  Site() = default;
  explicit Site(std::initializer_list<Coord> coords) {
    if (coords.size() < 1 || coords.size() > static_cast<std::size_t>(kMaxDim))
      throw std::invalid_argument("site dimension out of range");
    d = static_cast<std::int32_t>(coords.size());
    int i = 0;
    for (Coord v : coords) c[i++] = v;
  }
  static Site origin(int dim) {
    if (dim < 1 || dim > kMaxDim) throw std::invalid_argument("dimension out of range");
    Site s;
    s.d = dim;
    return s;
  }

  friend bool operator==(const Site& a, const Site& b) {
    if (a.d != b.d) return false;
    for (int i = 0; i < a.d; ++i)
      if (a.c[i] != b.c[i]) return false;
    return true;
  }
  friend bool operator!=(const Site& a, const Site& b) { return !(a == b); }
};

/// Lexicographic coordinate order; the deterministic tie-breaker.
inline bool lex_less(const Site& a, const Site& b) {
  for (int i = 0; i < a.d; ++i) {
    if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
  }
  return false;
}

inline Site translate(const Site& a, const Site& offset) {
  Site r = a;
  for (int i = 0; i < a.d; ++i) r.c[i] += offset.c[i];
  return r;
}

/// Sup-norm distance max_i |x_i - y_i|.
inline Coord sup_dist(const Site& a, const Site& b) {
  Coord m = 0;
  for (int i = 0; i < a.d; ++i) {
    Coord diff = a.c[i] - b.c[i];
    if (diff < 0) diff = -diff;
    if (diff > m) m = diff;
  }
  return m;
}

inline Coord sup_norm(const Site& a) {
  Coord m = 0;
  for (int i = 0; i < a.d; ++i) {
    Coord v = a.c[i] < 0 ? -a.c[i] : a.c[i];
    if (v > m) m = v;
  }
  return m;
}

struct SiteHash {
  std::size_t operator()(const Site& s) const {
    // FNV-1a over the active coordinates.
    std::uint64_t h = 0xcbf29ce484222325ull;
    auto eat = [&h](std::uint64_t v) {
      for (int k = 0; k < 8; ++k) {
        h ^= (v >> (8 * k)) & 0xffu;
        h *= 0x100000001b3ull;
      }
    };
    eat(static_cast<std::uint64_t>(s.d));
    for (int i = 0; i < s.d; ++i) eat(static_cast<std::uint64_t>(s.c[i]));
    return static_cast<std::size_t>(h);
  }
};

struct SiteLexLess {
  bool operator()(const Site& a, const Site& b) const { return lex_less(a, b); }
};

/// Number of sites in a box of the given radius, (2n+1)^d; throws on overflow.
inline std::uint64_t box_site_count(int dim, Coord radius) {
  if (dim < 1 || dim > kMaxDim) throw std::invalid_argument("dimension out of range");
  if (radius < 0) throw std::invalid_argument("negative box radius");
  unsigned __int128 n = 1;
  for (int i = 0; i < dim; ++i) {
    n *= static_cast<unsigned __int128>(2 * radius + 1);
    if (n > (static_cast<unsigned __int128>(1) << 62))
      throw std::invalid_argument("box too large");
  }
  return static_cast<std::uint64_t>(n);
}

/// A box of the given radius around a center site.
struct Box {
  Site center;
  Coord radius = 0;

  Box(Site center_, Coord radius_) : center(center_), radius(radius_) {
    if (radius < 0) throw std::invalid_argument("negative box radius");
  }
  /// The box of the given radius centered at the origin.
  static Box centered(int dim, Coord radius) { return Box(Site::origin(dim), radius); }

  int dim() const { return center.d; }
  std::uint64_t site_count() const { return box_site_count(center.d, radius); }

  bool contains(const Site& s) const { return sup_dist(s, center) <= radius; }

  /// All sites of the box in row-major (lexicographic) order.
  std::vector<Site> sites(std::uint64_t max_sites = 100'000'000ull) const {
    const std::uint64_t n = site_count();
    if (n > max_sites) throw std::invalid_argument("box too large to enumerate");
    std::vector<Site> out;
    out.reserve(static_cast<std::size_t>(n));
    Site cur = center;
    const int d = dim();
    for (int i = 0; i < d; ++i) cur.c[i] = center.c[i] - radius;
    while (true) {
      out.push_back(cur);
      int axis = d - 1;
      while (axis >= 0) {
        if (cur.c[axis] < center.c[axis] + radius) {
          ++cur.c[axis];
          for (int j = axis + 1; j < d; ++j) cur.c[j] = center.c[j] - radius;
          break;
        }
        --axis;
      }
      if (axis < 0) break;
    }
    return out;
  }
};

/// Offsets of the window Λ_ν in row-major order (center included).
inline std::vector<Site> window_offsets(int dim, Coord nu) {
  return Box::centered(dim, nu).sites();
}

inline std::string site_to_string(const Site& s) {
  std::string out = "(";
  for (int i = 0; i < s.d; ++i) {
    if (i) out += ",";
    out += std::to_string(s.c[i]);
  }
  out += ")";
  return out;
}

}  // namespace jamlim
