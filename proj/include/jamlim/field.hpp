#pragma once

#include <concepts>
#include <cstdint>
#include <stdexcept>

#include "jamlim/lattice.hpp"

namespace jamlim {

namespace detail {
// SplitMix64 finalizer; full-avalanche bijection on 64-bit words.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}
}  // namespace detail

/// Deterministic i.i.d.-uniform random field over the lattice.
///
/// The mark at a site is a pure function of (seed, dimension, coordinates):
/// the 64-bit word is the SplitMix64 finalizer chained over the inputs,
///     w = mix64(seed); w = mix64(w ^ d); for each coordinate: w = mix64(w ^ c_i)
/// and the value maps its top 53 bits to ((w >> 11) + 0.5) * 2^-53, which lies
/// strictly inside (0,1). Stable within a release; not cryptographic.
class UniformField {
 public:
  UniformField(std::uint64_t seed, int dim) : seed_(seed), dim_(dim) {
    if (dim < 1 || dim > kMaxDim) throw std::invalid_argument("dimension out of range");
    base_ = detail::mix64(detail::mix64(seed) ^ static_cast<std::uint64_t>(dim));
  }

  std::uint64_t seed() const { return seed_; }
  int dim() const { return dim_; }

  std::uint64_t word(const Site& x) const {
    if (x.d != dim_) throw std::invalid_argument("site/field dimension mismatch");
    std::uint64_t w = base_;
    for (int i = 0; i < x.d; ++i) w = detail::mix64(w ^ static_cast<std::uint64_t>(x.c[i]));
    return w;
  }

  double value(const Site& x) const {
    return (static_cast<double>(word(x) >> 11) + 0.5) * 0x1.0p-53;
  }

 private:
  std::uint64_t seed_;
  int dim_;
  std::uint64_t base_;
};

template <class F>
concept FieldLike = requires(const F& f, const Site& s) {
  { f.value(s) } -> std::convertible_to<double>;
  { f.dim() } -> std::convertible_to<int>;
};

/// Strict total order scheduling arrivals: by field value, ties broken
/// lexicographically on coordinates.
template <FieldLike F>
bool field_less(const F& field, const Site& x, const Site& y) {
  if (x == y) throw std::invalid_argument("field_less requires distinct sites");
  const double vx = field.value(x);
  const double vy = field.value(y);
  if (vx != vy) return vx < vy;
  return lex_less(x, y);
}

}  // namespace jamlim
