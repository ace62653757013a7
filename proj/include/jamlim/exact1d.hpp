#pragma once

#include <cstdint>

namespace jamlim::exact1d {

/// Truncated series bounds on the limiting occupation density of the 1D
/// nearest-neighbour exclusion scheme.
struct SeriesBounds {
  int order = 0;           // truncation order N
  double lower = 0.0;      // Σ_{0≤i,j≤N} p(2i, 2j)
  double upper = 0.0;      // 1 − (complementary parity blocks, see rho_bounds)
  double mass_accounted = 0.0;  // Σ p(i,j) over the enumerated block [0,2N]²
};

/// Probability that the nearest descent-break of the field lies i steps to
/// the left and j steps to the right of the origin:
///   p(i,j) = ij/((i+j+3)(i+1)!(j+1)!)
///          + 2/((i+j+3)(i+j+2)(i+j+1) i! j!)
///          + [1/((i+j+3)(i+j+2))] (i/((i+1)! j!) + j/((j+1)! i!)).
/// {p(i,j)} is a probability partition; the origin adsorbs iff both indices
/// are even. Long-double evaluation, relative error well under 1e-14.
double p(int i, int j);

/// Lower bound: the even-even block with i,j ≤ N. Upper bound: one minus the
/// three complementary parity blocks trailing one parity step behind, i.e.
///   1 − (Σ_{i≤N, j≤N−1} p(2i,2j+1) + Σ_{i≤N−1, j≤N} p(2i+1,2j)
///        + Σ_{i,j≤N−1} p(2i+1,2j+1)),
/// so the union of the four blocks is exactly the square [0,2N]².
SeriesBounds rho_bounds(int order);

/// Σ_{0≤i,j≤N} p(i,j); increases to 1.
double total_mass(int order);

/// Exact mean jamming density of nearest-neighbour exclusion on a path of k
/// sites, averaged over all k! arrival orders (null boundary). Enumerated in
/// exact integer arithmetic; k ≤ 10.
double brute_force_rho_segment(int k);

/// The same quantity as an exact reduced fraction (numerator, denominator).
struct Fraction {
  std::uint64_t num = 0;
  std::uint64_t den = 1;
};
Fraction brute_force_rho_segment_frac(int k);

}  // namespace jamlim::exact1d
