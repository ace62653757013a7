#include "jamlim/exact1d.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace jamlim::exact1d {

namespace {

constexpr int kMaxIndex = 400;  // factorials stay finite in long double

long double fac(int n) {
  static const std::vector<long double> table = [] {
    std::vector<long double> t(kMaxIndex + 4, 1.0L);
    for (int k = 1; k < static_cast<int>(t.size()); ++k)
      t[k] = t[k - 1] * static_cast<long double>(k);
    return t;
  }();
  return table[n];
}

long double p_ld(int i, int j) {
  if (i < 0 || j < 0) throw std::invalid_argument("negative index");
  if (i > kMaxIndex || j > kMaxIndex) throw std::invalid_argument("index too large");
  const long double L = static_cast<long double>(i + j + 3);
  const long double t1 =
      static_cast<long double>(i) * static_cast<long double>(j) /
      (L * fac(i + 1) * fac(j + 1));
  const long double t2 = 2.0L / (L * (L - 1.0L) * (L - 2.0L) * fac(i) * fac(j));
  const long double t3 =
      (1.0L / (L * (L - 1.0L))) *
      (static_cast<long double>(i) / (fac(i + 1) * fac(j)) +
       static_cast<long double>(j) / (fac(j + 1) * fac(i)));
  return t1 + t2 + t3;
}

}  // namespace

double p(int i, int j) { return static_cast<double>(p_ld(i, j)); }

SeriesBounds rho_bounds(int order) {
  if (order < 0) throw std::invalid_argument("negative truncation order");
  if (2 * order > kMaxIndex) throw std::invalid_argument("truncation order too large");
  long double lower = 0.0L;
  for (int i = 0; i <= order; ++i)
    for (int j = 0; j <= order; ++j) lower += p_ld(2 * i, 2 * j);
  long double complement = 0.0L;
  for (int i = 0; i <= order; ++i)
    for (int j = 0; j < order; ++j) complement += p_ld(2 * i, 2 * j + 1);
  for (int i = 0; i < order; ++i)
    for (int j = 0; j <= order; ++j) complement += p_ld(2 * i + 1, 2 * j);
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j) complement += p_ld(2 * i + 1, 2 * j + 1);
  SeriesBounds b;
  b.order = order;
  b.lower = static_cast<double>(lower);
  b.upper = static_cast<double>(1.0L - complement);
  b.mass_accounted = static_cast<double>(lower + complement);
  return b;
}

double total_mass(int order) {
  if (order < 0) throw std::invalid_argument("negative truncation order");
  if (order > kMaxIndex) throw std::invalid_argument("truncation order too large");
  long double mass = 0.0L;
  for (int i = 0; i <= order; ++i)
    for (int j = 0; j <= order; ++j) mass += p_ld(i, j);
  return static_cast<double>(mass);
}

Fraction brute_force_rho_segment_frac(int k) {
  if (k < 1) throw std::invalid_argument("segment length must be >= 1");
  if (k > 10) throw std::invalid_argument("segment length too large to enumerate");
  std::vector<int> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::uint64_t occupied_total = 0;
  std::uint64_t orders = 0;
  do {
    ++orders;
    bool occ[10] = {};
    for (int s : order) {
      if ((s > 0 && occ[s - 1]) || (s < k - 1 && occ[s + 1])) continue;
      occ[s] = true;
    }
    for (int s = 0; s < k; ++s) occupied_total += occ[s];
  } while (std::next_permutation(order.begin(), order.end()));
  Fraction f;
  f.num = occupied_total;
  f.den = orders * static_cast<std::uint64_t>(k);
  const std::uint64_t g = std::gcd(f.num, f.den);
  f.num /= g;
  f.den /= g;
  return f;
}

double brute_force_rho_segment(int k) {
  const Fraction f = brute_force_rho_segment_frac(k);
  return static_cast<double>(f.num) / static_cast<double>(f.den);
}

}  // namespace jamlim::exact1d
