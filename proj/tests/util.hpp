#pragma once

#include <sys/wait.h>

#include <cstdio>
#include <initializer_list>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "jamlim/lattice.hpp"

namespace jamlim::testing {

/// A field with hand-picked values; only the listed sites may be probed.
struct MapField {
  int d = 1;
  std::unordered_map<Site, double, SiteHash> values;

  MapField(int dim, std::initializer_list<std::pair<Site, double>> entries) : d(dim) {
    for (const auto& [s, v] : entries) values.emplace(s, v);
  }

  int dim() const { return d; }
  double value(const Site& s) const {
    auto it = values.find(s);
    if (it == values.end())
      throw std::runtime_error("MapField probed at an unexpected site " + site_to_string(s));
    return it->second;
  }
};

inline Site s1(Coord x) { return Site{x}; }
inline Site s2(Coord x, Coord y) { return Site{x, y}; }

inline std::vector<Site> random_sites(int dim, std::size_t count, Coord span,
                                      std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Coord> dist(-span, span);
  std::vector<Site> out;
  out.reserve(count);
  while (out.size() < count) {
    Site s = Site::origin(dim);
    for (int i = 0; i < dim; ++i) s.c[i] = dist(rng);
    out.push_back(s);
  }
  return out;
}

struct CliResult {
  int exit_code = -1;
  std::string out;
};

/// Runs a shell command capturing stdout; stderr is left alone.
inline CliResult run_command(const std::string& command) {
  CliResult result;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed for: " + command);
  char buffer[4096];
  std::size_t n;
  while ((n = fread(buffer, 1, sizeof(buffer), pipe)) > 0) result.out.append(buffer, n);
  const int status = pclose(pipe);
  result.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  return result;
}

/// Exact rational on 64-bit integers; enough for the small-index oracles.
struct Rat {
  long long num = 0;
  long long den = 1;

  Rat() = default;
  Rat(long long n, long long d) : num(n), den(d) { normalize(); }
  void normalize() {
    if (den == 0) throw std::runtime_error("zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
  friend Rat operator+(const Rat& a, const Rat& b) {
    return Rat(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return Rat(a.num * b.num, a.den * b.den);
  }
  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num == b.num && a.den == b.den;
  }
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

inline long long factorial_ll(int n) {
  long long f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace jamlim::testing
