#include "jamlim/config.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

namespace jamlim {

Configuration Configuration::from_pairs(int dim, std::vector<Site> sites,
                                        std::vector<std::uint8_t> spins,
                                        std::uint8_t ambient_default) {
  if (sites.size() != spins.size())
    throw std::invalid_argument("sites/spins length mismatch");
  for (const Site& s : sites)
    if (s.d != dim) throw std::invalid_argument("site/configuration dimension mismatch");
  std::vector<std::size_t> order(sites.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return lex_less(sites[a], sites[b]); });
  Configuration c;
  c.dim = dim;
  c.ambient_default = ambient_default;
  c.sites.reserve(sites.size());
  c.spins.reserve(spins.size());
  for (std::size_t i : order) {
    if (!c.sites.empty() && c.sites.back() == sites[i])
      throw std::invalid_argument("duplicate site in configuration");
    c.sites.push_back(sites[i]);
    c.spins.push_back(spins[i] ? 1 : 0);
  }
  return c;
}

bool Configuration::has(const Site& s) const {
  auto it = std::lower_bound(sites.begin(), sites.end(), s, SiteLexLess{});
  return it != sites.end() && *it == s;
}

std::uint8_t Configuration::spin_at(const Site& s) const {
  auto it = std::lower_bound(sites.begin(), sites.end(), s, SiteLexLess{});
  if (it != sites.end() && *it == s) return spins[static_cast<std::size_t>(it - sites.begin())];
  return ambient_default;
}

std::uint64_t Configuration::occupied_count() const {
  std::uint64_t n = 0;
  for (std::uint8_t v : spins) n += v;
  return n;
}

Configuration Configuration::restricted_to(const std::vector<Site>& subset) const {
  std::vector<std::uint8_t> out;
  out.reserve(subset.size());
  for (const Site& s : subset) out.push_back(spin_at(s));
  return from_pairs(dim, subset, std::move(out), ambient_default);
}

std::string Configuration::to_json_string() const {
  nlohmann::json j;
  j["d"] = dim;
  auto arr = nlohmann::json::array();
  for (const Site& s : sites) {
    auto row = nlohmann::json::array();
    for (int i = 0; i < s.d; ++i) row.push_back(s.c[i]);
    arr.push_back(row);
  }
  j["sites"] = arr;
  j["spins"] = std::vector<int>(spins.begin(), spins.end());
  j["ambient"] = static_cast<int>(ambient_default);
  return j.dump();
}

Configuration Configuration::from_json_string(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  const int dim = j.at("d").get<int>();
  if (dim < 1 || dim > kMaxDim) throw std::invalid_argument("dimension out of range");
  std::vector<Site> sites;
  for (const auto& row : j.at("sites")) {
    if (!row.is_array() || row.size() != static_cast<std::size_t>(dim))
      throw std::invalid_argument("site entry has wrong arity");
    Site s = Site::origin(dim);
    for (int i = 0; i < dim; ++i) s.c[i] = row[i].get<Coord>();
    sites.push_back(s);
  }
  std::vector<std::uint8_t> spins;
  for (const auto& v : j.at("spins")) spins.push_back(v.get<int>() ? 1 : 0);
  std::uint8_t ambient = 0;
  if (j.contains("ambient")) ambient = j["ambient"].get<int>() ? 1 : 0;
  return from_pairs(dim, std::move(sites), std::move(spins), ambient);
}

Configuration Configuration::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open configuration file: " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  try {
    return from_json_string(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("malformed configuration file " + path + ": " + e.what());
  }
}

}  // namespace jamlim
