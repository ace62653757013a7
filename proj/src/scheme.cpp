#include "jamlim/scheme.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace jamlim {

namespace {

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  return h;
}

Coord l1_norm(const Site& s) {
  Coord n = 0;
  for (int i = 0; i < s.d; ++i) n += s.c[i] < 0 ? -s.c[i] : s.c[i];
  return n;
}

void check_dims(int dim, Coord nu) {
  if (dim < 1 || dim > kMaxDim) throw std::invalid_argument("dimension out of range");
  if (nu < 1) throw std::invalid_argument("interaction radius must be >= 1");
}

// Cells beyond this make explicit tables impractical.
constexpr std::uint64_t kMaxTableCells = 25;

}  // namespace

std::size_t Window::index_of(const Site& offset) const {
  if (offset.d != dim) throw std::invalid_argument("offset/window dimension mismatch");
  std::size_t idx = 0;
  const std::size_t side = static_cast<std::size_t>(2 * nu + 1);
  for (int i = 0; i < dim; ++i) {
    const Coord v = offset.c[i];
    if (v < -nu || v > nu) throw std::invalid_argument("offset outside window");
    idx = idx * side + static_cast<std::size_t>(v + nu);
  }
  return idx;
}

ParkingScheme ParkingScheme::exclusion_mask(int dim, Coord nu, std::vector<Site> mask) {
  check_dims(dim, nu);
  ParkingScheme s;
  s.dim_ = dim;
  s.nu_ = nu;
  s.kind_ = SchemeKind::Mask;
  for (const Site& m : mask) {
    if (m.d != dim) throw std::invalid_argument("mask site dimension mismatch");
    if (sup_norm(m) > nu) throw std::invalid_argument("mask site outside window");
    if (sup_norm(m) == 0) throw std::invalid_argument("mask must not contain the center");
  }
  std::sort(mask.begin(), mask.end(), SiteLexLess{});
  mask.erase(std::unique(mask.begin(), mask.end()), mask.end());
  s.mask_ = std::move(mask);
  Window probe(dim, nu);
  for (const Site& m : s.mask_) s.mask_indices_.push_back(probe.index_of(m));
  return s;
}

ParkingScheme ParkingScheme::truth_table(int dim, Coord nu, std::set<std::string> table) {
  check_dims(dim, nu);
  const std::uint64_t cells = box_site_count(dim, nu);
  if (cells > kMaxTableCells) throw std::invalid_argument("window too large for a truth table");
  const std::size_t center = static_cast<std::size_t>((cells - 1) / 2);
  std::string zero(static_cast<std::size_t>(cells), '0');
  for (const std::string& row : table) {
    if (row.size() != cells) throw std::invalid_argument("table row has wrong length");
    for (char ch : row)
      if (ch != '0' && ch != '1') throw std::invalid_argument("table row must be a 0/1 bitstring");
    if (row[center] != '0') throw std::invalid_argument("table row must have vacant center");
  }
  if (!table.count(zero))
    throw std::invalid_argument("the all-vacant window must be admissible");
  ParkingScheme s;
  s.dim_ = dim;
  s.nu_ = nu;
  s.kind_ = SchemeKind::Table;
  s.table_ = std::move(table);
  return s;
}

ParkingScheme ParkingScheme::nn_exclusion(int dim, Coord nu, Norm norm) {
  check_dims(dim, nu);
  std::vector<Site> mask;
  for (const Site& m : window_offsets(dim, nu)) {
    if (sup_norm(m) == 0) continue;
    const Coord n = norm == Norm::L1 ? l1_norm(m) : sup_norm(m);
    if (n <= nu) mask.push_back(m);
  }
  return exclusion_mask(dim, nu, std::move(mask));
}

ParkingScheme ParkingScheme::full_table(int dim, Coord nu) {
  check_dims(dim, nu);
  const std::uint64_t cells = box_site_count(dim, nu);
  if (cells > 17) throw std::invalid_argument("window too large to enumerate");
  const std::size_t center = static_cast<std::size_t>((cells - 1) / 2);
  std::set<std::string> table;
  std::string row(static_cast<std::size_t>(cells), '0');
  const std::uint64_t free_cells = cells - 1;
  for (std::uint64_t bits = 0; bits < (1ull << free_cells); ++bits) {
    std::uint64_t b = bits;
    for (std::size_t pos = 0; pos < cells; ++pos) {
      if (pos == center) {
        row[pos] = '0';
        continue;
      }
      row[pos] = (b & 1) ? '1' : '0';
      b >>= 1;
    }
    table.insert(row);
  }
  return truth_table(dim, nu, std::move(table));
}

bool ParkingScheme::admits(const Window& w) const {
  if (w.dim != dim_ || w.nu != nu_) throw std::invalid_argument("window/scheme shape mismatch");
  const std::uint64_t cells = box_site_count(dim_, nu_);
  if (w.values.size() != cells) throw std::invalid_argument("window has wrong cell count");
  if (w.values[w.center_index()] != 0)
    throw std::invalid_argument("admissibility requires a vacant center");
  if (kind_ == SchemeKind::Mask) {
    for (std::size_t idx : mask_indices_)
      if (w.values[idx]) return false;
    return true;
  }
  std::string key(w.values.size(), '0');
  for (std::size_t i = 0; i < w.values.size(); ++i) key[i] = w.values[i] ? '1' : '0';
  return table_.count(key) != 0;
}

bool ParkingScheme::is_decreasing() const {
  if (kind_ == SchemeKind::Mask) return true;
  const std::uint64_t cells = box_site_count(dim_, nu_);
  if (cells - 1 > 20) throw std::invalid_argument("window too large to enumerate");
  // Closed under single downward flips iff closed under the full order.
  for (const std::string& row : table_) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i] != '1') continue;
      std::string down = row;
      down[i] = '0';
      if (!table_.count(down)) return false;
    }
  }
  return true;
}

std::string ParkingScheme::canonical_json() const {
  nlohmann::json j;
  j["d"] = dim_;
  j["nu"] = nu_;
  if (kind_ == SchemeKind::Mask) {
    j["kind"] = "mask";
    auto arr = nlohmann::json::array();
    for (const Site& m : mask_) {
      auto row = nlohmann::json::array();
      for (int i = 0; i < m.d; ++i) row.push_back(m.c[i]);
      arr.push_back(row);
    }
    j["mask"] = arr;
  } else {
    j["kind"] = "table";
    j["table"] = std::vector<std::string>(table_.begin(), table_.end());
  }
  return j.dump();
}

std::string ParkingScheme::hash_hex() const {
  static const char* digits = "0123456789abcdef";
  std::uint64_t h = fnv1a64(canonical_json());
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

ParkingScheme ParkingScheme::from_json_string(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.is_object()) throw std::invalid_argument("scheme file must hold a JSON object");
  const int dim = j.at("d").get<int>();
  const Coord nu = j.at("nu").get<Coord>();
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "mask") {
    std::vector<Site> mask;
    for (const auto& row : j.at("mask")) {
      if (!row.is_array() || row.size() != static_cast<std::size_t>(dim))
        throw std::invalid_argument("mask entry has wrong arity");
      Site m = Site::origin(dim);
      for (int i = 0; i < dim; ++i) m.c[i] = row[i].get<Coord>();
      mask.push_back(m);
    }
    return exclusion_mask(dim, nu, std::move(mask));
  }
  if (kind == "table") {
    std::set<std::string> table;
    for (const auto& row : j.at("table")) table.insert(row.get<std::string>());
    return truth_table(dim, nu, std::move(table));
  }
  throw std::invalid_argument("scheme kind must be \"mask\" or \"table\"");
}

ParkingScheme ParkingScheme::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open scheme file: " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  try {
    return from_json_string(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("malformed scheme file " + path + ": " + e.what());
  }
}

}  // namespace jamlim
