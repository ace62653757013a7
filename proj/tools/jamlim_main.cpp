#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "jamlim/armour.hpp"
#include "jamlim/config.hpp"
#include "jamlim/estimate.hpp"
#include "jamlim/exact1d.hpp"
#include "jamlim/field.hpp"
#include "jamlim/scheme.hpp"
#include "jamlim/simulate.hpp"
#include "jamlim/version.hpp"

using nlohmann::json;
using namespace jamlim;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitDegenerate = 4;

std::uint64_t parse_seed(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty seed");
  std::size_t pos = 0;
  std::uint64_t value = 0;
  try {
    if (text.size() > 2 && (text[0] == '0') && (text[1] == 'x' || text[1] == 'X')) {
      value = std::stoull(text.substr(2), &pos, 16);
      pos += 2;
    } else if (text[0] == '-') {
      const long long v = std::stoll(text, &pos, 10);
      value = static_cast<std::uint64_t>(v);
    } else {
      value = std::stoull(text, &pos, 10);
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("seed must be decimal or 0x-hex: " + text);
  }
  if (pos != text.size())
    throw std::invalid_argument("seed must be decimal or 0x-hex: " + text);
  return value;
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("JAMLIM_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("JAMLIM_BUDGET must be an unsigned integer");
    }
  }
  return kDefaultArmourBudget;
}

Coord parse_coord(const std::string& text) {
  std::size_t pos = 0;
  Coord v = 0;
  try {
    v = std::stoll(text, &pos, 10);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad integer: " + text);
  }
  if (pos != text.size()) throw std::invalid_argument("bad integer: " + text);
  return v;
}

/// Per-axis inclusive ranges "a..b", comma-joined across the d axes.
std::vector<Site> parse_window(const std::string& text, int dim) {
  std::vector<std::pair<Coord, Coord>> ranges;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string part =
        text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    const std::size_t dots = part.find("..", 1);  // skip a leading minus sign
    if (dots == std::string::npos)
      throw std::invalid_argument("window axis must be 'a..b': " + part);
    try {
      const Coord lo = parse_coord(part.substr(0, dots));
      const Coord hi = parse_coord(part.substr(dots + 2));
      if (lo > hi) throw std::invalid_argument("window axis has a > b: " + part);
      ranges.emplace_back(lo, hi);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("window axis must be 'a..b': " + part);
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (static_cast<int>(ranges.size()) != dim)
    throw std::invalid_argument("window has " + std::to_string(ranges.size()) +
                                " axes but d=" + std::to_string(dim));
  unsigned __int128 total = 1;
  for (const auto& [lo, hi] : ranges) {
    total *= static_cast<unsigned __int128>(hi - lo + 1);
    if (total > 20'000'000u) throw std::invalid_argument("window too large");
  }
  std::vector<Site> out;
  out.reserve(static_cast<std::size_t>(total));
  Site cur = Site::origin(dim);
  for (int i = 0; i < dim; ++i) cur.c[i] = ranges[i].first;
  while (true) {
    out.push_back(cur);
    int axis = dim - 1;
    while (axis >= 0) {
      if (cur.c[axis] < ranges[axis].second) {
        ++cur.c[axis];
        for (int j = axis + 1; j < dim; ++j) cur.c[j] = ranges[j].first;
        break;
      }
      --axis;
    }
    if (axis < 0) break;
  }
  return out;
}

Site parse_site(const std::string& text, int dim) {
  std::vector<Coord> coords;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string part =
        text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    try {
      coords.push_back(parse_coord(part));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad site coordinate: " + part);
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (static_cast<int>(coords.size()) != dim)
    throw std::invalid_argument("site has " + std::to_string(coords.size()) +
                                " coordinates but d=" + std::to_string(dim));
  Site s = Site::origin(dim);
  for (int i = 0; i < dim; ++i) s.c[i] = coords[i];
  return s;
}

struct SchemeOpts {
  int d = 1;
  Coord nu = 1;
  std::string scheme = "nn-l1";
};

ParkingScheme load_scheme(const SchemeOpts& o) {
  if (o.scheme == "nn-l1") return ParkingScheme::nn_exclusion(o.d, o.nu, Norm::L1);
  if (o.scheme == "nn-linf") return ParkingScheme::nn_exclusion(o.d, o.nu, Norm::LInf);
  if (o.scheme.rfind("file:", 0) == 0) {
    ParkingScheme s = ParkingScheme::from_file(o.scheme.substr(5));
    if (s.dim() != o.d || s.nu() != o.nu)
      throw std::invalid_argument("scheme file has d=" + std::to_string(s.dim()) +
                                  ", nu=" + std::to_string(s.nu()) +
                                  "; pass matching --d/--nu");
    return s;
  }
  throw std::invalid_argument("scheme must be nn-l1, nn-linf or file:<path>");
}

BoundaryCondition load_bc(const std::string& text, int dim) {
  if (text == "null") return BoundaryCondition::null();
  if (text == "ones") return BoundaryCondition::ones();
  if (text.rfind("file:", 0) == 0) {
    Configuration cfg = Configuration::from_file(text.substr(5));
    if (cfg.dim != dim)
      throw std::invalid_argument("boundary configuration dimension mismatch");
    return BoundaryCondition::explicit_config(std::move(cfg));
  }
  throw std::invalid_argument("bc must be null, ones or file:<path>");
}

json make_manifest(const std::string& command, const std::map<std::string, std::string>& params,
                   std::uint64_t seed0, const std::string& scheme_hash) {
  json m;
  m["command"] = command;
  m["params"] = params;
  m["seed0"] = seed0;
  m["scheme_hash"] = scheme_hash;
  m["version"] = kVersion;
  return m;
}

std::string num(double v) { return json(v).dump(); }

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

json configuration_json(const Configuration& cfg) {
  return json::parse(cfg.to_json_string());
}

void print_configuration_csv(const Configuration& cfg) {
  for (int i = 0; i < cfg.dim; ++i) std::cout << "x" << i + 1 << ",";
  std::cout << "spin\n";
  for (std::size_t k = 0; k < cfg.sites.size(); ++k) {
    for (int i = 0; i < cfg.dim; ++i) std::cout << cfg.sites[k].c[i] << ",";
    std::cout << int(cfg.spins[k]) << "\n";
  }
}

constexpr const char* kSweepHeader =
    "n_or_x,mean,std_error,ci_low,ci_high,bound,replicas,seed0";

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"perfect and finite-volume samplers for lattice exclusion parking"};
  app.require_subcommand(1);

  // shared options, wired per subcommand
  SchemeOpts sch;
  std::string seed_text = "1";
  std::string bc_text = "null";
  std::uint64_t budget = 0;  // resolved after parse: flag > env > default
  bool budget_given = false;
  unsigned jobs = 1;
  bool csv = false;
  std::uint64_t replicas = 1000;

  auto add_scheme_opts = [&](CLI::App* cmd) {
    cmd->add_option("--d", sch.d, "lattice dimension")->capture_default_str();
    cmd->add_option("--nu", sch.nu, "interaction radius")->capture_default_str();
    cmd->add_option("--scheme", sch.scheme, "nn-l1 | nn-linf | file:<path>")
        ->capture_default_str();
  };
  auto add_seed_opt = [&](CLI::App* cmd) {
    cmd->add_option("--seed", seed_text, "seed (decimal or 0x-hex)")->capture_default_str();
  };
  auto add_budget_jobs = [&](CLI::App* cmd) {
    cmd->add_option("--budget", budget, "armour exploration budget (sites)")
        ->each([&](const std::string&) { budget_given = true; });
    cmd->add_option("--jobs", jobs, "parallel replica workers")->capture_default_str();
  };
  auto add_csv = [&](CLI::App* cmd) {
    cmd->add_flag("--csv", csv, "emit CSV instead of JSON");
  };

  // park
  auto* cmd_park = app.add_subcommand("park", "run the parking process on a finite set");
  std::string window_text;
  std::optional<Coord> box_n;
  add_scheme_opts(cmd_park);
  add_seed_opt(cmd_park);
  add_csv(cmd_park);
  cmd_park->add_option("--window", window_text, "per-axis ranges a..b, comma-joined");
  cmd_park->add_option("--box", box_n, "target the centered box of this radius");
  cmd_park->add_option("--bc", bc_text, "null | ones | file:<path>")->capture_default_str();

  // sample-window
  auto* cmd_sample =
      app.add_subcommand("sample-window", "perfect sample of the limit on a window");
  add_scheme_opts(cmd_sample);
  add_seed_opt(cmd_sample);
  add_budget_jobs(cmd_sample);
  add_csv(cmd_sample);
  cmd_sample->add_option("--window", window_text, "per-axis ranges a..b, comma-joined")
      ->required();

  // armour-stats
  auto* cmd_armour = app.add_subcommand("armour-stats", "armour sizes over replicas");
  add_scheme_opts(cmd_armour);
  add_seed_opt(cmd_armour);
  add_budget_jobs(cmd_armour);
  add_csv(cmd_armour);
  cmd_armour->add_option("--replicas", replicas, "number of replicas")->capture_default_str();
  cmd_armour->add_option("--window", window_text,
                         "seed set as per-axis ranges (default: the origin)");

  // density
  auto* cmd_density = app.add_subcommand("density", "occupation density estimators");
  std::string mode = "perfect";
  std::vector<Coord> n_values;
  add_scheme_opts(cmd_density);
  add_seed_opt(cmd_density);
  add_budget_jobs(cmd_density);
  add_csv(cmd_density);
  cmd_density->add_option("--mode", mode, "box | ergodic | perfect")->capture_default_str();
  cmd_density->add_option("--n", n_values, "box radii (repeatable)");
  cmd_density->add_option("--replicas", replicas, "number of replicas")->capture_default_str();
  cmd_density->add_option("--bc", bc_text, "null | ones | file:<path> (box mode)")
      ->capture_default_str();

  // correlation
  auto* cmd_corr = app.add_subcommand("correlation", "pair correlation of the limit");
  std::vector<std::string> x_texts;
  add_scheme_opts(cmd_corr);
  add_seed_opt(cmd_corr);
  add_budget_jobs(cmd_corr);
  add_csv(cmd_corr);
  cmd_corr->add_option("--x", x_texts, "site coordinates, e.g. 12 or 3,4 (repeatable)")
      ->required();
  cmd_corr->add_option("--replicas", replicas, "number of replicas")->capture_default_str();

  // bounds-1d
  auto* cmd_bounds = app.add_subcommand("bounds-1d", "series bounds on the 1D density");
  int order = 2;
  cmd_bounds->add_option("--order", order, "truncation order")->capture_default_str();

  // tail-bound
  auto* cmd_tail = app.add_subcommand("tail-bound", "armour escape-probability bound");
  std::vector<std::int64_t> tail_ns;
  add_csv(cmd_tail);
  cmd_tail->add_option("--d", sch.d, "lattice dimension")->capture_default_str();
  cmd_tail->add_option("--nu", sch.nu, "interaction radius")->capture_default_str();
  cmd_tail->add_option("--n", tail_ns, "path lengths (repeatable)")->required();

  // discrepancy
  auto* cmd_disc =
      app.add_subcommand("discrepancy", "local-event gap between box and limit");
  Coord disc_m = 0;
  std::vector<Coord> disc_ns;
  std::string event = "origin-occupied";
  add_scheme_opts(cmd_disc);
  add_seed_opt(cmd_disc);
  add_budget_jobs(cmd_disc);
  add_csv(cmd_disc);
  cmd_disc->add_option("--m", disc_m, "window radius of the event")->capture_default_str();
  cmd_disc->add_option("--n", disc_ns, "box radii (repeatable)")->required();
  cmd_disc->add_option("--event", event, "origin-occupied | all-true | table:<path>")
      ->capture_default_str();
  cmd_disc->add_option("--replicas", replicas, "number of replicas")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (!budget_given) budget = default_budget();
    const std::uint64_t seed0 = parse_seed(seed_text);

    if (cmd_park->parsed()) {
      if (window_text.empty() == !box_n.has_value())
        throw std::invalid_argument("pass exactly one of --window or --box");
      const ParkingScheme scheme = load_scheme(sch);
      const BoundaryCondition bc = load_bc(bc_text, sch.d);
      UniformField field(seed0, sch.d);
      const std::vector<Site> target =
          box_n ? Box::centered(sch.d, *box_n).sites() : parse_window(window_text, sch.d);
      const Configuration cfg = park(field, target, scheme, bc);
      if (csv) {
        print_configuration_csv(cfg);
        return kExitOk;
      }
      std::map<std::string, std::string> params = {
          {"d", std::to_string(sch.d)},   {"nu", std::to_string(sch.nu)},
          {"scheme", sch.scheme},         {"seed", seed_text},
          {"bc", bc_text}};
      if (box_n) params["box"] = std::to_string(*box_n);
      if (!window_text.empty()) params["window"] = window_text;
      json out;
      out["manifest"] = make_manifest("park", params, seed0, scheme.hash_hex());
      out["configuration"] = configuration_json(cfg);
      out["occupied"] = cfg.occupied_count();
      out["bc"] = bc.describe();
      if (box_n) out["box_n"] = *box_n;
      print_json(out);
      return kExitOk;
    }

    if (cmd_sample->parsed()) {
      const ParkingScheme scheme = load_scheme(sch);
      UniformField field(seed0, sch.d);
      Armour a;
      const Configuration cfg =
          perfect_window(field, parse_window(window_text, sch.d), scheme, budget, &a);
      if (csv) {
        print_configuration_csv(cfg);
        return kExitOk;
      }
      json out;
      out["manifest"] = make_manifest(
          "sample-window",
          {{"d", std::to_string(sch.d)},
           {"nu", std::to_string(sch.nu)},
           {"scheme", sch.scheme},
           {"seed", seed_text},
           {"window", window_text},
           {"budget", std::to_string(budget)}},
          seed0, scheme.hash_hex());
      out["configuration"] = configuration_json(cfg);
      out["armour"] = {{"size", a.sites.size()},
                       {"max_radius_seen", a.max_radius_seen},
                       {"explored", a.explored}};
      print_json(out);
      return kExitOk;
    }

    if (cmd_armour->parsed()) {
      const std::vector<Site> seeds = window_text.empty()
                                          ? std::vector<Site>{Site::origin(sch.d)}
                                          : parse_window(window_text, sch.d);
      json rows = json::array();
      std::string csv_rows;
      for (std::uint64_t r = 0; r < replicas; ++r) {
        UniformField field(seed0 + r, sch.d);
        const Armour a = armour(field, seeds, sch.nu, budget);
        if (csv) {
          csv_rows += std::to_string(seed0 + r) + "," + std::to_string(a.sites.size()) +
                      "," + std::to_string(a.max_radius_seen) + "," +
                      std::to_string(a.explored) + "\n";
        } else {
          rows.push_back({{"seed", seed0 + r},
                          {"armour_size", a.sites.size()},
                          {"max_radius_seen", a.max_radius_seen},
                          {"explored", a.explored}});
        }
      }
      if (csv) {
        std::cout << "seed,armour_size,max_radius_seen,explored\n" << csv_rows;
        return kExitOk;
      }
      json out;
      out["manifest"] = make_manifest(
          "armour-stats",
          {{"d", std::to_string(sch.d)},
           {"nu", std::to_string(sch.nu)},
           {"seed", seed_text},
           {"replicas", std::to_string(replicas)},
           {"budget", std::to_string(budget)},
           {"window", window_text.empty() ? "origin" : window_text}},
          seed0, "");
      out["replicas"] = rows;
      print_json(out);
      return kExitOk;
    }

    if (cmd_density->parsed()) {
      const ParkingScheme scheme = load_scheme(sch);
      std::map<std::string, std::string> params = {
          {"d", std::to_string(sch.d)},      {"nu", std::to_string(sch.nu)},
          {"scheme", sch.scheme},            {"seed", seed_text},
          {"mode", mode},                    {"replicas", std::to_string(replicas)},
          {"budget", std::to_string(budget)}, {"jobs", std::to_string(jobs)}};
      json rows = json::array();
      std::string csv_body;
      if (mode == "box") {
        if (n_values.empty()) throw std::invalid_argument("box mode needs --n");
        const BoundaryCondition bc = load_bc(bc_text, sch.d);
        params["bc"] = bc_text;
        for (Coord n : n_values) {
          const Estimate e = density_box(seed0, replicas, n, scheme, bc, jobs);
          rows.push_back({{"mode", "box"},
                          {"n", n},
                          {"mean", e.mean},
                          {"std_error", e.std_error},
                          {"ci_low", e.ci_low},
                          {"ci_high", e.ci_high},
                          {"replicas", e.replicas}});
          csv_body += std::to_string(n) + "," + num(e.mean) + "," + num(e.std_error) +
                      "," + num(e.ci_low) + "," + num(e.ci_high) + ",," +
                      std::to_string(e.replicas) + "," + std::to_string(seed0) + "\n";
        }
      } else if (mode == "ergodic") {
        if (n_values.empty()) throw std::invalid_argument("ergodic mode needs --n");
        for (Coord n : n_values) {
          const double rho = density_ergodic(seed0, n, scheme, budget);
          rows.push_back({{"mode", "ergodic"}, {"n", n}, {"density", rho}});
          csv_body += std::to_string(n) + "," + num(rho) + ",,,,,," +
                      std::to_string(seed0) + "\n";
        }
      } else if (mode == "perfect") {
        const Estimate e = density_perfect(seed0, replicas, scheme, budget, jobs);
        rows.push_back({{"mode", "perfect"},
                        {"mean", e.mean},
                        {"std_error", e.std_error},
                        {"ci_low", e.ci_low},
                        {"ci_high", e.ci_high},
                        {"replicas", e.replicas}});
        csv_body += "," + num(e.mean) + "," + num(e.std_error) + "," + num(e.ci_low) +
                    "," + num(e.ci_high) + ",," + std::to_string(e.replicas) + "," +
                    std::to_string(seed0) + "\n";
      } else {
        throw std::invalid_argument("mode must be box, ergodic or perfect");
      }
      if (csv) {
        std::cout << kSweepHeader << "\n" << csv_body;
        return kExitOk;
      }
      json out;
      out["manifest"] = make_manifest("density", params, seed0, scheme.hash_hex());
      out["rows"] = rows;
      print_json(out);
      return kExitOk;
    }

    if (cmd_corr->parsed()) {
      const ParkingScheme scheme = load_scheme(sch);
      json rows = json::array();
      std::string csv_body;
      bool any_degenerate = false;
      for (const std::string& xt : x_texts) {
        const Site x = parse_site(xt, sch.d);
        const CorrelationReport rep = correlation(seed0, replicas, x, scheme, budget, jobs);
        any_degenerate = any_degenerate || rep.degenerate;
        json row;
        json coords = json::array();
        for (int i = 0; i < x.d; ++i) coords.push_back(x.c[i]);
        row["x"] = coords;
        row["abs_x"] = sup_norm(x);
        row["cov_hat"] = rep.cov_hat;
        row["sigma0_sq_hat"] = rep.sigma0_sq_hat;
        row["sigmax_sq_hat"] = rep.sigmax_sq_hat;
        row["degenerate"] = rep.degenerate;
        row["replicas"] = rep.replicas;
        row["counts"] = {{"n11", rep.n11}, {"n10", rep.n10}, {"n01", rep.n01}, {"n00", rep.n00}};
        if (!rep.degenerate) {
          row["rho_hat"] = rep.rho_hat;
          row["rho_std_error"] = rep.rho_std_error;
        }
        if (rep.bound_applicable)
          row["bound"] = rep.bound;
        else
          row["bound"] = nullptr;
        rows.push_back(row);
        csv_body += std::to_string(sup_norm(x)) + ",";
        if (!rep.degenerate) {
          const double lo = rep.rho_hat - 1.96 * rep.rho_std_error;
          const double hi = rep.rho_hat + 1.96 * rep.rho_std_error;
          csv_body += num(rep.rho_hat) + "," + num(rep.rho_std_error) + "," + num(lo) +
                      "," + num(hi) + ",";
        } else {
          csv_body += ",,,,";
        }
        csv_body += (rep.bound_applicable ? num(rep.bound) : std::string()) + "," +
                    std::to_string(rep.replicas) + "," + std::to_string(seed0) + "\n";
      }
      if (csv) {
        std::cout << kSweepHeader << "\n" << csv_body;
      } else {
        json out;
        out["manifest"] = make_manifest(
            "correlation",
            {{"d", std::to_string(sch.d)},
             {"nu", std::to_string(sch.nu)},
             {"scheme", sch.scheme},
             {"seed", seed_text},
             {"replicas", std::to_string(replicas)},
             {"budget", std::to_string(budget)},
             {"jobs", std::to_string(jobs)}},
            seed0, scheme.hash_hex());
        out["rows"] = rows;
        print_json(out);
      }
      return any_degenerate ? kExitDegenerate : kExitOk;
    }

    if (cmd_bounds->parsed()) {
      const exact1d::SeriesBounds b = exact1d::rho_bounds(order);
      json out;
      out["manifest"] =
          make_manifest("bounds-1d", {{"order", std::to_string(order)}}, 0, "");
      out["N"] = b.order;
      out["lower"] = b.lower;
      out["upper"] = b.upper;
      out["total_mass"] = b.mass_accounted;
      print_json(out);
      char line[128];
      std::snprintf(line, sizeof(line), "%.4f <= rho <= %.4f (order %d)\n", b.lower,
                    b.upper, b.order);
      std::cout << line;
      return kExitOk;
    }

    if (cmd_tail->parsed()) {
      json rows = json::array();
      std::string csv_body;
      for (std::int64_t n : tail_ns) {
        const double v = tail_bound(n, sch.d, sch.nu);
        rows.push_back({{"n", n}, {"value", v}});
        csv_body += std::to_string(n) + ",,,,," + num(v) + ",,\n";
      }
      if (csv) {
        std::cout << kSweepHeader << "\n" << csv_body;
        return kExitOk;
      }
      json out;
      out["manifest"] = make_manifest(
          "tail-bound",
          {{"d", std::to_string(sch.d)}, {"nu", std::to_string(sch.nu)}}, 0, "");
      out["rows"] = rows;
      print_json(out);
      return kExitOk;
    }

    if (cmd_disc->parsed()) {
      const ParkingScheme scheme = load_scheme(sch);
      WindowPredicate pred;
      if (event == "origin-occupied") {
        pred = event_origin_occupied();
      } else if (event == "all-true") {
        pred = event_all_true();
      } else if (event.rfind("table:", 0) == 0) {
        std::ifstream in(event.substr(6));
        if (!in) throw std::invalid_argument("cannot open event table file");
        json table_spec = json::parse(in, nullptr, true);
        std::set<std::string> accepted;
        for (const auto& row : table_spec.at("accepted")) accepted.insert(row.get<std::string>());
        pred = event_table(sch.d, disc_m, std::move(accepted));
      } else {
        throw std::invalid_argument("event must be origin-occupied, all-true or table:<path>");
      }
      const auto table =
          local_discrepancy(seed0, replicas, disc_m, pred, disc_ns, scheme, budget, jobs);
      json rows = json::array();
      std::string csv_body;
      for (const auto& row : table) {
        rows.push_back({{"n", row.n},
                        {"mu_limit", row.mu_limit},
                        {"mu_n", row.mu_n},
                        {"diff", row.diff},
                        {"abs_diff", row.abs_diff},
                        {"std_error", row.std_error},
                        {"ci_low", row.ci_low},
                        {"ci_high", row.ci_high},
                        {"bound", row.bound},
                        {"replicas", row.replicas}});
        csv_body += std::to_string(row.n) + "," + num(row.abs_diff) + "," +
                    num(row.std_error) + "," + num(row.ci_low) + "," + num(row.ci_high) +
                    "," + num(row.bound) + "," + std::to_string(row.replicas) + "," +
                    std::to_string(seed0) + "\n";
      }
      if (csv) {
        std::cout << kSweepHeader << "\n" << csv_body;
        return kExitOk;
      }
      json out;
      out["manifest"] = make_manifest(
          "discrepancy",
          {{"d", std::to_string(sch.d)},
           {"nu", std::to_string(sch.nu)},
           {"scheme", sch.scheme},
           {"seed", seed_text},
           {"m", std::to_string(disc_m)},
           {"event", event},
           {"replicas", std::to_string(replicas)},
           {"budget", std::to_string(budget)},
           {"jobs", std::to_string(jobs)}},
          seed0, scheme.hash_hex());
      out["rows"] = rows;
      print_json(out);
      return kExitOk;
    }

    throw std::invalid_argument("no subcommand selected");
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
