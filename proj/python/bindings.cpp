#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "jamlim/armour.hpp"
#include "jamlim/config.hpp"
#include "jamlim/estimate.hpp"
#include "jamlim/exact1d.hpp"
#include "jamlim/field.hpp"
#include "jamlim/scheme.hpp"
#include "jamlim/simulate.hpp"
#include "jamlim/version.hpp"

namespace py = pybind11;
using namespace jamlim;

namespace {

Site site_from_tuple(const std::vector<Coord>& coords) {
  if (coords.empty() || coords.size() > static_cast<std::size_t>(kMaxDim))
    throw std::invalid_argument("site dimension out of range");
  Site s = Site::origin(static_cast<int>(coords.size()));
  for (std::size_t i = 0; i < coords.size(); ++i) s.c[i] = coords[i];
  return s;
}

std::vector<Site> sites_from_tuples(const std::vector<std::vector<Coord>>& coords) {
  std::vector<Site> out;
  out.reserve(coords.size());
  for (const auto& c : coords) out.push_back(site_from_tuple(c));
  return out;
}

py::tuple site_to_tuple(const Site& s) {
  py::tuple t(s.d);
  for (int i = 0; i < s.d; ++i) t[i] = s.c[i];
  return t;
}

BoundaryCondition bc_from_string(const std::string& text) {
  if (text == "null") return BoundaryCondition::null();
  if (text == "ones") return BoundaryCondition::ones();
  throw std::invalid_argument("bc must be 'null' or 'ones' (or pass a BoundaryCondition)");
}

WindowPredicate event_by_name(const std::string& name) {
  if (name == "origin-occupied") return event_origin_occupied();
  if (name == "all-true") return event_all_true();
  throw std::invalid_argument("event must be 'origin-occupied' or 'all-true'");
}

}  // namespace

PYBIND11_MODULE(_jamlim, m) {
  m.doc() = "perfect and finite-volume samplers for lattice exclusion parking";
  m.attr("__version__") = kVersion;
  m.attr("DEFAULT_BUDGET") = kDefaultArmourBudget;

  py::register_exception<BudgetExceeded>(m, "BudgetExceededError", PyExc_RuntimeError);

  py::class_<UniformField>(m, "UniformField")
      .def(py::init<std::uint64_t, int>(), py::arg("seed"), py::arg("d"))
      .def_property_readonly("seed", &UniformField::seed)
      .def_property_readonly("d", &UniformField::dim)
      .def("value",
           [](const UniformField& f, const std::vector<Coord>& x) {
             return f.value(site_from_tuple(x));
           },
           py::arg("x"))
      .def("less",
           [](const UniformField& f, const std::vector<Coord>& x,
              const std::vector<Coord>& y) {
             return field_less(f, site_from_tuple(x), site_from_tuple(y));
           },
           py::arg("x"), py::arg("y"));

  py::class_<ParkingScheme>(m, "ParkingScheme")
      .def_static(
          "nn_exclusion",
          [](int d, Coord nu, const std::string& norm) {
            if (norm == "l1") return ParkingScheme::nn_exclusion(d, nu, Norm::L1);
            if (norm == "linf") return ParkingScheme::nn_exclusion(d, nu, Norm::LInf);
            throw std::invalid_argument("norm must be 'l1' or 'linf'");
          },
          py::arg("d"), py::arg("nu") = 1, py::arg("norm") = "l1")
      .def_static("full_table", &ParkingScheme::full_table, py::arg("d"), py::arg("nu") = 1)
      .def_static("from_json", &ParkingScheme::from_json_string, py::arg("text"))
      .def_static("from_file", &ParkingScheme::from_file, py::arg("path"))
      .def_static(
          "truth_table",
          [](int d, Coord nu, const std::vector<std::string>& rows) {
            return ParkingScheme::truth_table(d, nu,
                                              std::set<std::string>(rows.begin(), rows.end()));
          },
          py::arg("d"), py::arg("nu"), py::arg("rows"))
      .def_property_readonly("d", &ParkingScheme::dim)
      .def_property_readonly("nu", &ParkingScheme::nu)
      .def_property_readonly("kind",
                             [](const ParkingScheme& s) {
                               return s.kind() == SchemeKind::Mask ? "mask" : "table";
                             })
      .def("admits",
           [](const ParkingScheme& s, const std::vector<std::uint8_t>& cells) {
             return s.admits(Window(s.dim(), s.nu(), cells));
           },
           py::arg("window"))
      .def("is_decreasing", &ParkingScheme::is_decreasing)
      .def("to_json", &ParkingScheme::canonical_json)
      .def("hash_hex", &ParkingScheme::hash_hex);

  py::class_<Configuration>(m, "Configuration")
      .def_property_readonly("d", [](const Configuration& c) { return c.dim; })
      .def_property_readonly("sites",
                             [](const Configuration& c) {
                               py::list out;
                               for (const Site& s : c.sites) out.append(site_to_tuple(s));
                               return out;
                             })
      .def_property_readonly("spins",
                             [](const Configuration& c) {
                               return std::vector<int>(c.spins.begin(), c.spins.end());
                             })
      .def("spin_at",
           [](const Configuration& c, const std::vector<Coord>& x) {
             return static_cast<int>(c.spin_at(site_from_tuple(x)));
           },
           py::arg("x"))
      .def("occupied_count", &Configuration::occupied_count)
      .def("__len__", [](const Configuration& c) { return c.size(); })
      .def("to_json", &Configuration::to_json_string)
      .def_static("from_json", &Configuration::from_json_string, py::arg("text"))
      .def("__eq__", [](const Configuration& a, const Configuration& b) { return a == b; });

  py::class_<BoundaryCondition>(m, "BoundaryCondition")
      .def_static("null", &BoundaryCondition::null)
      .def_static("ones", &BoundaryCondition::ones)
      .def_static("explicit_config", &BoundaryCondition::explicit_config, py::arg("config"))
      .def_property_readonly("kind", &BoundaryCondition::describe);

  py::class_<Armour>(m, "Armour")
      .def_property_readonly("sites",
                             [](const Armour& a) {
                               py::list out;
                               for (const Site& s : a.sites) out.append(site_to_tuple(s));
                               return out;
                             })
      .def_property_readonly("size", [](const Armour& a) { return a.sites.size(); })
      .def_readonly("max_radius_seen", &Armour::max_radius_seen)
      .def_readonly("explored", &Armour::explored)
      .def("containment_radius", &Armour::containment_radius);

  py::class_<Estimate>(m, "Estimate")
      .def_readonly("mean", &Estimate::mean)
      .def_readonly("std_error", &Estimate::std_error)
      .def_readonly("replicas", &Estimate::replicas)
      .def_readonly("ci_low", &Estimate::ci_low)
      .def_readonly("ci_high", &Estimate::ci_high)
      .def("__repr__", [](const Estimate& e) {
        return "Estimate(mean=" + std::to_string(e.mean) +
               ", std_error=" + std::to_string(e.std_error) +
               ", replicas=" + std::to_string(e.replicas) + ")";
      });

  py::class_<CorrelationReport>(m, "CorrelationReport")
      .def_property_readonly("x", [](const CorrelationReport& r) { return site_to_tuple(r.x); })
      .def_readonly("cov_hat", &CorrelationReport::cov_hat)
      .def_readonly("sigma0_sq_hat", &CorrelationReport::sigma0_sq_hat)
      .def_readonly("sigmax_sq_hat", &CorrelationReport::sigmax_sq_hat)
      .def_readonly("rho_hat", &CorrelationReport::rho_hat)
      .def_readonly("rho_std_error", &CorrelationReport::rho_std_error)
      .def_readonly("bound", &CorrelationReport::bound)
      .def_readonly("bound_applicable", &CorrelationReport::bound_applicable)
      .def_readonly("degenerate", &CorrelationReport::degenerate)
      .def_readonly("replicas", &CorrelationReport::replicas)
      .def_readonly("n11", &CorrelationReport::n11)
      .def_readonly("n10", &CorrelationReport::n10)
      .def_readonly("n01", &CorrelationReport::n01)
      .def_readonly("n00", &CorrelationReport::n00);

  py::class_<DiscrepancyRow>(m, "DiscrepancyRow")
      .def_readonly("n", &DiscrepancyRow::n)
      .def_readonly("mu_limit", &DiscrepancyRow::mu_limit)
      .def_readonly("mu_n", &DiscrepancyRow::mu_n)
      .def_readonly("diff", &DiscrepancyRow::diff)
      .def_readonly("abs_diff", &DiscrepancyRow::abs_diff)
      .def_readonly("std_error", &DiscrepancyRow::std_error)
      .def_readonly("ci_low", &DiscrepancyRow::ci_low)
      .def_readonly("ci_high", &DiscrepancyRow::ci_high)
      .def_readonly("bound", &DiscrepancyRow::bound)
      .def_readonly("replicas", &DiscrepancyRow::replicas);

  m.def(
      "park",
      [](const UniformField& f, const std::vector<std::vector<Coord>>& target,
         const ParkingScheme& s, const std::string& bc) {
        return park(f, sites_from_tuples(target), s, bc_from_string(bc));
      },
      py::arg("field"), py::arg("target"), py::arg("scheme"), py::arg("bc") = "null");
  m.def(
      "park",
      [](const UniformField& f, const std::vector<std::vector<Coord>>& target,
         const ParkingScheme& s, const BoundaryCondition& bc) {
        return park(f, sites_from_tuples(target), s, bc);
      },
      py::arg("field"), py::arg("target"), py::arg("scheme"), py::arg("bc"));
  m.def(
      "park_box",
      [](const UniformField& f, Coord n, const ParkingScheme& s, const std::string& bc) {
        return park_box(f, n, s, bc_from_string(bc));
      },
      py::arg("field"), py::arg("n"), py::arg("scheme"), py::arg("bc") = "null");
  m.def(
      "park_box",
      [](const UniformField& f, Coord n, const ParkingScheme& s, const BoundaryCondition& bc) {
        return park_box(f, n, s, bc);
      },
      py::arg("field"), py::arg("n"), py::arg("scheme"), py::arg("bc"));
  m.def(
      "armour",
      [](const UniformField& f, const std::vector<std::vector<Coord>>& seeds, Coord nu,
         std::uint64_t budget) { return armour(f, sites_from_tuples(seeds), nu, budget); },
      py::arg("field"), py::arg("seeds"), py::arg("nu"),
      py::arg("budget") = kDefaultArmourBudget);
  m.def(
      "perfect_site",
      [](const UniformField& f, const std::vector<Coord>& x, const ParkingScheme& s,
         std::uint64_t budget) { return perfect_site(f, site_from_tuple(x), s, budget); },
      py::arg("field"), py::arg("x"), py::arg("scheme"),
      py::arg("budget") = kDefaultArmourBudget);
  m.def(
      "perfect_window",
      [](const UniformField& f, const std::vector<std::vector<Coord>>& window,
         const ParkingScheme& s, std::uint64_t budget) {
        return perfect_window(f, sites_from_tuples(window), s, budget);
      },
      py::arg("field"), py::arg("window"), py::arg("scheme"),
      py::arg("budget") = kDefaultArmourBudget);
  m.def("box_sites", [](int d, Coord radius) {
    py::list out;
    for (const Site& s : Box::centered(d, radius).sites()) out.append(site_to_tuple(s));
    return out;
  }, py::arg("d"), py::arg("radius"));

  m.def(
      "density_box",
      [](std::uint64_t seed0, std::uint64_t replicas, Coord n, const ParkingScheme& s,
         const std::string& bc, unsigned jobs) {
        return density_box(seed0, replicas, n, s, bc_from_string(bc), jobs);
      },
      py::arg("seed0"), py::arg("replicas"), py::arg("n"), py::arg("scheme"),
      py::arg("bc") = "null", py::arg("jobs") = 1);
  m.def("density_ergodic", &density_ergodic, py::arg("seed"), py::arg("n"),
        py::arg("scheme"), py::arg("budget") = kDefaultArmourBudget);
  m.def("density_perfect", &density_perfect, py::arg("seed0"), py::arg("replicas"),
        py::arg("scheme"), py::arg("budget") = kDefaultArmourBudget, py::arg("jobs") = 1);
  m.def(
      "correlation",
      [](std::uint64_t seed0, std::uint64_t replicas, const std::vector<Coord>& x,
         const ParkingScheme& s, std::uint64_t budget, unsigned jobs) {
        return correlation(seed0, replicas, site_from_tuple(x), s, budget, jobs);
      },
      py::arg("seed0"), py::arg("replicas"), py::arg("x"), py::arg("scheme"),
      py::arg("budget") = kDefaultArmourBudget, py::arg("jobs") = 1);
  m.def("tail_bound", &tail_bound, py::arg("n"), py::arg("d"), py::arg("nu"));
  m.def("discrepancy_bound", &discrepancy_bound, py::arg("n"), py::arg("m"), py::arg("d"),
        py::arg("nu"));
  m.def(
      "local_discrepancy",
      [](std::uint64_t seed0, std::uint64_t replicas, Coord m_radius, const std::string& event,
         const std::vector<Coord>& box_radii, const ParkingScheme& s, std::uint64_t budget,
         unsigned jobs) {
        return local_discrepancy(seed0, replicas, m_radius, event_by_name(event), box_radii,
                                 s, budget, jobs);
      },
      py::arg("seed0"), py::arg("replicas"), py::arg("m"), py::arg("event"),
      py::arg("box_radii"), py::arg("scheme"), py::arg("budget") = kDefaultArmourBudget,
      py::arg("jobs") = 1);

  auto x1d = m.def_submodule("exact1d", "exact series for 1D nearest-neighbour exclusion");
  py::class_<exact1d::SeriesBounds>(x1d, "SeriesBounds")
      .def_readonly("order", &exact1d::SeriesBounds::order)
      .def_readonly("lower", &exact1d::SeriesBounds::lower)
      .def_readonly("upper", &exact1d::SeriesBounds::upper)
      .def_readonly("mass_accounted", &exact1d::SeriesBounds::mass_accounted);
  x1d.def("p", &exact1d::p, py::arg("i"), py::arg("j"));
  x1d.def("rho_bounds", &exact1d::rho_bounds, py::arg("order"));
  x1d.def("total_mass", &exact1d::total_mass, py::arg("order"));
  x1d.def("brute_force_rho_segment", &exact1d::brute_force_rho_segment, py::arg("k"));
}
