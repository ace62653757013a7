#include <doctest.h>

#include <fstream>

#include <json.hpp>

#include "jamlim/exact1d.hpp"
#include "util.hpp"

using nlohmann::json;
using namespace jamlim;
using namespace jamlim::testing;

namespace {

const std::string kCli = JAMLIM_CLI_PATH;

CliResult run_cli(const std::string& args) { return run_command(kCli + " " + args); }

json first_json(const std::string& text) { return json::parse(text); }

}  // namespace

TEST_CASE("cli: bounds-1d emits the series values and a 4-decimal line") {
  const CliResult r = run_cli("bounds-1d --order 2 2>/dev/null");
  CHECK(r.exit_code == 0);
  const std::size_t brace = r.out.rfind('}');
  REQUIRE(brace != std::string::npos);
  const json j = json::parse(r.out.substr(0, brace + 1));
  const auto b = exact1d::rho_bounds(2);
  CHECK(j["lower"].get<double>() == b.lower);
  CHECK(j["upper"].get<double>() == b.upper);
  CHECK(j["total_mass"].get<double>() == b.mass_accounted);
  CHECK(j["N"] == 2);
  CHECK(j["manifest"]["version"].is_string());
  const std::string tail = r.out.substr(brace + 1);
  CHECK(tail.find("<= rho <=") != std::string::npos);
}

TEST_CASE("cli: tail-bound trivial value") {
  const CliResult r = run_cli("tail-bound --d 1 --nu 1 --n 0 2>/dev/null");
  CHECK(r.exit_code == 0);
  const json j = first_json(r.out);
  CHECK(j["rows"][0]["n"] == 0);
  CHECK(j["rows"][0]["value"].get<double>() == 1.0);
}

TEST_CASE("cli: sample-window output is byte-identical on replay") {
  const std::string cmd = "sample-window --d 1 --nu 1 --scheme nn-l1 --seed 7 --window -3..3";
  const CliResult a = run_cli(cmd + " 2>/dev/null");
  const CliResult b = run_cli(cmd + " 2>/dev/null");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  const json j = first_json(a.out);
  CHECK(j["configuration"]["sites"].size() == 7);
  CHECK(j["armour"]["size"].get<int>() >= 7);
  CHECK(j["manifest"]["params"]["seed"] == "7");
}

TEST_CASE("cli: hex seeds are parsed and recorded verbatim") {
  const CliResult a = run_cli("park --box 2 --seed 0x10 2>/dev/null");
  const CliResult b = run_cli("park --box 2 --seed 16 2>/dev/null");
  CHECK(a.exit_code == 0);
  const json ja = first_json(a.out);
  const json jb = first_json(b.out);
  CHECK(ja["manifest"]["seed0"] == 16);
  CHECK(ja["manifest"]["params"]["seed"] == "0x10");
  CHECK(jb["manifest"]["params"]["seed"] == "16");
  CHECK(ja["configuration"] == jb["configuration"]);
}

TEST_CASE("cli: park with a full-table scheme occupies everything") {
  const std::string path = "/tmp/jamlim_cli_full.json";
  {
    std::ofstream out(path);
    out << R"({"d":1,"nu":1,"kind":"table","table":["000","001","100","101"]})";
  }
  const CliResult r = run_cli("park --window -4..4 --scheme file:" + path + " 2>/dev/null");
  CHECK(r.exit_code == 0);
  const json j = first_json(r.out);
  CHECK(j["occupied"] == 9);
  std::remove(path.c_str());
}

TEST_CASE("cli: density box mode is independent of --jobs") {
  const std::string base =
      "density --mode box --n 6 --replicas 200 --seed 11 --csv 2>/dev/null";
  const CliResult a = run_cli(base + " --jobs 1");
  const CliResult b = run_cli(base + " --jobs 4");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("n_or_x,mean,std_error,ci_low,ci_high,bound,replicas,seed0\n", 0) == 0);
}

TEST_CASE("cli: ergodic density rows carry no std_error") {
  const CliResult r =
      run_cli("density --mode ergodic --n 50 --seed 3 --csv 2>/dev/null");
  CHECK(r.exit_code == 0);
  // n_or_x,mean,,,,,,seed0
  const auto line_start = r.out.find('\n') + 1;
  const std::string row = r.out.substr(line_start);
  CHECK(row.rfind("50,", 0) == 0);
  CHECK(row.find(",,,,,,") != std::string::npos);
}

TEST_CASE("cli: armour-stats reports per-replica exploration") {
  const CliResult r = run_cli("armour-stats --replicas 3 --seed 5 2>/dev/null");
  CHECK(r.exit_code == 0);
  const json j = first_json(r.out);
  REQUIRE(j["replicas"].size() == 3);
  CHECK(j["replicas"][0]["seed"] == 5);
  CHECK(j["replicas"][2]["seed"] == 7);
  for (const auto& row : j["replicas"]) {
    CHECK(row["armour_size"].get<int>() >= 1);
    CHECK(row["explored"].get<int>() >= 2);
  }
}

TEST_CASE("cli: explicit boundary files are honoured") {
  const std::string path = "/tmp/jamlim_cli_bc.json";
  {
    std::ofstream out(path);
    out << R"({"d":1,"sites":[[-1],[1]],"spins":[1,1]})";
  }
  const CliResult blocked =
      run_cli("park --window 0..0 --bc file:" + path + " 2>/dev/null");
  CHECK(blocked.exit_code == 0);
  CHECK(first_json(blocked.out)["occupied"] == 0);
  const CliResult open = run_cli("park --window 0..0 2>/dev/null");
  CHECK(first_json(open.out)["occupied"] == 1);
  // dimension mismatch in the boundary file is a usage error
  CHECK(run_cli("park --d 2 --window 0..0,0..0 --bc file:" + path + " 2>/dev/null")
            .exit_code == 2);
  std::remove(path.c_str());
}

TEST_CASE("cli: usage errors exit 2") {
  CHECK(run_cli("definitely-not-a-command 2>/dev/null").exit_code == 2);
  CHECK(run_cli("park --box 2 --bogus-flag 2>/dev/null").exit_code == 2);
  CHECK(run_cli("park 2>/dev/null").exit_code == 2);                  // neither window nor box
  CHECK(run_cli("park --box 1 --window 0..1 2>/dev/null").exit_code == 2);
  CHECK(run_cli("park --box 1 --seed zzz 2>/dev/null").exit_code == 2);
  CHECK(run_cli("park --window 3..-3 2>/dev/null").exit_code == 2);
  CHECK(run_cli("park --window 0..3,0..3 2>/dev/null").exit_code == 2);  // d=1 vs 2 axes
  CHECK(run_cli("park --box 1 --scheme file:/nonexistent.json 2>/dev/null").exit_code == 2);
  CHECK(run_cli("density --mode bogus --n 3 2>/dev/null").exit_code == 2);
}

TEST_CASE("cli: malformed scheme files exit 2") {
  const std::string path = "/tmp/jamlim_cli_bad.json";
  {
    std::ofstream out(path);
    out << "{broken";
  }
  CHECK(run_cli("park --box 1 --scheme file:" + path + " 2>/dev/null").exit_code == 2);
  {
    std::ofstream out(path);
    out << R"({"d":2,"nu":1,"kind":"mask","mask":[[0,1]]})";
  }
  // file dimension disagrees with --d default 1
  CHECK(run_cli("park --box 1 --scheme file:" + path + " 2>/dev/null").exit_code == 2);
  std::remove(path.c_str());
}

TEST_CASE("cli: starving the armour budget exits 3") {
  const CliResult r =
      run_cli("sample-window --window -3..3 --seed 1 --budget 2 2>/dev/null");
  CHECK(r.exit_code == 3);
  const CliResult env = run_command("JAMLIM_BUDGET=2 " + kCli +
                                    " sample-window --window -3..3 --seed 1 2>/dev/null");
  CHECK(env.exit_code == 3);
}

TEST_CASE("cli: degenerate correlation statistics exit 4") {
  const std::string path = "/tmp/jamlim_cli_full2.json";
  {
    std::ofstream out(path);
    out << R"({"d":1,"nu":1,"kind":"table","table":["000","001","100","101"]})";
  }
  const CliResult r = run_cli("correlation --x 2 --replicas 50 --scheme file:" + path +
                              " 2>/dev/null");
  CHECK(r.exit_code == 4);
  const json j = first_json(r.out);
  CHECK(j["rows"][0]["degenerate"] == true);
  std::remove(path.c_str());
}

TEST_CASE("cli: discrepancy rows cover every requested radius") {
  const CliResult r = run_cli(
      "discrepancy --m 0 --n 2 --n 4 --replicas 300 --seed 9 --csv 2>/dev/null");
  CHECK(r.exit_code == 0);
  std::size_t lines = 0;
  for (char ch : r.out)
    if (ch == '\n') ++lines;
  CHECK(lines == 3);  // header + two rows
}
