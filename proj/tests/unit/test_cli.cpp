#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"

#include "hodge4d/cli.hpp"

using namespace hodge4d;
using namespace hodge4d::cli;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "hodge4d");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(int(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_dir() {
  const auto d = std::filesystem::temp_directory_path() / "hodge4d_cli_test";
  std::filesystem::create_directories(d);
  return d;
}

std::filesystem::path write_file(const std::string& name, const std::string& text) {
  const auto p = temp_dir() / name;
  std::ofstream(p) << text;
  return p;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("config files") {
  std::istringstream in(
      "# comment\n"
      "[solve]\n"
      "nx = 16\n"
      "  scheme=upwind  \n"
      "; another comment\n"
      "[sweep]\n"
      "nx = 64\n"
      "[solve]\n"
      "nx = 24\n");
  const KeyValues kv = parse_config(in, "solve");
  CHECK(kv.at("nx") == "24");
  CHECK(kv.at("scheme") == "upwind");
  CHECK(kv.size() == 2);

  std::istringstream unknown_section("[plot]\nx = 1\n");
  CHECK_THROWS_AS(parse_config(unknown_section, "solve"), UsageError);
  std::istringstream outside("nx = 1\n[solve]\n");
  CHECK_THROWS_AS(parse_config(outside, "solve"), UsageError);
  std::istringstream no_eq("[solve]\nnx 1\n");
  CHECK_THROWS_AS(parse_config(no_eq, "solve"), UsageError);
  std::istringstream missing("[sweep]\nnx = 1\n");
  CHECK_THROWS_AS(parse_config(missing, "solve"), UsageError);
}

TEST_CASE("solver settings from keys") {
  const SolverRun r = solver_run({{"problem", "decay"}, {"scheme", "ExpFitted"}, {"nx", "8"}, {"beta", "0.5"},
                                  {"eps_list", "0.1, 0.05"}, {"floor_check", "false"}},
                                 "sweep");
  CHECK(r.problem == "decay");
  CHECK(r.params.scheme == solver::Scheme::ExpFitted);
  CHECK(r.nx == 8);
  CHECK(r.params.beta == 0.5);
  CHECK(r.eps_list == std::vector<double>{0.1, 0.05});
  CHECK_FALSE(r.floor_check);

  CHECK_THROWS_AS(solver_run({{"eps_list", "0.1"}}, "solve"), UsageError);
  CHECK_THROWS_AS(solver_run({{"colour", "red"}}, "solve"), UsageError);
  CHECK_THROWS_AS(solver_run({{"nx", "ten"}}, "solve"), UsageError);
  CHECK_THROWS_AS(solver_run({{"nx", "10.5"}}, "solve"), UsageError);
  CHECK_THROWS_AS(solver_run({{"scheme", "leapfrog"}}, "solve"), UsageError);
  CHECK_THROWS_AS(solver_run({{"problem", "nonesuch"}}, "solve"), UsageError);
  CHECK_THROWS_AS(parse_double_list("eps_list", "0.1,,0.2"), UsageError);
  CHECK(parse_double_list("eps_list", " ").empty());
}

TEST_CASE("number formatting") {
  CHECK(format_number(0.1) == "0.10000000000000001");
  CHECK(format_number(1.0) == "1");
  CHECK(format_number(-2.5e-7) == "-2.4999999999999999e-07");
  CHECK(parse_rational("alpha", "3/7") == make_rational(3, 7));
  CHECK_THROWS_AS(parse_rational("alpha", "x"), UsageError);
  CHECK(parse_seed("18446744073709551615") == 18446744073709551615ULL);
  CHECK_THROWS_AS(parse_seed("-1"), UsageError);
}

TEST_CASE("verify-tables") {
  const Run ok = run_cli({"verify-tables"});
  CHECK(ok.code == kPass);
  CHECK(ok.out.find("verify-tables: 39/39 checks passed") != std::string::npos);

  // Corrupted fixture: a dropped factor in the scaled column.
  std::string table;
  for (const auto& e : reference_hodge_table()) {
    const std::string scaled = e.input == "dz^dx" ? "dy^dt" : e.scaled_star;
    table += e.input + " | " + e.star + " | " + scaled + "\n";
  }
  const Run bad = run_cli({"verify-tables", "--expected", write_file("table.txt", table).string()});
  CHECK(bad.code == kFailure);
  CHECK(bad.out.find("FAIL  Hodge *_alpha dz^dx") != std::string::npos);
  CHECK(bad.out.find("expected dy^dt, computed alpha dy^dt") != std::string::npos);
  CHECK(bad.out.find("31/32") == std::string::npos);

  const Run malformed = run_cli({"verify-tables", "--expected", write_file("bad.txt", "dx | dy\n").string()});
  CHECK(malformed.code == kUsage);
}

TEST_CASE("identities") {
  const Run a = run_cli({"--json", "identities", "--seed", "42", "--count", "10"});
  const Run b = run_cli({"--json", "identities", "--seed", "42", "--count", "10"});
  CHECK(a.code == kPass);
  CHECK(a.out == b.out);
  CHECK(a.out.find("\"kind\": \"constraint value\"") != std::string::npos);
  CHECK(a.out.find("-grad u = (-1, -1, 0)") != std::string::npos);
  CHECK(a.out.find("NoPotential") != std::string::npos);
  CHECK(run_cli({"identities", "--count", "0"}).code == kUsage);
}

TEST_CASE("expand and boundary") {
  const Run e = run_cli({"expand", "--k", "1", "--alpha", "2", "--eps", "1/3", "--beta", "y,0,1", "--u", "x,y,z"});
  CHECK(e.code == kPass);
  CHECK(e.out.find("[dt]") != std::string::npos);
  CHECK(run_cli({"expand", "--k", "2", "--u", "x"}).code == kUsage);
  CHECK(run_cli({"expand", "--k", "5"}).code == kUsage);
  CHECK(run_cli({"expand", "--k", "0", "--beta", "1,2"}).code == kUsage);
  CHECK(run_cli({"expand", "--k", "0", "--alpha", "x^2 + 1", "--u", "x^3"}).code == kPass);
  CHECK(run_cli({"expand"}).code == kUsage);

  const Run b3 = run_cli({"boundary", "--k", "3"});
  CHECK(b3.code == kPass);
  CHECK(b3.out.find("not applicable") != std::string::npos);
  for (const char* k : {"0", "1", "2"}) CHECK(run_cli({"boundary", "--k", k}).code == kPass);
  CHECK(run_cli({"boundary", "--k", "4"}).code == kUsage);
}

TEST_CASE("solve") {
  const auto cfg = write_file("solve.cfg", "[solve]\nproblem = manufactured\nnx = 16\nnt = 16\nbeta = 0.5\n");
  const Run r = run_cli({"solve", "--config", cfg.string()});
  CHECK(r.code == kPass);
  CHECK(r.out.find("grid 16x16") != std::string::npos);
  // Flags override file values.
  const Run o = run_cli({"solve", "--config", cfg.string(), "--nx", "8"});
  CHECK(o.out.find("grid 8x16") != std::string::npos);
  CHECK(run_cli({"solve", "--config", cfg.string(), "--epsilon", "0"}).code == kUsage);
  CHECK(run_cli({"solve", "--config", (temp_dir() / "missing.cfg").string()}).code == kUsage);
  CHECK(run_cli({"solve", "--config", write_file("u.cfg", "[solve]\ncolour = red\n").string()}).code == kUsage);
}

TEST_CASE("sweep") {
  const auto csv = temp_dir() / "sweep.csv";
  std::filesystem::remove(csv);
  const auto cfg = write_file("sweep.cfg",
                              "[sweep]\nproblem = heat\nscheme = expfitted\nnx = 32\nnt = 64\n"
                              "eps_list = 0.1, 0.05, 0.025\nout = " + csv.string() + "\n");
  const Run r = run_cli({"sweep", "--config", cfg.string()});
  CHECK(r.code == kPass);
  const std::string first = read_file(csv);
  std::istringstream lines(first);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "epsilon,l2_error_T,energy_integral,slope_estimate");
  std::vector<double> err;
  while (std::getline(lines, line) && line.rfind("summary", 0) != 0) {
    std::istringstream row(line);
    std::string eps, e;
    std::getline(row, eps, ',');
    std::getline(row, e, ',');
    err.push_back(std::stod(e));
  }
  REQUIRE(err.size() == 3);
  CHECK(err[1] < err[0]);
  CHECK(err[2] < err[1]);
  CHECK(line.rfind("summary,,,", 0) == 0);
  CHECK(std::filesystem::exists(temp_dir() / "sweep.txt"));

  // Bit-identical on a rerun.
  CHECK(run_cli({"sweep", "--config", cfg.string()}).code == kPass);
  CHECK(read_file(csv) == first);

  CHECK(run_cli({"sweep", "--config", cfg.string(), "--eps-list", ""}).code == kUsage);
  CHECK(run_cli({"sweep", "--config", cfg.string(), "--eps-list", "0.1,0"}).code == kUsage);
  CHECK(run_cli({"sweep", "--config", cfg.string(), "--eps-list", "0.05,0.1"}).code == kUsage);

  const Run floor = run_cli({"sweep", "--problem", "decay", "--nx", "8", "--nt", "8", "--eps-list",
                             "0.1,0.01,0.001,0.0001"});
  CHECK(floor.code == kFailure);
  CHECK(floor.out.find("refine the grid") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run_cli({}).code == kUsage);
  CHECK(run_cli({"frobnicate"}).code == kUsage);
  CHECK(run_cli({"identities", "--seed", "abc"}).code == kUsage);
  CHECK(run_cli({"--help"}).code == kPass);
}
