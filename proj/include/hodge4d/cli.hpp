#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hodge4d/material.hpp"
#include "hodge4d/sweep.hpp"
#include "hodge4d/tables.hpp"

namespace hodge4d::cli {

enum ExitCode : int { kPass = 0, kFailure = 1, kUsage = 2 };

/// Bad flags, config files or parameter values; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Reports ------------------------------------------------------------------------

enum class CheckKind { Check, ConstraintValue, Info };

struct Check {
  std::string name;    // names the identity, cell or quantity
  std::string target;  // what the check reproduces, e.g. "Hodge star table, *_alpha column"
  CheckKind kind = CheckKind::Check;
  bool pass = true;    // ignored unless kind == Check
  std::string detail;
};

struct Report {
  std::string command;
  std::vector<Check> checks;
  std::vector<std::string> notes;  // free text printed after the checks

  void add(Check c) { checks.push_back(std::move(c)); }
  int failures() const;
  bool pass() const { return failures() == 0; }
  void print_text(std::ostream& os) const;
  std::string to_json() const;
};

// Configuration ------------------------------------------------------------------

/// key -> value for one section of a flat key=value file.
using KeyValues = std::map<std::string, std::string>;

/// Parses `[section]` headers, `key = value` lines and `#`/`;` comments.
/// Returns the keys of the requested section (later lines win). Throws
/// UsageError on syntax errors, keys outside a section, unknown section names
/// or a missing requested section.
KeyValues parse_config(std::istream& in, const std::string& section, const std::string& source = "<config>");
KeyValues load_config(const std::filesystem::path& file, const std::string& section);

/// Solver run settings shared by `solve` and `sweep`.
struct SolverRun {
  std::string problem = "manufactured";
  solver::ProblemParams params;
  int nx = 32, nt = 32;
  std::vector<double> eps_list;  // sweep only
  std::optional<std::string> out;  // sweep only
  bool floor_check = true;
  double max_floor_ratio = 0.1;
};

/// Builds solver settings from key=value pairs. Unknown keys, keys not
/// allowed for the command and unparsable values throw UsageError.
SolverRun solver_run(const KeyValues& kv, const std::string& command);

double parse_double(const std::string& key, const std::string& text);
int parse_int(const std::string& key, const std::string& text);
std::vector<double> parse_double_list(const std::string& key, const std::string& text);
std::uint64_t parse_seed(const std::string& text);

/// Comma-separated polynomial components, e.g. "y, x*z, 1".
std::vector<PolyField> parse_poly_list(const std::string& key, const std::string& text);
Rational parse_rational(const std::string& key, const std::string& text);

/// Reads a replacement Hodge table: one row per line, "input | star | scaled".
std::vector<HodgeTableEntry> load_hodge_table(const std::filesystem::path& file);

// Commands -----------------------------------------------------------------------

/// Expansion fields and material used by verify-tables and by `expand` defaults.
std::vector<PolyField> default_fields(int k);

Report cmd_verify_tables(const std::vector<HodgeTableEntry>& table);
Report cmd_identities(std::uint64_t seed, int count);
Report cmd_expand(int k, const MaterialParams& m, const std::vector<PolyField>& fields);
Report cmd_boundary(int k, const MaterialParams& m, const std::vector<PolyField>& fields);
Report cmd_solve(const SolverRun& run);

/// Runs the sweep, returning the report and the CSV text. SweepAborted is
/// turned into a failed check carrying the refinement advice.
struct SweepOutput {
  Report report;
  std::optional<solver::SweepResult> result;
};
SweepOutput cmd_sweep(const SolverRun& run);

/// CSV text: header, one row per eps, then `summary,,,<slope>`.
std::string sweep_csv(const solver::SweepResult& r);
std::string sweep_table(const solver::SweepResult& r);

/// 17 significant digits, locale independent.
std::string format_number(double v);

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hodge4d::cli
