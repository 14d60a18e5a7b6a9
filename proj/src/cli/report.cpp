#include <charconv>
#include <cstdio>
#include <ostream>

#include "json.hpp"

#include "hodge4d/cli.hpp"

namespace hodge4d::cli {

namespace {

const char* tag(const Check& c) {
  switch (c.kind) {
    case CheckKind::ConstraintValue: return "VALUE";
    case CheckKind::Info: return "INFO";
    case CheckKind::Check: break;
  }
  return c.pass ? "PASS" : "FAIL";
}

const char* kind_name(CheckKind k) {
  switch (k) {
    case CheckKind::ConstraintValue: return "constraint value";
    case CheckKind::Info: return "info";
    case CheckKind::Check: break;
  }
  return "check";
}

}  // namespace

int Report::failures() const {
  int n = 0;
  for (const auto& c : checks) n += (c.kind == CheckKind::Check && !c.pass) ? 1 : 0;
  return n;
}

void Report::print_text(std::ostream& os) const {
  int counted = 0;
  for (const auto& c : checks) {
    os << tag(c) << "  " << c.name;
    if (!c.target.empty()) os << "  [" << c.target << "]";
    if (!c.detail.empty()) os << "  " << c.detail;
    os << '\n';
    counted += c.kind == CheckKind::Check ? 1 : 0;
  }
  for (const auto& n : notes) os << n << '\n';
  os << command << ": " << counted - failures() << "/" << counted << " checks passed\n";
}

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["pass"] = pass();
  j["failures"] = failures();
  auto& arr = j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["target"] = c.target;
    e["kind"] = kind_name(c.kind);
    if (c.kind == CheckKind::Check) e["pass"] = c.pass;
    e["detail"] = c.detail;
    arr.push_back(std::move(e));
  }
  j["notes"] = notes;
  return j.dump(2);
}

std::string format_number(double v) {
  char buf[64];
  const auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return ec == std::errc() ? std::string(buf, p) : std::string("nan");
}

std::string sweep_csv(const solver::SweepResult& r) {
  std::string s = "epsilon,l2_error_T,energy_integral,slope_estimate\n";
  for (const auto& row : r.rows) {
    s += format_number(row.epsilon) + ',' + format_number(row.l2_error_T) + ',' + format_number(row.energy_integral) +
         ',' + (row.local_slope ? format_number(*row.local_slope) : std::string()) + '\n';
  }
  s += "summary,,," + format_number(r.slope) + '\n';
  return s;
}

std::string sweep_table(const solver::SweepResult& r) {
  std::string s;
  char line[160];
  std::snprintf(line, sizeof line, "%12s  %14s  %16s  %10s\n", "epsilon", "l2_error_T", "energy_integral", "slope");
  s += line;
  for (const auto& row : r.rows) {
    char slope[32] = "-";
    if (row.local_slope) std::snprintf(slope, sizeof slope, "%.4f", *row.local_slope);
    std::snprintf(line, sizeof line, "%12.6g  %14.6e  %16.6e  %10s\n", row.epsilon, row.l2_error_T,
                  row.energy_integral, slope);
    s += line;
  }
  std::snprintf(line, sizeof line, "fitted slope %.4f (rms residual %.2e), reference: %s\n", r.slope,
                r.slope_residual, r.reference.c_str());
  s += line;
  if (r.floor_ratio == r.floor_ratio) {
    std::snprintf(line, sizeof line, "discretization estimate %.3e, %.3g of the smallest-eps error\n",
                  r.floor_estimate, r.floor_ratio);
    s += line;
  }
  return s;
}

}  // namespace hodge4d::cli
