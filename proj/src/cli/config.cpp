#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "hodge4d/cli.hpp"

namespace hodge4d::cli {

namespace {

const std::set<std::string>& known_sections() {
  static const std::set<std::string> s{"solve", "sweep"};
  return s;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == sep) {
      parts.push_back(trim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(trim(cur));
  return parts;
}

}  // namespace

KeyValues parse_config(std::istream& in, const std::string& section, const std::string& source) {
  KeyValues kv;
  std::string line, current;
  bool found = false;
  for (int n = 1; std::getline(in, line); ++n) {
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#' || t[0] == ';') continue;
    const std::string where = source + ":" + std::to_string(n);
    if (t.front() == '[') {
      if (t.back() != ']') throw UsageError(where + ": malformed section header '" + t + "'");
      current = trim(std::string_view(t).substr(1, t.size() - 2));
      if (!known_sections().count(current)) throw UsageError(where + ": unknown section [" + current + "]");
      found = found || current == section;
      continue;
    }
    const auto eq = t.find('=');
    if (eq == std::string::npos) throw UsageError(where + ": expected key = value, got '" + t + "'");
    if (current.empty()) throw UsageError(where + ": key outside a section");
    const std::string key = trim(std::string_view(t).substr(0, eq));
    if (key.empty()) throw UsageError(where + ": empty key");
    if (current == section) kv[key] = trim(std::string_view(t).substr(eq + 1));
  }
  if (!found) throw UsageError(source + ": no [" + section + "] section");
  return kv;
}

KeyValues load_config(const std::filesystem::path& file, const std::string& section) {
  std::ifstream in(file);
  if (!in) throw UsageError("cannot read config file " + file.string());
  return parse_config(in, section, file.string());
}

double parse_double(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  double v = 0;
  const char* end = t.data() + t.size();
  const auto [p, ec] = std::from_chars(t.data(), end, v);
  if (t.empty() || ec != std::errc() || p != end) throw UsageError(key + ": not a number: '" + text + "'");
  return v;
}

int parse_int(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  int v = 0;
  const char* end = t.data() + t.size();
  const auto [p, ec] = std::from_chars(t.data(), end, v);
  if (t.empty() || ec != std::errc() || p != end) throw UsageError(key + ": not an integer: '" + text + "'");
  return v;
}

std::vector<double> parse_double_list(const std::string& key, const std::string& text) {
  if (trim(text).empty()) return {};
  std::vector<double> out;
  for (const auto& part : split(text, ',')) out.push_back(parse_double(key, part));
  return out;
}

std::uint64_t parse_seed(const std::string& text) {
  const std::string t = trim(text);
  std::uint64_t v = 0;
  const char* end = t.data() + t.size();
  const auto [p, ec] = std::from_chars(t.data(), end, v);
  if (t.empty() || ec != std::errc() || p != end) throw UsageError("seed: not an unsigned integer: '" + text + "'");
  return v;
}

std::vector<PolyField> parse_poly_list(const std::string& key, const std::string& text) {
  std::vector<PolyField> out;
  for (const auto& part : split(text, ',')) {
    try {
      out.push_back(PolyField::parse(part));
    } catch (const std::invalid_argument& e) {
      throw UsageError(key + ": " + e.what());
    }
  }
  return out;
}

Rational parse_rational(const std::string& key, const std::string& text) {
  const auto p = parse_poly_list(key, text);
  if (p.size() != 1 || !p[0].as_constant()) throw UsageError(key + ": expected a rational constant, got '" + text + "'");
  return *p[0].as_constant();
}

SolverRun solver_run(const KeyValues& kv, const std::string& command) {
  static const std::set<std::string> common{"problem", "alpha", "beta", "epsilon", "scheme",
                                            "nx",      "nt",    "lx",   "t0",      "T"};
  static const std::set<std::string> sweep_only{"eps_list", "out", "floor_check", "max_floor_ratio"};
  SolverRun run;
  for (const auto& [key, value] : kv) {
    const bool ok = common.count(key) || (command == "sweep" && sweep_only.count(key));
    if (!ok) throw UsageError("unknown key '" + key + "' for " + command);
  }
  auto get = [&](const char* key) -> const std::string* {
    const auto it = kv.find(key);
    return it == kv.end() ? nullptr : &it->second;
  };
  if (auto v = get("problem")) {
    run.problem = *v;
    const auto& names = solver::problem_names();
    if (std::find(names.begin(), names.end(), run.problem) == names.end()) {
      throw UsageError("unknown problem '" + run.problem + "'");
    }
  }
  if (auto v = get("alpha")) run.params.alpha = parse_double("alpha", *v);
  if (auto v = get("beta")) run.params.beta = parse_double("beta", *v);
  if (auto v = get("epsilon")) run.params.epsilon = parse_double("epsilon", *v);
  if (auto v = get("scheme")) {
    const auto s = solver::parse_scheme(*v);
    if (!s) throw UsageError("scheme: expected centered, upwind or expfitted, got '" + *v + "'");
    run.params.scheme = *s;
  }
  if (auto v = get("nx")) run.nx = parse_int("nx", *v);
  if (auto v = get("nt")) run.nt = parse_int("nt", *v);
  if (auto v = get("lx")) run.params.lx = parse_double("lx", *v);
  if (auto v = get("t0")) run.params.t0 = parse_double("t0", *v);
  if (auto v = get("T")) run.params.T = parse_double("T", *v);
  if (auto v = get("eps_list")) run.eps_list = parse_double_list("eps_list", *v);
  if (auto v = get("out")) run.out = *v;
  if (auto v = get("floor_check")) {
    if (*v == "true" || *v == "1") {
      run.floor_check = true;
    } else if (*v == "false" || *v == "0") {
      run.floor_check = false;
    } else {
      throw UsageError("floor_check: expected true or false, got '" + *v + "'");
    }
  }
  if (auto v = get("max_floor_ratio")) run.max_floor_ratio = parse_double("max_floor_ratio", *v);
  return run;
}

std::vector<HodgeTableEntry> load_hodge_table(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw UsageError("cannot read table file " + file.string());
  std::vector<HodgeTableEntry> rows;
  std::string line;
  for (int n = 1; std::getline(in, line); ++n) {
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto parts = split(t, '|');
    if (parts.size() != 3) {
      throw UsageError(file.string() + ":" + std::to_string(n) + ": expected 'input | star | scaled'");
    }
    rows.push_back({parts[0], parts[1], parts[2]});
  }
  return rows;
}

}  // namespace hodge4d::cli
