#include <cstdlib>
#include <fstream>
#include <ostream>

#include "CLI11.hpp"

#include "hodge4d/cli.hpp"

namespace hodge4d::cli {

namespace {

struct MaterialFlags {
  std::string alpha = "1", eps = "1", beta = "0,0,0";
  std::optional<std::string> u;
};

void add_material_flags(CLI::App* sub, MaterialFlags& f) {
  sub->add_option("--alpha", f.alpha, "diffusion: rational constant or polynomial in x, y, z")->capture_default_str();
  sub->add_option("--eps", f.eps, "artificial temporal diffusion (rational)")->capture_default_str();
  sub->add_option("--beta", f.beta, "convection components \"b1,b2,b3\" (polynomials)")->capture_default_str();
  sub->add_option("--u", f.u, "solution fields, comma separated (1 for k=0,3; 3 for k=1,2)");
}

MaterialParams material_from(const MaterialFlags& f) {
  const auto beta = parse_poly_list("beta", f.beta);
  if (beta.size() != 3) throw UsageError("beta: expected three components, got " + std::to_string(beta.size()));
  const auto alpha = parse_poly_list("alpha", f.alpha);
  if (alpha.size() != 1) throw UsageError("alpha: expected one value");
  const Rational eps = parse_rational("eps", f.eps);
  try {
    if (auto a = alpha[0].as_constant()) return MaterialParams(*a, eps, {beta[0], beta[1], beta[2]});
    return MaterialParams(1, eps, {beta[0], beta[1], beta[2]}).with_alpha_field(alpha[0]);
  } catch (const ParameterError& e) {
    throw UsageError(e.what());
  }
}

std::vector<PolyField> fields_from(int k, const MaterialFlags& f) {
  if (k < 0 || k > 4) throw UsageError("k must be 0..4, got " + std::to_string(k));
  if (!f.u) return default_fields(k);
  if (k == 4) throw UsageError("k=4 takes no solution fields");
  auto v = parse_poly_list("u", *f.u);
  const std::size_t want = (k == 1 || k == 2) ? 3 : 1;
  if (v.size() != want) {
    throw UsageError("u: degree " + std::to_string(k) + " needs " + std::to_string(want) + " fields, got " +
                     std::to_string(v.size()));
  }
  return v;
}

/// Key overrides shared by solve and sweep; each maps to a config key.
struct SolverFlags {
  std::optional<std::string> config;
  std::map<std::string, std::optional<std::string>> values;
};

void add_solver_flags(CLI::App* sub, SolverFlags& f, bool sweep) {
  sub->add_option("--config", f.config, "key=value file with a [" + sub->get_name() + "] section");
  const std::vector<std::pair<std::string, std::string>> keys{
      {"problem", "zero, manufactured, decay, heat or layer"},
      {"alpha", "diffusion constant"},
      {"beta", "convection constant"},
      {"epsilon", "artificial temporal diffusion"},
      {"scheme", "centered, upwind or expfitted"},
      {"nx", "cells in x"},
      {"nt", "cells in t"},
      {"lx", "domain length"},
      {"t0", "initial time"},
      {"T", "final time"}};
  for (const auto& [k, help] : keys) f.values[k];
  for (auto& [k, v] : f.values) {
    std::string help;
    for (const auto& kh : keys) {
      if (kh.first == k) help = kh.second;
    }
    sub->add_option("--" + k, v, help);
  }
  if (sweep) {
    sub->add_option("--eps-list", f.values["eps_list"], "comma separated, strictly decreasing");
    sub->add_option("--out", f.values["out"], "CSV output path");
    sub->add_option("--floor-check", f.values["floor_check"], "true or false");
    sub->add_option("--max-floor-ratio", f.values["max_floor_ratio"], "admissible discretization/eps-effect ratio");
  }
}

SolverRun solver_run_from(const SolverFlags& f, const std::string& command) {
  KeyValues kv;
  if (f.config) kv = load_config(*f.config, command);
  for (const auto& [k, v] : f.values) {
    if (v) kv[k] = *v;
  }
  return solver_run(kv, command);
}

int emit(const Report& r, bool json, std::ostream& out) {
  if (json) {
    out << r.to_json() << '\n';
  } else {
    r.print_text(out);
  }
  return r.pass() ? kPass : kFailure;
}

std::filesystem::path table_path(const std::filesystem::path& csv) {
  std::filesystem::path p = csv;
  if (p.extension() == ".txt") return p.string() + ".txt";
  return p.replace_extension(".txt");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Space-time Hodge-Laplacian convection-diffusion toolkit"};
  app.name("hodge4d");
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "print the report as JSON");

  auto* verify = app.add_subcommand("verify-tables", "Hodge star table and component-wise expansions, k=0..4");
  std::optional<std::string> expected_table;
  verify->add_option("--expected", expected_table, "replacement table file, rows 'input | star | scaled'");

  auto* identities = app.add_subcommand("identities", "randomized exact identity suite");
  std::optional<std::string> seed_text;
  int count = 100;
  identities->add_option("--seed", seed_text, "RNG seed (default: HODGE4D_SEED or 42)");
  identities->add_option("--count", count, "samples per identity and degree")->capture_default_str();

  auto* expand = app.add_subcommand("expand", "component-wise expansion of the unified operator");
  int k_expand = 0;
  MaterialFlags expand_flags;
  expand->add_option("--k", k_expand, "form degree 0..4")->required();
  add_material_flags(expand, expand_flags);

  auto* boundary = app.add_subcommand("boundary", "reduce the boundary conditions for a degree-k form");
  int k_boundary = 0;
  MaterialFlags boundary_flags;
  boundary->add_option("--k", k_boundary, "form degree 0..3")->required();
  add_material_flags(boundary, boundary_flags);

  auto* solve = app.add_subcommand("solve", "1+1D space-time solve");
  SolverFlags solve_flags;
  add_solver_flags(solve, solve_flags, false);

  auto* sweep = app.add_subcommand("sweep", "eps-sweep against the eps = 0 solution");
  SolverFlags sweep_flags;
  add_solver_flags(sweep, sweep_flags, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*verify) {
      const auto table = expected_table ? load_hodge_table(*expected_table) : reference_hodge_table();
      return emit(cmd_verify_tables(table), json, out);
    }
    if (*identities) {
      std::uint64_t seed = 42;
      if (seed_text) {
        seed = parse_seed(*seed_text);
      } else if (const char* env = std::getenv("HODGE4D_SEED")) {
        seed = parse_seed(env);
      }
      return emit(cmd_identities(seed, count), json, out);
    }
    if (*expand) {
      return emit(cmd_expand(k_expand, material_from(expand_flags), fields_from(k_expand, expand_flags)), json, out);
    }
    if (*boundary) {
      if (k_boundary > 3) throw UsageError("boundary conditions are defined for k = 0..3");
      return emit(cmd_boundary(k_boundary, material_from(boundary_flags), fields_from(k_boundary, boundary_flags)),
                  json, out);
    }
    if (*solve) return emit(cmd_solve(solver_run_from(solve_flags, "solve")), json, out);
    if (*sweep) {
      const SolverRun run = solver_run_from(sweep_flags, "sweep");
      const SweepOutput s = cmd_sweep(run);
      if (s.result) {
        const std::string csv = sweep_csv(*s.result), table = sweep_table(*s.result);
        if (run.out) {
          std::ofstream f(*run.out, std::ios::binary);
          std::ofstream t(table_path(*run.out));
          if (!f || !(f << csv) || !t || !(t << table)) throw UsageError("cannot write " + *run.out);
        }
        if (!json) out << table << (run.out ? "" : csv);
      }
      return emit(s.report, json, out);
    }
  } catch (const UsageError& e) {
    err << "hodge4d: " << e.what() << '\n';
    return kUsage;
  } catch (const solver::ConfigError& e) {
    err << "hodge4d: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace hodge4d::cli
