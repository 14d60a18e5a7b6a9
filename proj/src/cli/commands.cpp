#include <cmath>
#include <random>
#include <sstream>

#include "hodge4d/boundary.hpp"
#include "hodge4d/cli.hpp"
#include "hodge4d/convdiff.hpp"
#include "hodge4d/identities.hpp"
#include "hodge4d/vector_calculus.hpp"

namespace hodge4d::cli {

namespace {

PolyField P(const char* s) { return PolyField::parse(s); }

std::string join(const std::vector<PolyField>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
  return s + ")";
}

std::string num(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

MaterialParams table_material() { return MaterialParams(make_rational(3, 7), make_rational(5, 11), {P("y"), P("x*z"), 2}); }

Rational random_rational(std::mt19937_64& rng, bool positive) {
  std::uniform_int_distribution<long> n(positive ? 1 : -9, 9), d(1, 7);
  return make_rational(n(rng), d(rng));
}

MaterialParams random_constant_material(std::mt19937_64& rng) {
  return MaterialParams(random_rational(rng, true), random_rational(rng, true),
                        {random_rational(rng, false), random_rational(rng, false), random_rational(rng, false)});
}

std::vector<PolyField> random_fields(std::mt19937_64& rng, int k) {
  std::vector<PolyField> v;
  const int n = (k == 1 || k == 2) ? 3 : (k == 4 ? 0 : 1);
  for (int i = 0; i < n; ++i) v.push_back(random_poly(rng, 3, 4));
  return v;
}

Check tally(std::string name, std::string target, int trials, int failures, const std::string& first) {
  Check c{std::move(name), std::move(target), CheckKind::Check, failures == 0, {}};
  c.detail = std::to_string(trials - failures) + "/" + std::to_string(trials);
  if (failures) c.detail += "; first failure: " + first;
  return c;
}

}  // namespace

std::vector<PolyField> default_fields(int k) {
  switch (k) {
    case 0: return {P("x^2*y*t + z^3 - 2*x*z")};
    case 1:
    case 2: return {P("x*y*t + z^2"), P("y^2*z - t^2*x"), P("x*z*t + y^3")};
    case 3: return {P("x*y*z + t^2*y")};
    case 4: return {};
    default: throw UsageError("degree must be 0..4, got " + std::to_string(k));
  }
}

Report cmd_verify_tables(const std::vector<HodgeTableEntry>& table) {
  Report r{"verify-tables", {}, {}};
  std::vector<HodgeCell> cells;
  try {
    cells = verify_hodge_table(table);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("expected table: ") + e.what());
  }
  for (const auto& c : cells) {
    Check ch{"Hodge " + c.column + " " + c.input, "Hodge star table, " + c.column + " column", CheckKind::Check,
             c.pass, c.computed};
    if (!c.pass) ch.detail = "expected " + c.expected + ", computed " + c.computed;
    r.add(std::move(ch));
  }
  r.add({"Hodge table size", "Hodge star table", CheckKind::Check, cells.size() == 32,
         std::to_string(cells.size()) + " cells"});

  const MaterialParams m = table_material();
  for (int k = 0; k <= 4; ++k) {
    const auto fields = default_fields(k);
    const ExpansionReport rep = expand_componentwise(k, fields, m);
    const auto bad = rep.mismatches();
    r.add({"expansion k=" + std::to_string(k), "component-wise expansion, degree " + std::to_string(k),
           CheckKind::Check, bad.empty(),
           std::to_string(rep.rows.size()) + " rows x 4 columns, " + std::to_string(bad.size()) + " mismatches"});
    for (const auto& cell : bad) {
      r.add({"expansion k=" + std::to_string(k) + " " + cell.basis + " [" + cell.column + "]",
             "component-wise expansion, degree " + std::to_string(k), CheckKind::Check, false,
             "expected " + cell.expected.to_string() + ", computed " + cell.computed.to_string()});
    }
  }

  // Scalar case against the classical convection-diffusion operator.
  const PolyField u = default_fields(0)[0];
  const vc::Vec3 flux = vc::add(vc::scale(vc::grad(u), PolyField(m.alpha())), vc::scale(m.beta(), u));
  const PolyField classical = -PolyField(m.epsilon()) * u.derivative(Var::T).derivative(Var::T) +
                              u.derivative(Var::T) - vc::div(flux);
  const PolyField total = unified_operator(build_solution_form(0, std::vector<PolyField>{u}), m)[BasisForm::one()];
  r.add({"scalar equation", "-eps u_tt + u_t - div(alpha grad u + beta u)", CheckKind::Check, total == classical,
         total == classical ? "" : "operator " + total.to_string() + ", classical " + classical.to_string()});
  return r;
}

Report cmd_identities(std::uint64_t seed, int count) {
  if (count < 1) throw UsageError("count must be positive");
  Report r{"identities", {}, {}};
  r.notes.push_back("seed " + std::to_string(seed) + ", count " + std::to_string(count));
  for (const auto& res : run_identities(seed, count)) {
    r.add(tally(res.name, "exterior algebra", res.trials, res.failures, res.first_failure));
  }

  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);

  // Flux equivalence with a constant-beta potential.
  for (int k = 0; k <= 3; ++k) {
    int failures = 0;
    std::string first;
    for (int i = 0; i < count; ++i) {
      const MaterialParams m = random_constant_material(rng);
      const ConvectionForm b = build_convection_form(m);
      const KForm w = random_form(rng, k);
      const KForm lhs = flux(w, b), rhs = exp_fitted_flux(w, make_potential(b));
      if (lhs != rhs && failures++ == 0) first = "w = " + w.to_string();
    }
    r.add(tally("flux = exp-fitted flux, k=" + std::to_string(k), "exponential fitting", count, failures, first));
  }

  // Emergent constraints on the dt-block.
  for (int k = 1; k <= 3; ++k) {
    int failures = 0;
    std::string first;
    for (int i = 0; i < count; ++i) {
      const MaterialParams m = random_constant_material(rng);
      const auto f = random_fields(rng, k);
      std::vector<PolyField> expected;
      if (k == 1) {
        expected = {-vc::div({f[0], f[1], f[2]})};
      } else {
        const vc::Vec3 v = k == 2 ? vc::curl({f[0], f[1], f[2]}) : vc::grad(f[0]);
        expected = {-v[0], -v[1], -v[2]};
      }
      if (emergent_constraint(k, f, m) != expected && failures++ == 0) first = "u = " + join(f);
    }
    const char* what[] = {"", "-div u", "-curl u", "-grad u"};
    r.add(tally(std::string("emergent constraint ") + what[k], "dt-block of the unified operator", count, failures,
                first));
  }

  // Linearity of the unified operator.
  for (int k = 0; k <= 4; ++k) {
    int failures = 0;
    std::string first;
    for (int i = 0; i < count; ++i) {
      const MaterialParams m = random_constant_material(rng);
      const KForm u = build_solution_form(k, random_fields(rng, k)), v = build_solution_form(k, random_fields(rng, k));
      const Rational a = random_rational(rng, false), c = random_rational(rng, false);
      const KForm lhs = unified_operator(u * PolyField(a) + v * PolyField(c), m);
      const KForm rhs = unified_operator(u, m) * PolyField(a) + unified_operator(v, m) * PolyField(c);
      if (lhs != rhs && failures++ == 0) first = "u = " + u.to_string();
    }
    r.add(tally("linearity, k=" + std::to_string(k), "unified operator", count, failures, first));
  }

  // A nonzero constraint value is information, not a failure.
  const auto g = emergent_constraint(3, std::vector<PolyField>{P("x + y")}, MaterialParams::unit());
  r.add({"k=3 constraint for u = x + y", "dt-block of the unified operator", CheckKind::ConstraintValue, true,
         "-grad u = " + join(g)});

  try {
    make_potential(build_convection_form(MaterialParams(1, 1, {P("y"), 0, 0})));
    r.add({"potential for beta = (y, 0, 0)", "exponential fitting", CheckKind::Check, false,
           "a potential was produced for a non-closed convection form"});
  } catch (const NoPotentialError& e) {
    std::string obs;
    for (const auto& o : e.obstructions()) obs += (obs.empty() ? "" : "; ") + o;
    r.add({"potential for beta = (y, 0, 0)", "exponential fitting", CheckKind::Check, true, "NoPotential: " + obs});
  }
  return r;
}

Report cmd_expand(int k, const MaterialParams& m, const std::vector<PolyField>& fields) {
  Report r{"expand", {}, {}};
  ExpansionReport rep;
  try {
    rep = expand_componentwise(k, fields, m);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  r.notes.push_back("k=" + std::to_string(k) + "  u = " + join(fields));
  for (const auto& row : rep.rows) {
    r.notes.push_back("[" + row.basis + "]");
    for (std::size_t c = 0; c < 4; ++c) {
      std::string line = "  ";
      line += kPieceNames[c];
      line.resize(20, ' ');
      r.notes.push_back(line + row.computed[c].to_string());
    }
  }
  for (const auto& row : rep.rows) {
    bool ok = true;
    for (std::size_t c = 0; c < 4; ++c) ok = ok && row.computed[c] == row.expected[c];
    r.add({"row " + row.basis, "vector-calculus oracle", CheckKind::Check, ok, ok ? "" : "see mismatching cells"});
  }
  for (const auto& cell : rep.mismatches()) {
    r.add({cell.basis + " [" + cell.column + "]", "vector-calculus oracle", CheckKind::Check, false,
           "expected " + cell.expected.to_string() + ", computed " + cell.computed.to_string()});
  }
  return r;
}

Report cmd_boundary(int k, const MaterialParams& m, const std::vector<PolyField>& fields) {
  Report r{"boundary", {}, {}};
  std::vector<PolyField> initial;
  for (const auto& f : fields) initial.push_back(f.substitute(Var::T, 0));
  BoundaryReport rep;
  try {
    rep = boundary_report(k, fields, initial, m);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  r.notes.push_back("k=" + std::to_string(k) + "  u = " + join(fields) + "  on [0, 1]");
  for (const auto& c : rep.conditions) {
    const bool ok = !c.applicable || c.reduction_verified;
    r.add({c.name + ": " + c.label, "boundary reductions", CheckKind::Check, ok,
           c.applicable ? (ok ? "reduction verified" : "reduction failed") : "not applicable"});
    if (c.applicable && c.name != "x-BC") {
      r.add({c.name + " residual", "boundary reductions", CheckKind::Info, true,
             c.residual.to_string() + (c.satisfied ? " (satisfied)" : "")});
    }
  }
  return r;
}

Report cmd_solve(const SolverRun& run) {
  Report r{"solve", {}, {}};
  const solver::ProblemConfig c = solver::make_problem(run.problem, run.params);
  const solver::Grid1p1 g(run.nx, run.nt, run.params.lx, run.params.t0, run.params.T);
  r.notes.push_back("problem " + run.problem + ", scheme " + std::string(solver::scheme_name(c.scheme)) + ", eps " +
                    num(c.epsilon) + ", grid " + std::to_string(g.nx()) + "x" + std::to_string(g.nt()));
  try {
    const solver::LinearSystem sys = solver::assemble(c, g);
    const solver::DiscreteField u = solver::solve(sys);
    const double res = solver::relative_residual(sys, u);
    r.add({"relative residual", "linear solve", CheckKind::Check, res <= 1e-10, num(res)});
    r.add({"solution range", "discrete solution", CheckKind::Info, true, "[" + num(u.min()) + ", " + num(u.max()) + "]"});
    if (c.exact) {
      const auto e = u - solver::DiscreteField::sample(g, c.exact);
      r.add({"error vs exact", "discrete solution", CheckKind::Info, true,
             "L2(T) " + num(solver::l2_at_level(e, g.nt())) + ", L2 space-time " + num(solver::l2_spacetime(e)) +
                 ", max " + num(solver::max_abs(e))});
    }
    if (c.reference) {
      const auto e = u - solver::DiscreteField::sample(g, c.reference);
      r.add({"distance to eps = 0 solution", "discrete solution", CheckKind::Info, true,
             "L2(T) " + num(solver::l2_at_level(e, g.nt()))});
    }
  } catch (const solver::SolveError& e) {
    r.add({"linear solve", "linear solve", CheckKind::Check, false, e.what()});
  }
  return r;
}

SweepOutput cmd_sweep(const SolverRun& run) {
  if (run.eps_list.empty()) throw UsageError("sweep: eps_list is empty");
  SweepOutput out{Report{"sweep", {}, {}}, std::nullopt};
  const solver::ProblemConfig c = solver::make_problem(run.problem, run.params);
  const solver::Grid1p1 g(run.nx, run.nt, run.params.lx, run.params.t0, run.params.T);
  out.report.notes.push_back("problem " + run.problem + ", scheme " + std::string(solver::scheme_name(c.scheme)) + ", grid " +
                             std::to_string(g.nx()) + "x" + std::to_string(g.nt()));
  try {
    out.result = solver::epsilon_sweep(c, g, run.eps_list, {run.floor_check, run.max_floor_ratio});
  } catch (const solver::SweepAborted& e) {
    out.report.add({"epsilon sweep", "energy estimate", CheckKind::Check, false, e.what()});
    return out;
  } catch (const solver::SolveError& e) {
    out.report.add({"epsilon sweep", "linear solve", CheckKind::Check, false, e.what()});
    return out;
  }
  const auto& res = *out.result;
  out.report.add({"error decreases with eps", "energy estimate", CheckKind::Check, true,
                  std::to_string(res.rows.size()) + " values"});
  out.report.add({"fitted slope", "energy estimate", CheckKind::Info, true,
                  num(res.slope) + " (rms residual " + num(res.slope_residual) + ")"});
  if (!std::isnan(res.floor_ratio)) {
    out.report.add({"discretization floor", "refinement probe", CheckKind::Check, true,
                    "estimate/error " + num(res.floor_ratio)});
  }
  return out;
}

}  // namespace hodge4d::cli
