// Acceptance run: one PASS/FAIL line per criterion, with its time limit.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "hodge4d/boundary.hpp"
#include "hodge4d/convdiff.hpp"
#include "hodge4d/identities.hpp"
#include "hodge4d/sweep.hpp"
#include "hodge4d/tables.hpp"
#include "hodge4d/vector_calculus.hpp"

using namespace hodge4d;
namespace sv = hodge4d::solver;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double limit_s;
  std::function<Outcome()> body;
};

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[200];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

Rational random_rational(std::mt19937_64& rng, bool positive) {
  std::uniform_int_distribution<long> n(positive ? 1 : -12, 12), d(1, 9);
  return make_rational(n(rng), d(rng));
}

MaterialParams random_material(std::mt19937_64& rng, bool polynomial_beta) {
  std::array<PolyField, 3> beta;
  for (auto& b : beta) b = polynomial_beta ? random_spatial_poly(rng, 2, 3) : PolyField(random_rational(rng, false));
  return MaterialParams(random_rational(rng, true), random_rational(rng, true), beta);
}

std::vector<PolyField> random_fields(std::mt19937_64& rng, int k) {
  std::vector<PolyField> v;
  const int n = (k == 1 || k == 2) ? 3 : (k == 4 ? 0 : 1);
  for (int i = 0; i < n; ++i) v.push_back(random_poly(rng, 3, 4));
  return v;
}

Outcome hodge_tables() {
  const auto cells = verify_hodge_table(reference_hodge_table());
  int ok = 0;
  std::string first;
  for (const auto& c : cells) {
    if (c.pass) {
      ++ok;
    } else if (first.empty()) {
      first = "; first mismatch " + c.column + " " + c.input;
    }
  }
  return {ok == 32 && cells.size() == 32, std::to_string(ok) + "/32 entries" + first};
}

Outcome double_star() {
  std::mt19937_64 rng(2);
  int ok = 0, total = 0;
  for (int pair = 0; pair < 5; ++pair) {
    Rational a = random_rational(rng, true), e = random_rational(rng, true);
    while (e == a) e = random_rational(rng, true);
    const MaterialParams m(a, e);
    for (std::uint8_t mask = 0; mask < 16; ++mask) {
      const BasisForm b(mask);
      const int k = b.degree();
      const PolyField coeff = random_poly(rng, 2, 3) + 1;
      const KForm w = KForm::single(b, coeff);
      KForm lhs = hodge_star(scaled_hodge_star(w, m));
      if ((k * (4 - k)) % 2) lhs = -lhs;
      const KForm rhs = w * PolyField(b.has_dt() ? e : a);
      ok += lhs == rhs;
      ++total;
    }
  }
  return {ok == total, std::to_string(ok) + "/" + std::to_string(total) + " basis forms over 5 (alpha, eps) pairs"};
}

Outcome identities() {
  const auto results = run_identities(20240601, 200);
  bool pass = true;
  std::string detail;
  for (const auto& r : results) {
    pass = pass && r.pass();
    detail += (detail.empty() ? "" : ", ") + r.name + " " + std::to_string(r.trials - r.failures) + "/" +
              std::to_string(r.trials);
  }
  return {pass, detail};
}

Outcome expansion() {
  std::mt19937_64 rng(4);
  int scalar_ok = 0, scalar_total = 0;
  for (int i = 0; i < 40; ++i) {
    const MaterialParams m = random_material(rng, true);
    const PolyField u = random_poly(rng, 3, 5);
    const vc::Vec3 flux = vc::add(vc::scale(vc::grad(u), PolyField(m.alpha())), vc::scale(m.beta(), u));
    const PolyField classical = -PolyField(m.epsilon()) * u.derivative(Var::T).derivative(Var::T) +
                                u.derivative(Var::T) - vc::div(flux);
    const PolyField total = unified_operator(KForm::scalar(u), m)[BasisForm::one()];
    scalar_ok += total == classical;
    ++scalar_total;
  }
  int cells = 0, bad = 0;
  for (int k = 1; k <= 3; ++k) {
    for (int i = 0; i < 20; ++i) {
      const MaterialParams m = random_material(rng, true);
      const ExpansionReport rep = expand_componentwise(k, random_fields(rng, k), m);
      cells += int(rep.rows.size()) * 4;
      bad += int(rep.mismatches().size());
    }
  }
  return {scalar_ok == scalar_total && bad == 0,
          "k=0 " + std::to_string(scalar_ok) + "/" + std::to_string(scalar_total) + " scalar equations; k=1..3 " +
              std::to_string(cells - bad) + "/" + std::to_string(cells) + " cells"};
}

Outcome emergent() {
  std::mt19937_64 rng(5);
  int ok = 0, total = 0;
  for (int k = 1; k <= 3; ++k) {
    for (int i = 0; i < 50; ++i) {
      const MaterialParams m = random_material(rng, true);
      const auto f = random_fields(rng, k);
      std::vector<PolyField> expected;
      if (k == 1) {
        expected = {-vc::div({f[0], f[1], f[2]})};
      } else {
        const vc::Vec3 v = k == 2 ? vc::curl({f[0], f[1], f[2]}) : vc::grad(f[0]);
        expected = {-v[0], -v[1], -v[2]};
      }
      ok += emergent_constraint(k, f, m) == expected;
      ++total;
    }
  }
  return {ok == total, std::to_string(ok) + "/" + std::to_string(total) + " (-div u, -curl u, -grad u)"};
}

Outcome exponential_fitting() {
  std::mt19937_64 rng(6);
  int ok = 0, total = 0;
  for (int k = 0; k <= 3; ++k) {
    for (int i = 0; i < 100; ++i) {
      const ConvectionForm b = build_convection_form(random_material(rng, false));
      const KForm w = random_form(rng, k);
      ok += flux(w, b) == exp_fitted_flux(w, make_potential(b));
      ++total;
    }
  }
  int raised = 0, tried = 0;
  while (tried < 10) {
    const MaterialParams m = random_material(rng, true);
    if (vc::curl(m.beta()) == vc::Vec3{}) continue;  // closed, skip
    ++tried;
    try {
      make_potential(build_convection_form(m));
    } catch (const NoPotentialError&) {
      ++raised;
    }
  }
  return {ok == total && raised == 10, std::to_string(ok) + "/" + std::to_string(total) +
                                           " flux identities; NoPotential raised " + std::to_string(raised) + "/10"};
}

Outcome boundary() {
  std::mt19937_64 rng(7);
  int verified = 0;
  bool k3_na = false;
  for (int k = 0; k <= 3; ++k) {
    const MaterialParams m = random_material(rng, false);
    const auto u = random_fields(rng, k);
    std::vector<PolyField> u0;
    for (const auto& f : u) u0.push_back(f.substitute(Var::T, 0));
    const BoundaryReport r = boundary_report(k, u, u0, m);
    verified += r.all_verified();
    if (k == 3) {
      const auto& x = r.conditions[0];
      k3_na = !x.applicable && x.label == "not applicable";
    }
  }
  return {verified == 4 && k3_na,
          std::to_string(verified) + "/4 degrees reduced; k=3 spatial condition " +
              (k3_na ? "not applicable" : "MISLABELLED")};
}

Outcome solver_order() {
  std::vector<double> err;
  for (int n : {32, 64, 128}) {
    const sv::ProblemConfig c = sv::make_problem("manufactured", {1.0, 0.5, 0.1, sv::Scheme::Centered});
    const sv::Grid1p1 g(n, n);
    err.push_back(sv::l2_spacetime(sv::solve(c, g) - sv::DiscreteField::sample(g, c.exact)));
  }
  const double p1 = std::log2(err[0] / err[1]), p2 = std::log2(err[1] / err[2]);
  const bool in = [](double p) { return p >= 1.8 && p <= 2.2; }(p1) && p2 >= 1.8 && p2 <= 2.2;
  return {in, fmt("orders %.3f, %.3f (L2 error at 128^2: %.2e)", p1, p2, err[2])};
}

Outcome max_principle() {
  const sv::Grid1p1 g(64, 64);
  const sv::DiscreteField fit = sv::solve(sv::make_problem("layer", {1e-3, 1.0, 0.1, sv::Scheme::ExpFitted}), g);
  const sv::DiscreteField cen = sv::solve(sv::make_problem("layer", {1e-3, 1.0, 0.1, sv::Scheme::Centered}), g);
  const double over = std::max(cen.max() - 1.0, -cen.min());
  const bool bounded = fit.min() >= -1e-12 && fit.max() <= 1 + 1e-12;
  return {bounded && over > 1e-3, fmt("ExpFitted range [%.3g, %.15g]; Centered overshoot %.3g", fit.min(), fit.max(),
                                      over)};
}

Outcome eps_decay() {
  const sv::ProblemConfig c = sv::make_problem("decay", {1.0, 0.5, 0.1, sv::Scheme::ExpFitted});
  try {
    const sv::SweepResult r = sv::epsilon_sweep(c, sv::Grid1p1(128, 256), {0.1, 0.05, 0.025, 0.0125});
    return {r.slope >= 0.4, fmt("slope %.3f (rms %.2e), floor ratio %.3g", r.slope, r.slope_residual, r.floor_ratio)};
  } catch (const sv::SweepAborted& e) {
    return {false, e.what()};
  }
}

Outcome positivity() {
  const sv::Grid1p1 g(32, 32);
  const sv::ProblemConfig c = sv::make_problem("zero", {1.0, 0.5, 0.1, sv::Scheme::ExpFitted});
  const sv::DiscreteField psi = sv::potential_field(c, g);
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  int positive = 0;
  double smallest = INFINITY;
  for (int s = 0; s < 50; ++s) {
    sv::DiscreteField u(g), v(g);
    for (int j = 1; j <= g.nt(); ++j) {
      for (int i = 1; i < g.nx(); ++i) {
        u(i, j) = dist(rng);
        v(i, j) = std::exp(psi(i, j)) * u(i, j);
      }
    }
    const double b = sv::discrete_bilinear(u, v, c);
    positive += b > 0;
    smallest = std::min(smallest, b);
  }
  return {positive == 50, fmt("%.0f/50 positive, min B = %.3g", positive, smallest)};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Hodge star tables", 1, hodge_tables},
      {2, "double-star scaling", 1, double_star},
      {3, "algebraic identities", 10, identities},
      {4, "unified-operator expansion", 30, expansion},
      {5, "emergent constraints", 10, emergent},
      {6, "exponential fitting", 10, exponential_fitting},
      {7, "boundary reductions", 5, boundary},
      {8, "solver convergence order", 30, solver_order},
      {9, "discrete maximum principle", 10, max_principle},
      {10, "eps-decay of the error", 60, eps_decay},
      {11, "bilinear positivity", 10, positivity},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o{false, ""};
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = s < c.limit_s;
    const bool pass = o.pass && in_time;
    failed += !pass;
    std::printf("%s [%d] %s (%.3f s, limit %.0f s%s): %s\n", pass ? "PASS" : "FAIL", c.id, c.name, s, c.limit_s,
                in_time ? "" : ", TOO SLOW", o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", int(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
