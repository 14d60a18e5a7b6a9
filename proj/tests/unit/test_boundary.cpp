#include <random>
#include <vector>

#include "doctest.h"

#include "hodge4d/boundary.hpp"
#include "hodge4d/convdiff.hpp"
#include "hodge4d/identities.hpp"

using namespace hodge4d;

namespace {

PolyField P(const char* s) { return PolyField::parse(s); }

KForm F(const char* basis, const char* coeff) {
  const auto [sign, b] = parse_basis(basis);
  return KForm::single(b, sign > 0 ? P(coeff) : -P(coeff));
}

}  // namespace

TEST_CASE("normal forms") {
  CHECK(NormalForm::initial_time(0).form() == F("dt", "-1"));
  CHECK(NormalForm::final_time(2).form() == F("dt", "1"));
  CHECK(NormalForm::final_time(2).time() == 2);
  const NormalForm n = NormalForm::spatial({P("x"), 0, 1});
  CHECK(n.kind() == BoundaryKind::SpatialX);
  CHECK(n.form() == F("dx", "x") + F("dz", "1"));
}

TEST_CASE("lateral wedge traces") {
  const PolyField n1 = P("1 + x"), n2 = P("y"), n3 = P("2");
  const NormalForm n = NormalForm::spatial({n1, n2, n3});
  const PolyField u = P("x*t + z");
  CHECK(wedge_trace(n, KForm::scalar(u)) == F("dx", "(1 + x)*(x*t + z)") + F("dy", "y*(x*t + z)") +
                                                F("dz", "2*(x*t + z)"));

  const std::vector<PolyField> v{P("x"), P("t"), P("y*z")};
  const KForm u2 = build_solution_form(2, v);
  CHECK(wedge_trace(n, u2) == F("dx^dy^dz", "(1 + x)*x + y*t + 2*y*z"));

  CHECK(wedge_trace(n, build_solution_form(3, std::vector<PolyField>{u})).is_zero());
}

TEST_CASE("temporal wedge traces substitute the time") {
  const PolyField u = P("x*t^2 + y");
  const KForm t0 = wedge_trace(NormalForm::initial_time(make_rational(1, 2)), KForm::scalar(u));
  CHECK(t0 == F("dt", "-(x/4 + y)"));
  const KForm tT = wedge_trace(NormalForm::final_time(3), F("dx", "t"));
  CHECK(tT == F("dx^dt", "-3"));  // dt ^ dx = -dx ^ dt
}

TEST_CASE("artificial boundary condition at the terminal time") {
  const MaterialParams m(2, make_rational(1, 3));
  CHECK(artificial_bc(KForm::scalar(P("t^2")), m, 5) == KForm::scalar(make_rational(-10, 3)));
  CHECK(artificial_bc(F("dx", "t"), m, 1) == F("dx", "-1/3"));
  CHECK(artificial_bc(F("dx^dy^dz", "x"), m, 1).is_zero());
  // The 3-form case: -eps u_t on the volume basis.
  CHECK(artificial_bc(F("dx^dy^dz", "t^2*y"), m, 1) == F("dx^dy^dz", "-2*y/3"));
  CHECK_THROWS_AS(artificial_bc(F("dx^dy^dz^dt", "1"), m, 1), std::invalid_argument);

  std::mt19937_64 rng(21);
  for (int k = 0; k <= 3; ++k) {
    for (int i = 0; i < 20; ++i) {
      const KForm w = dt_part(random_form(rng, k), false);
      KForm expected(k);
      for (const auto& [b, c] : w.components()) {
        expected.add(b, c.derivative(Var::T).substitute(Var::T, 2) * PolyField(-m.epsilon()));
      }
      CHECK(artificial_bc(w, m, 2) == expected);
    }
  }
}

TEST_CASE("boundary reports per degree") {
  const MaterialParams m(3, make_rational(1, 4), {1, P("x"), 0});
  const std::vector<PolyField> scalar{P("x*y*t^2 + z")};
  const std::vector<PolyField> scalar0{P("z")};

  const BoundaryReport r0 = boundary_report(0, scalar, scalar0, m, 0, 1);
  CHECK(r0.conditions[0].label == "u = 0 on Gamma_x");
  CHECK(r0.conditions[1].label == "u(x,t0) = u_t0(x)");
  CHECK(r0.conditions[2].label == "eps u_t(x,T) = 0");
  CHECK(r0.all_verified());
  CHECK(r0.conditions[1].satisfied);
  CHECK_FALSE(r0.conditions[2].satisfied);
  CHECK(r0.conditions[2].residual == KForm::scalar(P("-x*y/2")));

  const std::vector<PolyField> vec{P("x*t"), P("y"), P("z^2")};
  const std::vector<PolyField> vec0{0, P("y"), P("z^2")};
  const BoundaryReport r1 = boundary_report(1, vec, vec0, m);
  CHECK(r1.conditions[0].label == "n x u = 0 on Gamma_x");
  CHECK(r1.all_verified());
  CHECK(r1.conditions[1].satisfied);

  const BoundaryReport r2 = boundary_report(2, vec, vec0, m, 1, 2);
  CHECK(r2.conditions[0].label == "u . n = 0 on Gamma_x");
  CHECK(r2.all_verified());
  CHECK_FALSE(r2.conditions[1].satisfied);  // u(x,1) has x in the first slot

  const BoundaryReport r3 = boundary_report(3, scalar, scalar0, m);
  CHECK(r3.conditions[0].label == "not applicable");
  CHECK_FALSE(r3.conditions[0].applicable);
  CHECK(r3.all_verified());

  CHECK_THROWS_AS(boundary_report(4, std::vector<PolyField>{}, std::vector<PolyField>{}, m), std::invalid_argument);
}

TEST_CASE("initial trace recovers the initial data") {
  const PolyField u = P("x + t*y");
  const KForm tr = wedge_trace(NormalForm::initial_time(0), KForm::scalar(u));
  CHECK(tr == F("dt", "-x"));
  // Contracting with n_T reads back -u(x, t0).
  CHECK(interior_product_nT(tr) == KForm::scalar(P("-x")));
}
