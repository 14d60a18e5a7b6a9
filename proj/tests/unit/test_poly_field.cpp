#include "doctest.h"

#include "hodge4d/exp_poly_field.hpp"
#include "hodge4d/poly_field.hpp"

using namespace hodge4d;

namespace {
PolyField P(const char* s) { return PolyField::parse(s); }
}  // namespace

TEST_CASE("polynomial parsing and canonical form") {
  CHECK(P("x^2*y - 3/2*t + 1") == P("1 + y*x*x - (3*t)/2"));
  CHECK(P("(x+1)^2") == P("x^2 + 2*x + 1"));
  CHECK(P("x - x").is_zero());
  CHECK(P("-(t - 2)") == P("2 - t"));
  CHECK(P("7/14") == PolyField(make_rational(1, 2)));
  CHECK_THROWS_AS(P("x +"), std::invalid_argument);
  CHECK_THROWS_AS(P("q"), std::invalid_argument);
  CHECK_THROWS_AS(P("1/x"), std::invalid_argument);
  CHECK_THROWS_AS(P("(x"), std::invalid_argument);
}

TEST_CASE("no zero terms are stored") {
  const PolyField p = P("x*y + 2") - P("x*y");
  CHECK(p.terms().size() == 1);
  CHECK(p.as_constant() == Rational(2));
  CHECK(p.is_constant());
  CHECK_FALSE(P("x").is_constant());
}

TEST_CASE("derivatives and antiderivatives") {
  const PolyField p = P("x^3*t^2 + y*z - 4*t");
  CHECK(p.derivative(Var::X) == P("3*x^2*t^2"));
  CHECK(p.derivative(Var::T) == P("2*x^3*t - 4"));
  CHECK(p.derivative(Var::Z) == P("y"));
  CHECK(partial(p, Var::Y) == P("z"));
  CHECK(p.antiderivative(Var::T).derivative(Var::T) == p);
  CHECK(P("x").antiderivative(Var::X) == P("x^2/2"));
}

TEST_CASE("substitution and evaluation") {
  const PolyField p = P("x^2*t + y - z*t");
  CHECK(p.substitute(Var::T, 2) == P("2*x^2 + y - 2*z"));
  CHECK(p.evaluate(std::array<Rational, 4>{1, 2, 3, make_rational(1, 2)}) == make_rational(1, 1));
  CHECK(p.evaluate(std::array<double, 4>{1.0, 2.0, 3.0, 0.5}) == doctest::Approx(1.0));
  CHECK(p.total_degree() == 3);
  CHECK(p.depends_on(Var::Y));
  CHECK_FALSE(P("x*t").depends_on(Var::Z));
}

TEST_CASE("product is commutative and distributes") {
  const PolyField a = P("x + t^2"), b = P("y - 1/3"), c = P("z*x");
  CHECK(a * b == b * a);
  CHECK(a * (b + c) == a * b + a * c);
  CHECK((a * b).derivative(Var::X) == a.derivative(Var::X) * b + a * b.derivative(Var::X));
}

TEST_CASE("exponentially weighted fields") {
  const PolyField psi = P("2*x - t");
  const ExpPolyField f(psi, P("x*t"));
  // d/dx (e^psi x t) = e^psi (2 x t + t)
  CHECK(f.derivative(Var::X) == ExpPolyField(psi, P("2*x*t + t")));
  CHECK(f.derivative(Var::T) == ExpPolyField(psi, P("-x*t + x")));
  CHECK_FALSE(f.as_poly().has_value());

  // Weight zero is plain polynomial arithmetic.
  const ExpPolyField g(P("x^2"));
  CHECK(g.derivative(Var::X).as_poly() == P("2*x"));

  // Opposite weights cancel under multiplication.
  const ExpPolyField back = f * ExpPolyField(-psi, PolyField(1));
  CHECK(back.as_poly() == P("x*t"));

  // Zero is absorbing; mixed weights cannot be added.
  CHECK((f + ExpPolyField()).amplitude() == f.amplitude());
  CHECK(ExpPolyField(psi, PolyField()) == ExpPolyField());
  CHECK_THROWS_AS(f + g, std::domain_error);
}
