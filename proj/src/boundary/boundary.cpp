#include "hodge4d/boundary.hpp"

#include "hodge4d/convdiff.hpp"

namespace hodge4d {

NormalForm NormalForm::spatial(const vc::Vec3& n) {
  KForm f(1);
  for (Var v : kSpatialVars) f.add(BasisForm::d(v), n[index_of(v)]);
  return NormalForm(BoundaryKind::SpatialX, std::move(f), 0);
}

NormalForm NormalForm::initial_time(const Rational& t0) {
  return NormalForm(BoundaryKind::InitialTime, KForm::single(BasisForm::d(Var::T), PolyField(-1)), t0);
}

NormalForm NormalForm::final_time(const Rational& T) {
  return NormalForm(BoundaryKind::FinalTime, KForm::single(BasisForm::d(Var::T), PolyField(1)), T);
}

KForm wedge_trace(const NormalForm& n, const KForm& w) {
  KForm out = wedge_padded(n.form(), w);
  if (n.kind() != BoundaryKind::SpatialX) out = substitute(out, Var::T, n.time());
  return out;
}

KForm artificial_bc(const KForm& w, const MaterialParams& m, const Rational& T) {
  if (w.degree() < 0 || w.degree() > 3) {
    throw std::invalid_argument("artificial boundary condition needs a form of degree 0..3");
  }
  const KForm inner = hodge_star(scaled_hodge_star(exterior_derivative(w), m));
  return substitute(interior_product_nT(inner), Var::T, T);
}

bool BoundaryReport::all_verified() const {
  for (const auto& c : conditions) {
    if (!c.reduction_verified) return false;
  }
  return true;
}

namespace {

// Classical lateral trace: n u (k=0), n x u (k=1), n . u (k=2), nothing (k=3).
KForm classical_lateral(int k, const vc::Vec3& n, std::span<const PolyField> u) {
  switch (k) {
    case 0: {
      KForm out(1);
      for (Var v : kSpatialVars) out.add(BasisForm::d(v), n[index_of(v)] * u[0]);
      return out;
    }
    case 1: {
      const vc::Vec3 c = vc::cross(n, {u[0], u[1], u[2]});
      KForm out(2);
      const auto bases = display_bases(2);
      for (int i = 0; i < 3; ++i) out.add(bases[i].basis, bases[i].sign > 0 ? c[i] : -c[i]);
      return out;
    }
    case 2: return KForm::single(parse_basis("dx^dy^dz").second, vc::dot(n, {u[0], u[1], u[2]}));
    default: return KForm(k + 1);
  }
}

const char* lateral_label(int k) {
  switch (k) {
    case 0: return "u = 0 on Gamma_x";
    case 1: return "n x u = 0 on Gamma_x";
    case 2: return "u . n = 0 on Gamma_x";
    default: return "not applicable";
  }
}

}  // namespace

BoundaryReport boundary_report(int k, std::span<const PolyField> u, std::span<const PolyField> u_t0,
                               const MaterialParams& m, const Rational& t0, const Rational& T) {
  if (k < 0 || k > 3) throw std::invalid_argument("boundary report needs degree 0..3");
  const KForm uk = build_solution_form(k, u);
  const KForm u0 = build_solution_form(k, u_t0);
  require_dt_free(uk);

  BoundaryReport report;
  report.degree = k;

  // Lateral: axis normals plus one curved polynomial normal.
  {
    BoundaryCondition& c = report.conditions[0];
    c.name = "x-BC";
    c.label = lateral_label(k);
    c.applicable = k < 3;
    const PolyField x = PolyField::variable(Var::X), y = PolyField::variable(Var::Y),
                    z = PolyField::variable(Var::Z);
    const std::array<vc::Vec3, 4> normals{vc::Vec3{1, 0, 0}, vc::Vec3{0, 1, 0}, vc::Vec3{0, 0, 1},
                                          vc::Vec3{x + 1, 2 - y, z * 3}};
    c.reduction_verified = true;
    for (const auto& n : normals) {
      const KForm trace = wedge_trace(NormalForm::spatial(n), uk);
      if (!(trace == classical_lateral(k, n, u))) c.reduction_verified = false;
    }
    c.residual = KForm(k + 1);
  }

  // Initial time: -dt ^ u at t0 is -(-1)^k u(x,t0) ^ dt.
  {
    BoundaryCondition& c = report.conditions[1];
    c.name = "t0-BC";
    c.label = "u(x,t0) = u_t0(x)";
    const NormalForm n = NormalForm::initial_time(t0);
    const KForm trace = wedge_trace(n, uk);
    KForm classical(k + 1);
    const Rational s = k % 2 == 0 ? -1 : 1;
    for (const auto& [b, coeff] : uk.components()) {
      classical.add(BasisForm(b.mask() | BasisForm::d(Var::T).mask()), coeff.substitute(Var::T, t0) * PolyField(s));
    }
    c.reduction_verified = trace == classical;
    c.residual = trace - wedge_trace(n, u0);
    c.satisfied = c.residual.is_zero();
  }

  // Final time: iota_{n_T}(* *_alpha d u) = -eps u_t.
  {
    BoundaryCondition& c = report.conditions[2];
    c.name = "eps-BC";
    c.label = "eps u_t(x,T) = 0";
    const KForm computed = artificial_bc(uk, m, T);
    KForm classical(k);
    for (const auto& [b, coeff] : uk.components()) {
      classical.add(b, coeff.derivative(Var::T).substitute(Var::T, T) * PolyField(-m.epsilon()));
    }
    c.reduction_verified = computed == classical;
    c.residual = computed;
    c.satisfied = computed.is_zero();
  }
  return report;
}

}  // namespace hodge4d
