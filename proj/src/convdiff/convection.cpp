#include "hodge4d/convdiff.hpp"

namespace hodge4d {

ConvectionForm build_convection_form(const MaterialParams& m) {
  if (!m.alpha_is_constant()) {
    throw ParameterError("convection form needs a constant alpha; got alpha = " + m.alpha_field()->to_string());
  }
  const Rational inv_alpha = Rational(1) / m.alpha();
  KForm b1(1);
  for (Var v : kSpatialVars) b1.add(BasisForm::d(v), m.beta(index_of(v)) * PolyField(inv_alpha));
  b1.add(BasisForm::d(Var::T), PolyField(Rational(-1) / m.epsilon()));
  return ConvectionForm(std::move(b1), m);
}

KForm flux(const KForm& w, const ConvectionForm& b) {
  return exterior_derivative(w) + wedge_padded(b.b1(), w);
}

KForm hodge_laplacian(const KForm& w, const MaterialParams& m) {
  KForm up = codifferential_1a(exterior_derivative(w), m).form;
  KForm down = exterior_derivative(codifferential_a1(w, m).form);
  return up + down;
}

KForm scaled_star_of_convection(const KForm& w, const MaterialParams& m) {
  if (m.alpha_is_constant()) {
    return scaled_hodge_star(wedge_padded(build_convection_form(m).b1(), w), m);
  }
  if (!is_dt_free(w)) {
    throw ParameterError("convection with a variable alpha field requires a dt-free form");
  }
  KForm beta_flat(1);
  for (Var v : kSpatialVars) beta_flat.add(BasisForm::d(v), m.beta(index_of(v)));
  const KForm dt = KForm::single(BasisForm::d(Var::T), PolyField(1));
  return hodge_star(wedge_padded(beta_flat, w)) - hodge_star(wedge_padded(dt, w));
}

OperatorPieces unified_operator_pieces(const KForm& w, const MaterialParams& m) {
  OperatorPieces p{
      codifferential_1a(exterior_derivative(w), m).form,
      -hodge_star(exterior_derivative(scaled_star_of_convection(w, m))),
      exterior_derivative(codifferential_a1(w, m).form),
      KForm(w.degree()),
  };
  p.total = p.diffusion + p.convection + p.exact;
  return p;
}

KForm unified_operator(const KForm& w, const MaterialParams& m) {
  if (m.alpha_is_constant()) {
    // Literal composition: delta_{1a} J_k + d delta_{a1}.
    const ConvectionForm b = build_convection_form(m);
    return codifferential_1a(flux(w, b), m).form + exterior_derivative(codifferential_a1(w, m).form);
  }
  return unified_operator_pieces(w, m).total;
}

KForm build_solution_form(int k, std::span<const PolyField> fields) {
  static constexpr std::array<std::size_t, 5> expected{1, 3, 3, 1, 0};
  if (k < 0 || k > 4) throw std::invalid_argument("form degree must be 0..4");
  if (fields.size() != expected[k]) {
    throw std::invalid_argument("degree " + std::to_string(k) + " needs " + std::to_string(expected[k]) +
                                " spatial fields, got " + std::to_string(fields.size()));
  }
  KForm u(k);
  switch (k) {
    case 0: u.add(BasisForm::one(), fields[0]); break;
    case 1:
      for (Var v : kSpatialVars) u.add(BasisForm::d(v), fields[index_of(v)]);
      break;
    case 2: {
      // u1 dy^dz + u2 dz^dx + u3 dx^dy
      auto bases = display_bases(2);
      for (int i = 0; i < 3; ++i) {
        u.add(bases[i].basis, bases[i].sign > 0 ? fields[i] : -fields[i]);
      }
      break;
    }
    case 3: u.add(parse_basis("dx^dy^dz").second, fields[0]); break;
    default: break;
  }
  return u;
}

void require_dt_free(const KForm& w) {
  for (const auto& [b, c] : w.components()) {
    if (b.has_dt()) {
      throw std::invalid_argument("solution form has nonzero coefficient on " + b.name() + ": " + c.to_string());
    }
  }
}

}  // namespace hodge4d
