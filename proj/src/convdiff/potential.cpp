#include "hodge4d/convdiff.hpp"

namespace hodge4d {

Potential make_potential(const ConvectionForm& b) {
  const KForm& b1 = b.b1();
  const KForm curl = exterior_derivative(b1);
  if (!curl.is_zero()) {
    std::vector<std::string> obstructions;
    std::string msg = "convection form is not closed, no potential exists; d b1 has";
    for (const auto& [basis, c] : curl.components()) {
      obstructions.push_back(basis.name() + ": " + c.to_string());
      msg += " [" + obstructions.back() + "]";
    }
    throw NoPotentialError(msg, std::move(obstructions));
  }

  // Integrate along the coordinate axes from the origin:
  // psi = int_0^x b_x(s,0,0,0) + int_0^y b_y(x,s,0,0) + int_0^z b_z(x,y,s,0) + int_0^t b_t(x,y,z,s).
  PolyField psi;
  for (int i = 0; i < 4; ++i) {
    const Var v = kAllVars[i];
    PolyField c = b1[BasisForm::d(v)];
    for (int j = i + 1; j < 4; ++j) c = c.substitute(kAllVars[j], 0);
    psi += c.antiderivative(v);
  }

  KForm check = exterior_derivative(KForm::scalar(psi));
  if (!(check == b1)) {
    throw std::logic_error("potential integration failed: d psi = " + check.to_string());
  }
  return {psi};
}

KForm exp_fitted_flux(const KForm& w, const Potential& p) {
  const ExpPolyField up(p.psi0, PolyField(1));
  const ExpPolyField down(-p.psi0, PolyField(1));
  const ExpKForm lifted = to_exp_form(w) * up;
  const ExpKForm fitted = exterior_derivative(lifted) * down;
  return to_poly_form(fitted);
}

}  // namespace hodge4d
