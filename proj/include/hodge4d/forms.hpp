#pragma once

#include <optional>
#include <stdexcept>

#include "hodge4d/kform.hpp"
#include "hodge4d/material.hpp"

namespace hodge4d {

/// a ^ b. Returns std::nullopt when deg a + deg b exceeds 4: no such form
/// exists and the product vanishes identically.
template <FormCoefficient C>
std::optional<BasicForm<C>> wedge(const BasicForm<C>& a, const BasicForm<C>& b) {
  const int degree = a.degree() + b.degree();
  if (degree > 4 || !a.in_complex() || !b.in_complex()) return std::nullopt;
  BasicForm<C> out(degree);
  for (const auto& [ba, ca] : a.components()) {
    for (const auto& [bb, cb] : b.components()) {
      const int s = wedge_sign(ba, bb);
      if (s == 0) continue;
      C prod = ca * cb;
      out.add(BasisForm(ba.mask() | bb.mask()), s > 0 ? prod : C(-prod));
    }
  }
  return out;
}

/// a ^ b, padded: a product of degree 5 is returned as the degree-5 zero form.
template <FormCoefficient C>
BasicForm<C> wedge_padded(const BasicForm<C>& a, const BasicForm<C>& b) {
  if (auto w = wedge(a, b)) return *w;
  const int degree = a.degree() + b.degree();
  if (degree <= kMaxPaddedDegree) return BasicForm<C>(degree);
  throw std::out_of_range("wedge product of degree " + std::to_string(degree));
}

/// Exterior derivative d_k. Degree -1 maps to the zero 0-form; degree 4 to
/// the zero 5-form. Applying d to a 5-form is an error.
template <FormCoefficient C>
BasicForm<C> exterior_derivative(const BasicForm<C>& w) {
  if (w.degree() >= kMaxPaddedDegree) throw std::out_of_range("exterior derivative of a 5-form");
  BasicForm<C> out(w.degree() + 1);
  if (!w.in_complex() || w.degree() == 4) return out;
  for (const auto& [b, c] : w.components()) {
    for (Var v : kAllVars) {
      if (b.contains(v)) continue;
      const BasisForm dv = BasisForm::d(v);
      C dc = c.derivative(v);
      out.add(BasisForm(dv.mask() | b.mask()), wedge_sign(dv, b) > 0 ? dc : C(-dc));
    }
  }
  return out;
}

/// Euclidean Hodge star on (x, y, z, t): e_I -> sign(I, I^c) e_{I^c}.
template <FormCoefficient C>
BasicForm<C> hodge_star(const BasicForm<C>& w) {
  BasicForm<C> out(4 - w.degree());
  for (const auto& [b, c] : w.components()) {
    const BasisForm bc = b.complement();
    out.add(bc, wedge_sign(b, bc) > 0 ? c : C(-c));
  }
  return out;
}

/// Scale applied by the scaled star to a given input basis: epsilon when the
/// basis contains dt, alpha otherwise.
inline PolyField star_scale(BasisForm input, const MaterialParams& m) {
  return input.has_dt() ? PolyField(m.epsilon()) : m.alpha_coefficient();
}

/// Scaled Hodge star: the Euclidean star with each component multiplied by
/// alpha (dt-free input basis) or epsilon (input basis containing dt).
template <FormCoefficient C>
BasicForm<C> scaled_hodge_star(const BasicForm<C>& w, const MaterialParams& m) {
  BasicForm<C> out(4 - w.degree());
  for (const auto& [b, c] : w.components()) {
    const BasisForm bc = b.complement();
    C scaled = c * star_scale(b, m);
    out.add(bc, wedge_sign(b, bc) > 0 ? scaled : C(-scaled));
  }
  return out;
}

/// Result of a codifferential. For a 0-form input the value is the zero
/// (-1)-form and below_complex is set.
template <FormCoefficient C>
struct Codifferential {
  BasicForm<C> form;
  bool below_complex = false;
};

/// delta_{1 alpha} = -(*) d (*_alpha), lowering degree by one.
template <FormCoefficient C>
Codifferential<C> codifferential_1a(const BasicForm<C>& w, const MaterialParams& m) {
  if (w.degree() < 0) throw std::out_of_range("codifferential of a (-1)-form");
  return {-hodge_star(exterior_derivative(scaled_hodge_star(w, m))), w.degree() == 0};
}

/// delta_{alpha 1} = -(*_alpha) d (*).
template <FormCoefficient C>
Codifferential<C> codifferential_a1(const BasicForm<C>& w, const MaterialParams& m) {
  if (w.degree() < 0) throw std::out_of_range("codifferential of a (-1)-form");
  return {-scaled_hodge_star(exterior_derivative(hodge_star(w)), m), w.degree() == 0};
}

/// Contraction with the terminal normal n_T = dt, removing a trailing dt:
/// w dx^{i1}^...^dx^{ik}^dt -> w dx^{i1}^...^dx^{ik}; dt-free terms vanish.
/// In canonical ordering dt is already last, so no sign arises.
template <FormCoefficient C>
BasicForm<C> interior_product_nT(const BasicForm<C>& w) {
  if (w.degree() < 0) throw std::out_of_range("interior product of a (-1)-form");
  BasicForm<C> out(w.degree() - 1);
  for (const auto& [b, c] : w.components()) {
    if (b.has_dt()) out.add(b.without(Var::T), c);
  }
  return out;
}

}  // namespace hodge4d
