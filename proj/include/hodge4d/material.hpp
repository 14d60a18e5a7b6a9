#pragma once

#include <array>
#include <optional>
#include <stdexcept>

#include "hodge4d/poly_field.hpp"

namespace hodge4d {

class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Spatial diffusion alpha, artificial temporal diffusion epsilon and the
/// spatial convection field beta.
///
/// alpha is a positive constant by default. A spatially varying alpha(x,y,z)
/// can be installed with with_alpha_field(); it then multiplies the scaled
/// star on dt-free inputs in place of the constant.
class MaterialParams {
 public:
  MaterialParams(Rational alpha, Rational epsilon, std::array<PolyField, 3> beta = {});

  static MaterialParams unit() { return {1, 1}; }

  const Rational& alpha() const { return alpha_; }
  const Rational& epsilon() const { return epsilon_; }
  const std::array<PolyField, 3>& beta() const { return beta_; }
  const PolyField& beta(int i) const { return beta_.at(i); }
  bool has_convection() const;

  /// Installs alpha(x, y, z). Rejects time dependence; a constant field
  /// collapses back to the constant representation.
  MaterialParams with_alpha_field(const PolyField& alpha) const;
  const std::optional<PolyField>& alpha_field() const { return alpha_field_; }
  bool alpha_is_constant() const { return !alpha_field_.has_value(); }

  /// alpha as a coefficient field (the constant or the installed field).
  PolyField alpha_coefficient() const;

 private:
  Rational alpha_;
  Rational epsilon_;
  std::array<PolyField, 3> beta_;
  std::optional<PolyField> alpha_field_;
};

}  // namespace hodge4d
