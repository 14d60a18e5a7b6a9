#include "hodge4d/material.hpp"

namespace hodge4d {

MaterialParams::MaterialParams(Rational alpha, Rational epsilon, std::array<PolyField, 3> beta)
    : alpha_(std::move(alpha)), epsilon_(std::move(epsilon)), beta_(std::move(beta)) {
  if (sgn(alpha_) <= 0) throw ParameterError("alpha must be positive, got " + alpha_.get_str());
  if (sgn(epsilon_) <= 0) throw ParameterError("epsilon must be positive, got " + epsilon_.get_str());
}

bool MaterialParams::has_convection() const {
  return !(beta_[0].is_zero() && beta_[1].is_zero() && beta_[2].is_zero());
}

MaterialParams MaterialParams::with_alpha_field(const PolyField& alpha) const {
  if (alpha.depends_on(Var::T)) {
    throw ParameterError("alpha field must be time-independent: " + alpha.to_string());
  }
  MaterialParams out = *this;
  if (auto c = alpha.as_constant()) {
    if (sgn(*c) <= 0) throw ParameterError("alpha must be positive, got " + c->get_str());
    out.alpha_ = *c;
    out.alpha_field_.reset();
  } else {
    out.alpha_field_ = alpha;
  }
  return out;
}

PolyField MaterialParams::alpha_coefficient() const {
  return alpha_field_ ? *alpha_field_ : PolyField(alpha_);
}

}  // namespace hodge4d
