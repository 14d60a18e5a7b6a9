#include "hodge4d/exp_poly_field.hpp"

#include <stdexcept>

namespace hodge4d {

ExpPolyField::ExpPolyField(PolyField amplitude) : amplitude_(std::move(amplitude)) {}

ExpPolyField::ExpPolyField(PolyField weight, PolyField amplitude)
    : weight_(std::move(weight)), amplitude_(std::move(amplitude)) {
  if (amplitude_.is_zero()) weight_ = PolyField();
}

std::optional<PolyField> ExpPolyField::as_poly() const {
  if (weight_.is_zero() || amplitude_.is_zero()) return amplitude_;
  return std::nullopt;
}

ExpPolyField ExpPolyField::derivative(Var v) const {
  return {weight_, amplitude_ * weight_.derivative(v) + amplitude_.derivative(v)};
}

std::string ExpPolyField::to_string() const {
  if (weight_.is_zero()) return amplitude_.to_string();
  return "exp(" + weight_.to_string() + ")*(" + amplitude_.to_string() + ")";
}

ExpPolyField& ExpPolyField::operator+=(const ExpPolyField& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (!(weight_ == rhs.weight_)) {
    throw std::domain_error("sum of exponential fields with different weights: exp(" +
                            weight_.to_string() + ") vs exp(" + rhs.weight_.to_string() + ")");
  }
  amplitude_ += rhs.amplitude_;
  if (amplitude_.is_zero()) weight_ = PolyField();
  return *this;
}

ExpPolyField& ExpPolyField::operator-=(const ExpPolyField& rhs) { return *this += -rhs; }

ExpPolyField operator*(const ExpPolyField& a, const ExpPolyField& b) {
  return {a.weight_ + b.weight_, a.amplitude_ * b.amplitude_};
}

bool operator==(const ExpPolyField& a, const ExpPolyField& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.weight_ == b.weight_ && a.amplitude_ == b.amplitude_;
}

}  // namespace hodge4d
