#pragma once

#include <optional>
#include <string>

#include "hodge4d/poly_field.hpp"

namespace hodge4d {

/// Coefficient of the form exp(weight) * amplitude, closed under
/// differentiation: d(e^p q) = e^p (q dp + dq).
///
/// Sums are only defined between fields that share a weight (or where one
/// side is zero); mixing weights throws std::domain_error. A zero amplitude
/// represents zero regardless of weight.
class ExpPolyField {
 public:
  ExpPolyField() = default;
  ExpPolyField(PolyField amplitude);  // NOLINT: PolyField promotes implicitly
  ExpPolyField(const Rational& c) : ExpPolyField(PolyField(c)) {}  // NOLINT
  ExpPolyField(PolyField weight, PolyField amplitude);

  const PolyField& weight() const { return weight_; }
  const PolyField& amplitude() const { return amplitude_; }
  bool is_zero() const { return amplitude_.is_zero(); }

  /// The plain polynomial value, when the weight is zero (or the field is zero).
  std::optional<PolyField> as_poly() const;

  ExpPolyField derivative(Var v) const;

  std::string to_string() const;

  ExpPolyField& operator+=(const ExpPolyField& rhs);
  ExpPolyField& operator-=(const ExpPolyField& rhs);

  friend ExpPolyField operator+(ExpPolyField a, const ExpPolyField& b) { return a += b; }
  friend ExpPolyField operator-(ExpPolyField a, const ExpPolyField& b) { return a -= b; }
  friend ExpPolyField operator-(const ExpPolyField& a) { return {a.weight_, -a.amplitude_}; }
  friend ExpPolyField operator*(const ExpPolyField& a, const ExpPolyField& b);
  friend bool operator==(const ExpPolyField& a, const ExpPolyField& b);

 private:
  PolyField weight_;
  PolyField amplitude_;
};

}  // namespace hodge4d
