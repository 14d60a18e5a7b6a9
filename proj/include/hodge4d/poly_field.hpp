#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hodge4d {

using Rational = mpq_class;

/// Space-time coordinates, in canonical order.
enum class Var : std::uint8_t { X = 0, Y = 1, Z = 2, T = 3 };

inline constexpr std::array<Var, 4> kAllVars{Var::X, Var::Y, Var::Z, Var::T};
inline constexpr std::array<Var, 3> kSpatialVars{Var::X, Var::Y, Var::Z};

constexpr int index_of(Var v) { return static_cast<int>(v); }
char var_name(Var v);

Rational make_rational(long num, long den = 1);
std::string to_string(const Rational& q);

/// Exponent tuple (e_x, e_y, e_z, e_t) of a monomial.
using Exponents = std::array<unsigned, 4>;

/// Exact multivariate polynomial in (x, y, z, t) with rational coefficients.
///
/// Terms with zero coefficient are never stored, so structural equality is
/// value equality.
class PolyField {
 public:
  using TermMap = std::map<Exponents, Rational>;

  PolyField() = default;
  PolyField(const Rational& c);  // NOLINT: constants promote implicitly
  PolyField(long c);             // NOLINT

  static PolyField variable(Var v);
  static PolyField monomial(const Rational& c, const Exponents& e);

  /// Parses sums of products such as "x^2*y - 3/2*t + 1".
  /// Throws std::invalid_argument on malformed input.
  static PolyField parse(std::string_view text);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::optional<Rational> as_constant() const;
  Rational coefficient(const Exponents& e) const;
  int total_degree() const;
  bool depends_on(Var v) const;

  PolyField derivative(Var v) const;
  /// Antiderivative with zero integration constant.
  PolyField antiderivative(Var v) const;
  PolyField substitute(Var v, const Rational& value) const;

  Rational evaluate(const std::array<Rational, 4>& point) const;
  double evaluate(const std::array<double, 4>& point) const;

  std::string to_string() const;

  PolyField& operator+=(const PolyField& rhs);
  PolyField& operator-=(const PolyField& rhs);
  PolyField& operator*=(const PolyField& rhs);

  friend PolyField operator+(PolyField lhs, const PolyField& rhs) { return lhs += rhs; }
  friend PolyField operator-(PolyField lhs, const PolyField& rhs) { return lhs -= rhs; }
  friend PolyField operator*(const PolyField& lhs, const PolyField& rhs);
  friend PolyField operator-(const PolyField& p);
  friend bool operator==(const PolyField& a, const PolyField& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(const Exponents& e, const Rational& c);

  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const PolyField& p);

inline PolyField partial(const PolyField& p, Var v) { return p.derivative(v); }

}  // namespace hodge4d
