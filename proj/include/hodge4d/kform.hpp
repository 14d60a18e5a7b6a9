#pragma once

#include <concepts>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>

#include "hodge4d/basis.hpp"
#include "hodge4d/exp_poly_field.hpp"
#include "hodge4d/poly_field.hpp"

namespace hodge4d {

template <class C>
concept FormCoefficient = std::regular<C> && requires(const C& a, const PolyField& p, Var v) {
  { a + a } -> std::convertible_to<C>;
  { a - a } -> std::convertible_to<C>;
  { -a } -> std::convertible_to<C>;
  { a * p } -> std::convertible_to<C>;
  { a * a } -> std::convertible_to<C>;
  { a.derivative(v) } -> std::convertible_to<C>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.to_string() } -> std::convertible_to<std::string>;
};

inline constexpr int kMinPaddedDegree = -1;
inline constexpr int kMaxPaddedDegree = 5;

/// A differential form of fixed degree: a finite map BasisForm -> coefficient.
///
/// Degrees 0..4 carry components. Degrees -1 and 5 are admitted as the
/// identically zero forms just outside the complex, so compositions such as
/// d(4-form) or a codifferential of a 0-form stay total.
template <FormCoefficient C>
class BasicForm {
 public:
  using Coefficient = C;
  using ComponentMap = std::map<BasisForm, C>;

  explicit BasicForm(int degree = 0) : degree_(degree) {
    if (degree < kMinPaddedDegree || degree > kMaxPaddedDegree) {
      throw std::out_of_range("form degree " + std::to_string(degree) + " outside [-1, 5]");
    }
  }

  static BasicForm zero(int degree) { return BasicForm(degree); }
  static BasicForm scalar(const C& c) {
    BasicForm f(0);
    f.add(BasisForm::one(), c);
    return f;
  }
  static BasicForm single(BasisForm b, const C& c) {
    BasicForm f(b.degree());
    f.add(b, c);
    return f;
  }

  int degree() const { return degree_; }
  bool in_complex() const { return degree_ >= 0 && degree_ <= 4; }
  const ComponentMap& components() const { return components_; }
  bool is_zero() const { return components_.empty(); }

  C operator[](BasisForm b) const {
    auto it = components_.find(b);
    return it == components_.end() ? C{} : it->second;
  }

  /// Accumulates c into the component on b.
  void add(BasisForm b, const C& c) {
    if (b.degree() != degree_) {
      throw std::invalid_argument("basis " + b.name() + " does not have degree " + std::to_string(degree_));
    }
    if (c.is_zero()) return;
    auto [it, inserted] = components_.try_emplace(b, c);
    if (!inserted) {
      it->second = it->second + c;
      if (it->second.is_zero()) components_.erase(it);
    }
  }

  template <class F>
  BasicForm map(F&& f) const {
    BasicForm out(degree_);
    for (const auto& [b, c] : components_) out.add(b, f(c));
    return out;
  }

  BasicForm& operator+=(const BasicForm& rhs) {
    require_same_degree(rhs);
    for (const auto& [b, c] : rhs.components_) add(b, c);
    return *this;
  }
  BasicForm& operator-=(const BasicForm& rhs) {
    require_same_degree(rhs);
    for (const auto& [b, c] : rhs.components_) add(b, -c);
    return *this;
  }

  friend BasicForm operator+(BasicForm a, const BasicForm& b) { return a += b; }
  friend BasicForm operator-(BasicForm a, const BasicForm& b) { return a -= b; }
  friend BasicForm operator-(const BasicForm& a) {
    return a.map([](const C& c) { return C(-c); });
  }
  friend BasicForm operator*(const BasicForm& a, const C& s) {
    return a.map([&](const C& c) { return C(c * s); });
  }
  friend BasicForm operator*(const C& s, const BasicForm& a) { return a * s; }

  friend bool operator==(const BasicForm& a, const BasicForm& b) {
    return a.degree_ == b.degree_ && a.components_ == b.components_;
  }

  std::string to_string() const {
    if (components_.empty()) return "0";
    std::string out;
    for (const auto& [b, c] : components_) {
      if (!out.empty()) out += " + ";
      out += "(" + c.to_string() + ")";
      if (b.degree() > 0) out += " " + b.name();
    }
    return out;
  }

 private:
  void require_same_degree(const BasicForm& rhs) const {
    if (rhs.degree_ != degree_) {
      throw std::invalid_argument("adding forms of degree " + std::to_string(degree_) + " and " +
                                  std::to_string(rhs.degree_));
    }
  }

  int degree_;
  ComponentMap components_;
};

template <FormCoefficient C>
std::ostream& operator<<(std::ostream& os, const BasicForm<C>& w) {
  return os << w.to_string();
}

using KForm = BasicForm<PolyField>;
using ExpKForm = BasicForm<ExpPolyField>;

/// Lifts a polynomial form to the exponential coefficient class (weight 0).
inline ExpKForm to_exp_form(const KForm& w) {
  ExpKForm out(w.degree());
  for (const auto& [b, c] : w.components()) out.add(b, ExpPolyField(c));
  return out;
}

/// Drops a zero-weight exponential form back to polynomial coefficients.
/// Throws std::domain_error if any component still carries a weight.
inline KForm to_poly_form(const ExpKForm& w) {
  KForm out(w.degree());
  for (const auto& [b, c] : w.components()) {
    auto p = c.as_poly();
    if (!p) throw std::domain_error("component on " + b.name() + " keeps weight exp(" + c.weight().to_string() + ")");
    out.add(b, *p);
  }
  return out;
}

/// True if no dt-containing component is present.
template <FormCoefficient C>
bool is_dt_free(const BasicForm<C>& w) {
  for (const auto& [b, c] : w.components()) {
    if (b.has_dt()) return false;
  }
  return true;
}

/// Restriction to the dt-containing (or dt-free) components.
template <FormCoefficient C>
BasicForm<C> dt_part(const BasicForm<C>& w, bool with_dt = true) {
  BasicForm<C> out(w.degree());
  for (const auto& [b, c] : w.components()) {
    if (b.has_dt() == with_dt) out.add(b, c);
  }
  return out;
}

/// Substitutes a coordinate value into every coefficient.
inline KForm substitute(const KForm& w, Var v, const Rational& value) {
  return w.map([&](const PolyField& c) { return c.substitute(v, value); });
}

}  // namespace hodge4d
