#include "hodge4d/poly_field.hpp"

#include <cctype>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace hodge4d {

char var_name(Var v) {
  static constexpr char names[] = {'x', 'y', 'z', 't'};
  return names[index_of(v)];
}

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

PolyField::PolyField(const Rational& c) {
  if (sgn(c) != 0) terms_.emplace(Exponents{0, 0, 0, 0}, c);
}

PolyField::PolyField(long c) : PolyField(Rational(c)) {}

PolyField PolyField::variable(Var v) {
  Exponents e{0, 0, 0, 0};
  e[index_of(v)] = 1;
  return monomial(1, e);
}

PolyField PolyField::monomial(const Rational& c, const Exponents& e) {
  PolyField p;
  p.add_term(e, c);
  return p;
}

void PolyField::add_term(const Exponents& e, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

bool PolyField::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0, 0, 0});
}

std::optional<Rational> PolyField::as_constant() const {
  if (!is_constant()) return std::nullopt;
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

Rational PolyField::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

int PolyField::total_degree() const {
  int deg = -1;
  for (const auto& [e, c] : terms_) {
    deg = std::max(deg, static_cast<int>(e[0] + e[1] + e[2] + e[3]));
  }
  return deg;
}

bool PolyField::depends_on(Var v) const {
  for (const auto& [e, c] : terms_) {
    if (e[index_of(v)] != 0) return true;
  }
  return false;
}

PolyField PolyField::derivative(Var v) const {
  const int i = index_of(v);
  PolyField out;
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exponents d = e;
    --d[i];
    out.add_term(d, c * e[i]);
  }
  return out;
}

PolyField PolyField::antiderivative(Var v) const {
  const int i = index_of(v);
  PolyField out;
  for (const auto& [e, c] : terms_) {
    Exponents a = e;
    ++a[i];
    out.add_term(a, c / a[i]);
  }
  return out;
}

PolyField PolyField::substitute(Var v, const Rational& value) const {
  const int i = index_of(v);
  PolyField out;
  for (const auto& [e, c] : terms_) {
    Exponents s = e;
    s[i] = 0;
    Rational factor = 1;
    for (unsigned k = 0; k < e[i]; ++k) factor *= value;
    out.add_term(s, c * factor);
  }
  return out;
}

Rational PolyField::evaluate(const std::array<Rational, 4>& point) const {
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (int i = 0; i < 4; ++i) {
      for (unsigned k = 0; k < e[i]; ++k) term *= point[i];
    }
    sum += term;
  }
  return sum;
}

double PolyField::evaluate(const std::array<double, 4>& point) const {
  double sum = 0.0;
  for (const auto& [e, c] : terms_) {
    double term = c.get_d();
    for (int i = 0; i < 4; ++i) term *= std::pow(point[i], static_cast<int>(e[i]));
    sum += term;
  }
  return sum;
}

std::string PolyField::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  // Highest total degree first reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool constant = e == Exponents{0, 0, 0, 0};
    Rational mag = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    bool need_star = false;
    if (constant || mag != 1) {
      out += mag.get_str();
      need_star = true;
    }
    for (int i = 0; i < 4; ++i) {
      if (e[i] == 0) continue;
      if (need_star) out += "*";
      out += var_name(static_cast<Var>(i));
      if (e[i] > 1) out += "^" + std::to_string(e[i]);
      need_star = true;
    }
  }
  return out;
}

PolyField& PolyField::operator+=(const PolyField& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

PolyField& PolyField::operator-=(const PolyField& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

PolyField& PolyField::operator*=(const PolyField& rhs) {
  *this = *this * rhs;
  return *this;
}

PolyField operator*(const PolyField& lhs, const PolyField& rhs) {
  PolyField out;
  for (const auto& [ea, ca] : lhs.terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      Exponents e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]};
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

PolyField operator-(const PolyField& p) {
  PolyField out;
  for (const auto& [e, c] : p.terms_) out.terms_.emplace(e, -c);
  return out;
}

std::ostream& operator<<(std::ostream& os, const PolyField& p) { return os << p.to_string(); }

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  PolyField parse_all() {
    PolyField p = parse_sum();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("cannot parse polynomial '" + std::string(s_) + "' at " +
                                std::to_string(pos_) + ": " + why);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  PolyField parse_sum() {
    PolyField sum;
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    PolyField term = parse_product();
    sum += negate ? -term : term;
    while (true) {
      if (accept('+')) sum += parse_product();
      else if (accept('-')) sum -= parse_product();
      else break;
    }
    return sum;
  }

  PolyField parse_product() {
    PolyField p = parse_power();
    while (true) {
      if (accept('*')) {
        p *= parse_power();
      } else if (accept('/')) {
        PolyField d = parse_power();
        auto c = d.as_constant();
        if (!c || sgn(*c) == 0) fail("division only by nonzero constants");
        p *= PolyField(Rational(1) / *c);
      } else {
        break;
      }
    }
    return p;
  }

  PolyField parse_power() {
    PolyField base = parse_atom();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected integer exponent");
      const int n = std::stoi(std::string(s_.substr(start, pos_ - start)));
      PolyField r(1);
      for (int i = 0; i < n; ++i) r *= base;
      return r;
    }
    return base;
  }

  PolyField parse_atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      PolyField inner = parse_sum();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == '-') {
      ++pos_;
      return -parse_power();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return PolyField(Rational(std::string(s_.substr(start, pos_ - start))));
    }
    switch (c) {
      case 'x': ++pos_; return PolyField::variable(Var::X);
      case 'y': ++pos_; return PolyField::variable(Var::Y);
      case 'z': ++pos_; return PolyField::variable(Var::Z);
      case 't': ++pos_; return PolyField::variable(Var::T);
      default: fail(std::string("unknown symbol '") + c + "'");
    }
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

PolyField PolyField::parse(std::string_view text) { return Parser(text).parse_all(); }

}  // namespace hodge4d
