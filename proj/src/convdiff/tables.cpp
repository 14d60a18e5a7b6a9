#include "hodge4d/tables.hpp"

#include <sstream>
#include <stdexcept>

#include "hodge4d/forms.hpp"

namespace hodge4d {

const std::vector<HodgeTableEntry>& reference_hodge_table() {
  static const std::vector<HodgeTableEntry> table{
      {"1", "dx^dy^dz^dt", "alpha dx^dy^dz^dt"},
      {"dx", "dy^dz^dt", "alpha dy^dz^dt"},
      {"dy", "dz^dx^dt", "alpha dz^dx^dt"},
      {"dz", "dx^dy^dt", "alpha dx^dy^dt"},
      {"dt", "-dx^dy^dz", "-eps dx^dy^dz"},
      {"dy^dz", "dx^dt", "alpha dx^dt"},
      {"dz^dx", "dy^dt", "alpha dy^dt"},
      {"dx^dy", "dz^dt", "alpha dz^dt"},
      {"dx^dt", "dy^dz", "eps dy^dz"},
      {"dy^dt", "dz^dx", "eps dz^dx"},
      {"dz^dt", "dx^dy", "eps dx^dy"},
      {"dx^dy^dz", "dt", "alpha dt"},
      {"dy^dz^dt", "-dx", "-eps dx"},
      {"dz^dx^dt", "-dy", "-eps dy"},
      {"dx^dy^dt", "-dz", "-eps dz"},
      {"dx^dy^dz^dt", "1", "eps"},
  };
  return table;
}

namespace {

// "[-][alpha|eps] basis" -> single-component form.
KForm parse_entry(const std::string& text, const Rational& alpha, const Rational& eps) {
  std::istringstream in(text);
  std::vector<std::string> tokens;
  for (std::string tok; in >> tok;) tokens.push_back(tok);
  if (tokens.empty() || tokens.size() > 2) throw std::invalid_argument("bad table entry '" + text + "'");

  Rational coeff = 1;
  if (tokens[0].front() == '-') {
    coeff = -1;
    tokens[0].erase(0, 1);
  }
  std::string basis_text = tokens.back();
  const std::string factor = tokens.size() == 2 ? tokens[0] : std::string();
  if (tokens.size() == 1 && (basis_text == "alpha" || basis_text == "eps")) {
    coeff *= basis_text == "alpha" ? alpha : eps;
    basis_text = "1";
  } else if (factor == "alpha") {
    coeff *= alpha;
  } else if (factor == "eps") {
    coeff *= eps;
  } else if (!factor.empty()) {
    throw std::invalid_argument("unknown factor '" + factor + "' in table entry '" + text + "'");
  }

  const auto [sign, basis] = parse_basis(basis_text);
  if (sign == 0) throw std::invalid_argument("degenerate basis in table entry '" + text + "'");
  return KForm::single(basis, PolyField(coeff * sign));
}

// Renders a single-component form in display orientation, naming alpha/eps.
std::string render(const KForm& w, const Rational& alpha, const Rational& eps) {
  if (w.is_zero()) return "0";
  std::string out;
  for (const auto& [b, c] : w.components()) {
    const DisplayBasis d = display_basis(b);
    Rational v = *c.as_constant() * d.sign;
    std::string term = v < 0 ? "-" : "";
    if (v < 0) v = -v;
    std::string factor;
    if (v == alpha) {
      factor = "alpha";
    } else if (v == eps) {
      factor = "eps";
    } else if (v != 1) {
      factor = to_string(v);
    }
    if (b.degree() == 0) {
      term += factor.empty() ? "1" : factor;
    } else {
      term += factor.empty() ? d.name : factor + " " + d.name;
    }
    if (!out.empty()) out += " + ";
    out += term;
  }
  return out;
}

}  // namespace

std::vector<HodgeCell> verify_hodge_table(const std::vector<HodgeTableEntry>& expected, const Rational& alpha,
                                          const Rational& eps) {
  if (alpha == eps || abs(alpha) == 1 || abs(eps) == 1) {
    throw std::invalid_argument("table check needs alpha != eps and neither equal to +-1");
  }
  const MaterialParams m(alpha, eps);
  std::vector<HodgeCell> cells;
  for (const auto& row : expected) {
    const KForm input = parse_entry(row.input, alpha, eps);
    const KForm star = hodge_star(input);
    const KForm scaled = scaled_hodge_star(input, m);
    const KForm want_star = parse_entry(row.star, alpha, eps);
    const KForm want_scaled = parse_entry(row.scaled_star, alpha, eps);
    cells.push_back({row.input, "*", row.star, render(star, alpha, eps), star == want_star});
    cells.push_back({row.input, "*_alpha", row.scaled_star, render(scaled, alpha, eps), scaled == want_scaled});
  }
  return cells;
}

}  // namespace hodge4d
