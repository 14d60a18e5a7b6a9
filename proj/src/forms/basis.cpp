#include "hodge4d/basis.hpp"

#include <stdexcept>

namespace hodge4d {

std::string BasisForm::name() const {
  if (mask_ == 0) return "1";
  std::string out;
  for (Var v : kAllVars) {
    if (!contains(v)) continue;
    if (!out.empty()) out += "^";
    out += "d";
    out += var_name(v);
  }
  return out;
}

std::vector<BasisForm> BasisForm::of_degree(int k) {
  std::vector<BasisForm> out;
  for (unsigned m = 0; m < 16; ++m) {
    BasisForm b(static_cast<std::uint8_t>(m));
    if (b.degree() == k) out.push_back(b);
  }
  return out;
}

std::pair<int, BasisForm> parse_basis(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text == "1") return {1, BasisForm::one()};

  std::vector<int> order;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find('^', pos);
    std::string_view tok = trim(text.substr(pos, next == std::string_view::npos ? text.npos : next - pos));
    if (tok.size() != 2 || tok[0] != 'd') {
      throw std::invalid_argument("bad differential '" + std::string(tok) + "' in '" + std::string(text) + "'");
    }
    switch (tok[1]) {
      case 'x': order.push_back(0); break;
      case 'y': order.push_back(1); break;
      case 'z': order.push_back(2); break;
      case 't': order.push_back(3); break;
      default: throw std::invalid_argument("unknown coordinate in '" + std::string(text) + "'");
    }
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }

  std::uint8_t mask = 0;
  int inversions = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (mask & (1u << order[i])) return {0, BasisForm(mask)};
    mask |= static_cast<std::uint8_t>(1u << order[i]);
    for (std::size_t j = 0; j < i; ++j) {
      if (order[j] > order[i]) ++inversions;
    }
  }
  return {inversions % 2 == 0 ? 1 : -1, BasisForm(mask)};
}

std::vector<DisplayBasis> display_bases(int k) {
  static const std::vector<std::vector<std::string>> names{
      {"1"},
      {"dx", "dy", "dz", "dt"},
      {"dy^dz", "dz^dx", "dx^dy", "dx^dt", "dy^dt", "dz^dt"},
      {"dx^dy^dz", "dy^dz^dt", "dz^dx^dt", "dx^dy^dt"},
      {"dx^dy^dz^dt"},
  };
  if (k < 0 || k > 4) return {};
  std::vector<DisplayBasis> out;
  for (const auto& n : names[k]) {
    auto [sign, basis] = parse_basis(n);
    out.push_back({n, sign, basis});
  }
  return out;
}

DisplayBasis display_basis(BasisForm b) {
  for (auto& d : display_bases(b.degree())) {
    if (d.basis == b) return d;
  }
  return {b.name(), 1, b};
}

}  // namespace hodge4d
