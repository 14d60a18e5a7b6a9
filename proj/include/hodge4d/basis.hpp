#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hodge4d/poly_field.hpp"

namespace hodge4d {

/// Wedge-product basis element dx^{i1} ^ ... ^ dx^{ik}, stored as a 4-bit mask
/// over (x, y, z, t). The product is always taken in ascending order
/// x < y < z < t; any other ordering is expressed through a sign.
class BasisForm {
 public:
  constexpr BasisForm() = default;
  constexpr explicit BasisForm(std::uint8_t mask) : mask_(mask & 0xF) {}

  static constexpr BasisForm one() { return BasisForm(0); }
  static constexpr BasisForm d(Var v) { return BasisForm(std::uint8_t(1u << index_of(v))); }
  static constexpr BasisForm volume() { return BasisForm(0xF); }

  constexpr std::uint8_t mask() const { return mask_; }
  constexpr int degree() const { return std::popcount(static_cast<unsigned>(mask_)); }
  constexpr bool contains(Var v) const { return (mask_ >> index_of(v)) & 1u; }
  constexpr bool has_dt() const { return contains(Var::T); }
  constexpr BasisForm complement() const { return BasisForm(std::uint8_t(~mask_ & 0xF)); }
  constexpr BasisForm without(Var v) const {
    return BasisForm(std::uint8_t(mask_ & ~(1u << index_of(v))));
  }

  /// Canonical name, e.g. "dx^dz" or "1".
  std::string name() const;

  /// All basis forms of degree k in ascending mask order.
  static std::vector<BasisForm> of_degree(int k);

  friend constexpr auto operator<=>(BasisForm, BasisForm) = default;

 private:
  std::uint8_t mask_ = 0;
};

/// Sign s with e_a ^ e_b = s * e_{a|b}; zero when the two share a differential.
constexpr int wedge_sign(BasisForm a, BasisForm b) {
  if (a.mask() & b.mask()) return 0;
  int inversions = 0;
  for (int i = 0; i < 4; ++i) {
    if (!((a.mask() >> i) & 1u)) continue;
    for (int j = 0; j < i; ++j) {
      if ((b.mask() >> j) & 1u) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

/// Parses a wedge string in any order ("dz^dx", "dt", "1") into a canonical
/// basis form and the permutation sign relating the two. A repeated
/// differential yields sign 0. Throws std::invalid_argument on bad input.
std::pair<int, BasisForm> parse_basis(std::string_view text);

/// Orientation used for display in the classical tables: 2-forms are written
/// cyclically (dy^dz, dz^dx, dx^dy, ...) and spatial 3-forms likewise.
struct DisplayBasis {
  std::string name;  // e.g. "dz^dx"
  int sign;          // display element = sign * canonical element
  BasisForm basis;
};

/// Table-ordered display bases for degree k.
std::vector<DisplayBasis> display_bases(int k);
DisplayBasis display_basis(BasisForm b);

}  // namespace hodge4d
