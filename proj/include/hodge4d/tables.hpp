#pragma once

#include <string>
#include <vector>

#include "hodge4d/poly_field.hpp"

namespace hodge4d {

/// One row of the reference Hodge star table, written as text in display
/// orientation, e.g. {"dt", "-dx^dy^dz", "-eps dx^dy^dz"}. The scaled column
/// may carry the symbolic factor "alpha" or "eps".
struct HodgeTableEntry {
  std::string input;
  std::string star;
  std::string scaled_star;
};

/// The 16 reference rows, ordered by degree then display basis.
const std::vector<HodgeTableEntry>& reference_hodge_table();

struct HodgeCell {
  std::string input;
  std::string column;  // "*" or "*_alpha"
  std::string expected;
  std::string computed;
  bool pass = false;
};

/// Evaluates both star columns for every row and compares them with the
/// expected entries by exact rational equality. alpha and eps are bound to
/// the given values, which must differ from each other and from +-1 so that
/// a misplaced factor cannot go unnoticed. Throws std::invalid_argument on
/// malformed entries.
std::vector<HodgeCell> verify_hodge_table(const std::vector<HodgeTableEntry>& expected,
                                          const Rational& alpha = make_rational(3, 7),
                                          const Rational& eps = make_rational(5, 11));

}  // namespace hodge4d
