#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hodge4d/kform.hpp"

namespace hodge4d {

/// Random polynomial of total degree <= max_degree with `terms` monomials and
/// small rational coefficients.
PolyField random_poly(std::mt19937_64& rng, int max_degree = 3, int terms = 4);

/// Random polynomial of total degree <= max_degree not depending on t.
PolyField random_spatial_poly(std::mt19937_64& rng, int max_degree = 3, int terms = 4);

/// Random form of degree k; each component is nonzero with probability 3/4.
KForm random_form(std::mt19937_64& rng, int k, int max_degree = 3);

struct IdentityResult {
  std::string name;
  int trials = 0;
  int failures = 0;
  std::string first_failure;  // empty when all trials pass
  bool pass() const { return failures == 0; }
};

/// Randomized exact checks of the exterior-algebra identities: d d = 0,
/// graded Leibniz, graded anticommutativity, associativity, the double-star
/// scaling and the contraction rules for n_T.
/// `count` random samples are drawn per degree (or degree pair).
std::vector<IdentityResult> run_identities(std::uint64_t seed, int count);

}  // namespace hodge4d
