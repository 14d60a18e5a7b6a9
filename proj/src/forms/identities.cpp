#include "hodge4d/identities.hpp"

#include "hodge4d/forms.hpp"

namespace hodge4d {

namespace {

Rational random_coeff(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-5, 4);
  std::uniform_int_distribution<long> den(1, 4);
  long n = num(rng);
  if (n >= 0) ++n;  // skip zero
  return make_rational(n, den(rng));
}

PolyField random_poly_impl(std::mt19937_64& rng, int max_degree, int terms, int nvars) {
  std::uniform_int_distribution<int> var(0, nvars - 1);
  std::uniform_int_distribution<int> deg(0, max_degree);
  PolyField p;
  for (int i = 0; i < terms; ++i) {
    Exponents e{0, 0, 0, 0};
    const int d = deg(rng);
    for (int j = 0; j < d; ++j) ++e[var(rng)];
    p += PolyField::monomial(random_coeff(rng), e);
  }
  return p;
}

void record(IdentityResult& r, bool ok, const std::string& what) {
  ++r.trials;
  if (ok) return;
  if (r.failures++ == 0) r.first_failure = what;
}

int sign_pow(int n) { return n % 2 == 0 ? 1 : -1; }

}  // namespace

PolyField random_poly(std::mt19937_64& rng, int max_degree, int terms) {
  return random_poly_impl(rng, max_degree, terms, 4);
}

PolyField random_spatial_poly(std::mt19937_64& rng, int max_degree, int terms) {
  return random_poly_impl(rng, max_degree, terms, 3);
}

KForm random_form(std::mt19937_64& rng, int k, int max_degree) {
  std::bernoulli_distribution keep(0.75);
  KForm w(k);
  for (BasisForm b : BasisForm::of_degree(k)) {
    if (keep(rng)) w.add(b, random_poly(rng, max_degree));
  }
  return w;
}

std::vector<IdentityResult> run_identities(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> degree(0, 4);

  IdentityResult dd{"d d = 0", 0, 0, {}};
  for (int k = 0; k <= 3; ++k) {
    for (int i = 0; i < count; ++i) {
      const KForm w = random_form(rng, k);
      const KForm ddw = exterior_derivative(exterior_derivative(w));
      record(dd, ddw.is_zero(), "w = " + w.to_string() + " gives dd w = " + ddw.to_string());
    }
  }

  IdentityResult leibniz{"d(a^b) = da^b + (-1)^p a^db", 0, 0, {}};
  IdentityResult anti{"a^b = (-1)^(pq) b^a", 0, 0, {}};
  for (int p = 0; p <= 4; ++p) {
    for (int q = 0; p + q <= 4; ++q) {
      for (int i = 0; i < count; ++i) {
        const KForm a = random_form(rng, p, 2);
        const KForm b = random_form(rng, q, 2);
        const KForm ab = wedge_padded(a, b);
        const KForm lhs = exterior_derivative(ab);
        KForm rhs = wedge_padded(exterior_derivative(a), b);
        const KForm second = wedge_padded(a, exterior_derivative(b));
        rhs += sign_pow(p) > 0 ? second : -second;
        record(leibniz, lhs == rhs, "a = " + a.to_string() + ", b = " + b.to_string());
        const KForm ba = wedge_padded(b, a);
        record(anti, ab == (sign_pow(p * q) > 0 ? ba : -ba), "a = " + a.to_string() + ", b = " + b.to_string());
      }
    }
  }

  IdentityResult assoc{"(a^b)^c = a^(b^c)", 0, 0, {}};
  for (int i = 0; i < count; ++i) {
    const int p = degree(rng) % 3, q = degree(rng) % 2;
    const int r = std::min(degree(rng), 4 - p - q);
    const KForm a = random_form(rng, p, 1), b = random_form(rng, q, 1), c = random_form(rng, r, 1);
    record(assoc, wedge_padded(wedge_padded(a, b), c) == wedge_padded(a, wedge_padded(b, c)),
           "a = " + a.to_string() + ", b = " + b.to_string() + ", c = " + c.to_string());
  }

  IdentityResult double_star{"(-1)^(k(4-k)) * *_a w = alpha w_x + eps w_t", 0, 0, {}};
  for (int k = 0; k <= 4; ++k) {
    for (int i = 0; i < count; ++i) {
      const MaterialParams m(abs(random_coeff(rng)), abs(random_coeff(rng)));
      const KForm w = random_form(rng, k);
      KForm lhs = hodge_star(scaled_hodge_star(w, m));
      if (sign_pow(k * (4 - k)) < 0) lhs = -lhs;
      const KForm rhs = dt_part(w, false) * PolyField(m.alpha()) + dt_part(w, true) * PolyField(m.epsilon());
      record(double_star, lhs == rhs, "w = " + w.to_string());
    }
  }

  const KForm nT = KForm::single(BasisForm::d(Var::T), PolyField(1));
  IdentityResult contraction{"iota(w^n_T) + iota(w)^n_T = w", 0, 0, {}};
  IdentityResult iota_twice{"iota iota = 0", 0, 0, {}};
  for (int k = 0; k <= 4; ++k) {
    for (int i = 0; i < count; ++i) {
      const KForm w = random_form(rng, k);
      if (k > 0) record(iota_twice, interior_product_nT(interior_product_nT(w)).is_zero(), "w = " + w.to_string());
      if (k < 4) {
        const KForm lhs = interior_product_nT(wedge_padded(w, nT)) +
                          (k > 0 ? wedge_padded(interior_product_nT(w), nT) : KForm(k));
        record(contraction, lhs == w, "w = " + w.to_string());
      }
    }
  }

  return {dd, leibniz, anti, assoc, double_star, contraction, iota_twice};
}

}  // namespace hodge4d
