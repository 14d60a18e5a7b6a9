#include "hodge4d/solver.hpp"

namespace hodge4d::solver {

double discrete_bilinear(const DiscreteField& u, const DiscreteField& v, const ProblemConfig& c) {
  if (!(u.grid() == v.grid())) throw GridMismatch("bilinear form arguments live on different grids");
  const Grid1p1& g = u.grid();
  validate(c, g);
  const int nx = g.nx(), nt = g.nt();
  const double hx = g.hx(), ht = g.ht();
  const auto wx = trapezoid_weights(nx, hx);
  const auto wt = trapezoid_weights(nt, ht);

  double total = 0;
  // x-edges: (alpha u_x + beta u) v_x, cell length hx times the t-line weight.
  for (int i = 0; i < nx; ++i) {
    const double xm = 0.5 * (g.x(i) + g.x(i + 1));
    const EdgeFlux e = edge_flux(c.scheme, c.alpha(xm), c.beta(xm), hx);
    for (int j = 0; j <= nt; ++j) {
      const double flux = e.lower * u(i, j) + e.upper * u(i + 1, j);
      total += wt[j] * flux * (v(i + 1, j) - v(i, j));
    }
  }
  // t-edges: (eps u_t - u) v_t.
  const EdgeFlux e = edge_flux(c.scheme, c.epsilon, -1.0, ht);
  for (int j = 0; j < nt; ++j) {
    for (int i = 0; i <= nx; ++i) {
      const double flux = e.lower * u(i, j) + e.upper * u(i, j + 1);
      total += wx[i] * flux * (v(i, j + 1) - v(i, j));
    }
  }
  // Terminal line.
  for (int i = 0; i <= nx; ++i) total += wx[i] * u(i, nt) * v(i, nt);
  return total;
}

DiscreteField potential_field(const ProblemConfig& c, const Grid1p1& g) {
  validate(c, g);
  DiscreteField psi(g);
  double acc = 0;
  for (int i = 0; i <= g.nx(); ++i) {
    if (i > 0) {
      const double l = c.beta(g.x(i - 1)) / c.alpha(g.x(i - 1));
      const double r = c.beta(g.x(i)) / c.alpha(g.x(i));
      acc += 0.5 * g.hx() * (l + r);
    }
    for (int j = 0; j <= g.nt(); ++j) psi(i, j) = acc - (g.t(j) - g.t0()) / c.epsilon;
  }
  return psi;
}

}  // namespace hodge4d::solver
