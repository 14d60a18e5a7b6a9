#include <cmath>

#include "hodge4d/solver.hpp"

namespace hodge4d::solver {

std::vector<double> trapezoid_weights(int cells, double h) {
  std::vector<double> w(std::size_t(cells + 1), h);
  w.front() = w.back() = h / 2;
  return w;
}

double l2_at_level(const DiscreteField& u, int j) {
  const Grid1p1& g = u.grid();
  const auto w = trapezoid_weights(g.nx(), g.hx());
  double s = 0;
  for (int i = 0; i <= g.nx(); ++i) s += w[i] * u(i, j) * u(i, j);
  return std::sqrt(s);
}

double l2_spacetime(const DiscreteField& u) {
  const Grid1p1& g = u.grid();
  const auto wt = trapezoid_weights(g.nt(), g.ht());
  double s = 0;
  for (int j = 0; j <= g.nt(); ++j) {
    const double l = l2_at_level(u, j);
    s += wt[j] * l * l;
  }
  return std::sqrt(s);
}

double max_abs(const DiscreteField& u) {
  double m = 0;
  for (double v : u.values()) m = std::max(m, std::abs(v));
  return m;
}

double energy_integral(const DiscreteField& e) {
  const Grid1p1& g = e.grid();
  const int nx = g.nx();
  const double hx = g.hx();
  const auto wx = trapezoid_weights(nx, hx);
  const auto wt = trapezoid_weights(g.nt(), g.ht());
  double total = 0;
  for (int j = 0; j <= g.nt(); ++j) {
    double level = 0;
    for (int i = 0; i <= nx; ++i) {
      double ex;
      if (i == 0) ex = (e(1, j) - e(0, j)) / hx;
      else if (i == nx) ex = (e(nx, j) - e(nx - 1, j)) / hx;
      else ex = (e(i + 1, j) - e(i - 1, j)) / (2 * hx);
      level += wx[i] * (e(i, j) * e(i, j) + ex * ex);
    }
    total += wt[j] * level;
  }
  return total;
}

}  // namespace hodge4d::solver
