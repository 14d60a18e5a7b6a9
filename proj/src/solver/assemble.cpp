#include <vector>

#include "hodge4d/solver.hpp"

namespace hodge4d::solver {

std::string LinearSystem::describe() const {
  return "eps=" + std::to_string(epsilon) + ", scheme=" + std::string(scheme_name(scheme)) +
         ", grid=" + std::to_string(grid.nx()) + "x" + std::to_string(grid.nt());
}

LinearSystem assemble(const ProblemConfig& c, const Grid1p1& g) {
  validate(c, g);
  const int nx = g.nx(), nt = g.nt();
  const double hx = g.hx(), ht = g.ht(), eps = c.epsilon;

  // Edge coefficients are time independent in x and space independent in t.
  std::vector<EdgeFlux> fx(nx);
  for (int i = 0; i < nx; ++i) {
    const double xm = 0.5 * (g.x(i) + g.x(i + 1));
    fx[i] = edge_flux(c.scheme, c.alpha(xm), c.beta(xm), hx);
  }
  const EdgeFlux ft = edge_flux(c.scheme, eps, -1.0, ht);

  std::vector<Eigen::Triplet<double>> entries;
  entries.reserve(g.size() * 5);
  Eigen::VectorXd rhs(static_cast<Eigen::Index>(g.size()));

  for (int j = 0; j <= nt; ++j) {
    for (int i = 0; i <= nx; ++i) {
      const auto row = static_cast<Eigen::Index>(g.index(i, j));
      if (g.is_dirichlet(i, j)) {
        entries.emplace_back(row, row, 1.0);
        rhs[row] = c.g(g.x(i), g.t(j));
        continue;
      }
      auto add = [&](int ii, int jj, double v) {
        entries.emplace_back(row, static_cast<Eigen::Index>(g.index(ii, jj)), v);
      };
      double b = c.f(g.x(i), g.t(j));

      // -(F_{i+1/2} - F_{i-1/2}) / hx
      const EdgeFlux& r = fx[i];
      const EdgeFlux& l = fx[i - 1];
      add(i, j, (-r.lower + l.upper) / hx);
      add(i + 1, j, -r.upper / hx);
      add(i - 1, j, l.lower / hx);

      // -(G_{j+1/2} - G_{j-1/2}) / ht
      add(i, j, (-ft.lower + ft.upper) / ht);
      add(i, j - 1, ft.lower / ht);
      if (j < nt) {
        add(i, j + 1, -ft.upper / ht);
      } else {
        // Ghost node u_{N+1} = u_{N-1} + 2 ht h / eps.
        add(i, j - 1, -ft.upper / ht);
        b += ft.upper * 2.0 * c.terminal(g.x(i)) / eps;
      }
      rhs[row] = b;
    }
  }

  LinearSystem sys{g, SparseMatrix(static_cast<Eigen::Index>(g.size()), static_cast<Eigen::Index>(g.size())), rhs,
                   eps, c.scheme};
  sys.matrix.setFromTriplets(entries.begin(), entries.end());
  sys.matrix.makeCompressed();
  return sys;
}

}  // namespace hodge4d::solver
