#include <Eigen/SparseLU>

#include "hodge4d/solver.hpp"

namespace hodge4d::solver {

double relative_residual(const LinearSystem& sys, const DiscreteField& u) {
  const Eigen::Map<const Eigen::VectorXd> x(u.values().data(), static_cast<Eigen::Index>(u.values().size()));
  const double r = (sys.matrix * x - sys.rhs).norm();
  const double b = sys.rhs.norm();
  return b > 0 ? r / b : r;
}

DiscreteField solve(const LinearSystem& sys) {
  const Eigen::SparseMatrix<double> a = sys.matrix;  // column-major copy for the LU
  Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
  lu.compute(a);
  if (lu.info() != Eigen::Success) {
    throw SolveError("sparse LU failed (" + lu.lastErrorMessage() + ") for " + sys.describe());
  }
  Eigen::VectorXd x = lu.solve(sys.rhs);
  if (lu.info() != Eigen::Success) throw SolveError("sparse LU solve failed for " + sys.describe());
  // One step of iterative refinement; the fitted stencils are badly scaled.
  x += lu.solve(sys.rhs - a * x);

  DiscreteField u(sys.grid, std::vector<double>(x.data(), x.data() + x.size()));
  if (!u.finite()) throw SolveError("non-finite solution for " + sys.describe());
  const double res = relative_residual(sys, u);
  if (res > 1e-10) {
    throw SolveError("relative residual " + std::to_string(res) + " exceeds 1e-10 for " + sys.describe());
  }
  return u;
}

DiscreteField solve(const ProblemConfig& c, const Grid1p1& g) { return solve(assemble(c, g)); }

DiscreteField reference_evolution(const ProblemConfig& c, const Grid1p1& g) {
  validate(c, g, /*allow_zero_eps=*/true);
  const int nx = g.nx();
  const double hx = g.hx(), ht = g.ht();
  const auto n = static_cast<Eigen::Index>(nx + 1);

  // (I/ht + A) u^{j} = u^{j-1}/ht + f^{j}, with A u = -(F_{i+1/2} - F_{i-1/2}) / hx.
  std::vector<Eigen::Triplet<double>> entries;
  for (int i = 0; i <= nx; ++i) {
    if (i == 0 || i == nx) {
      entries.emplace_back(i, i, 1.0);
      continue;
    }
    const double xl = 0.5 * (g.x(i - 1) + g.x(i)), xr = 0.5 * (g.x(i) + g.x(i + 1));
    const EdgeFlux l = edge_flux(c.scheme, c.alpha(xl), c.beta(xl), hx);
    const EdgeFlux r = edge_flux(c.scheme, c.alpha(xr), c.beta(xr), hx);
    entries.emplace_back(i, i, 1.0 / ht + (-r.lower + l.upper) / hx);
    entries.emplace_back(i, i + 1, -r.upper / hx);
    entries.emplace_back(i, i - 1, l.lower / hx);
  }
  Eigen::SparseMatrix<double> m(n, n);
  m.setFromTriplets(entries.begin(), entries.end());
  Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
  lu.compute(m);
  if (lu.info() != Eigen::Success) {
    throw SolveError("backward Euler factorization failed, scheme=" + std::string(scheme_name(c.scheme)));
  }

  DiscreteField u(g);
  for (int i = 0; i <= nx; ++i) u(i, 0) = c.g(g.x(i), g.t(0));
  Eigen::VectorXd b(n);
  for (int j = 1; j <= g.nt(); ++j) {
    const double t = g.t(j);
    for (int i = 0; i <= nx; ++i) {
      b[i] = (i == 0 || i == nx) ? c.g(g.x(i), t) : u(i, j - 1) / ht + c.f(g.x(i), t);
    }
    const Eigen::VectorXd x = lu.solve(b);
    for (int i = 0; i <= nx; ++i) u(i, j) = x[i];
  }
  if (!u.finite()) throw SolveError("non-finite backward Euler solution");
  return u;
}

}  // namespace hodge4d::solver
