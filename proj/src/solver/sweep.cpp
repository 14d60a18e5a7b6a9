#include <cmath>
#include <limits>
#include <sstream>

#include "hodge4d/sweep.hpp"

namespace hodge4d::solver {

std::pair<double, double> fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  if (n < 2 || y.size() != n) throw std::invalid_argument("slope fit needs at least two points");
  double mx = 0, my = 0;
  for (std::size_t k = 0; k < n; ++k) {
    mx += x[k];
    my += y[k];
  }
  mx /= double(n);
  my /= double(n);
  double sxy = 0, sxx = 0;
  for (std::size_t k = 0; k < n; ++k) {
    sxy += (x[k] - mx) * (y[k] - my);
    sxx += (x[k] - mx) * (x[k] - mx);
  }
  if (sxx == 0) throw std::invalid_argument("slope fit needs distinct abscissae");
  const double s = sxy / sxx;
  double rss = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const double r = y[k] - (my + s * (x[k] - mx));
    rss += r * r;
  }
  return {s, std::sqrt(rss / double(n))};
}

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(4);
  os << v;
  return os.str();
}

}  // namespace

SweepResult epsilon_sweep(const ProblemConfig& c, const Grid1p1& g, const std::vector<double>& eps_list,
                          const SweepOptions& opt) {
  if (eps_list.size() < 2) throw ConfigError("epsilon sweep needs at least two epsilon values");
  for (std::size_t k = 0; k < eps_list.size(); ++k) {
    if (!(eps_list[k] > 0)) throw ConfigError("epsilon values must be positive, got " + fmt(eps_list[k]));
    if (k > 0 && !(eps_list[k] < eps_list[k - 1])) throw ConfigError("epsilon values must be strictly decreasing");
  }
  if (opt.floor_check && !g.coarsened()) {
    throw ConfigError("the refinement probe needs even cell counts of at least 4 in both directions");
  }

  ProblemConfig base = c;
  SweepResult result;
  DiscreteField u0(g);
  if (c.reference) {
    u0 = DiscreteField::sample(g, c.reference);
    result.reference = "analytic";
  } else {
    base.epsilon = 0;
    u0 = reference_evolution(base, g);
    result.reference = "backward Euler";
  }

  const int N = g.nt();
  std::vector<double> log_eps, log_err;
  DiscreteField last(g);
  for (double eps : eps_list) {
    base.epsilon = eps;
    const DiscreteField ue = solve(base, g);
    const DiscreteField e = ue - u0;
    SweepRow row{eps, l2_at_level(e, N), energy_integral(e), std::nullopt};
    if (!result.rows.empty()) {
      const SweepRow& prev = result.rows.back();
      if (!(row.l2_error_T < prev.l2_error_T)) {
        throw SweepAborted("error at T stopped decreasing (" + fmt(prev.l2_error_T) + " at eps=" + fmt(prev.epsilon) +
                           ", " + fmt(row.l2_error_T) + " at eps=" + fmt(eps) +
                           "): discretization floor reached, refine the grid");
      }
      row.local_slope = std::log(row.l2_error_T / prev.l2_error_T) / std::log(eps / prev.epsilon);
    }
    log_eps.push_back(std::log(eps));
    log_err.push_back(std::log(row.l2_error_T));
    result.rows.push_back(row);
    last = ue;
  }
  std::tie(result.slope, result.slope_residual) = fit_slope(log_eps, log_err);

  result.floor_estimate = std::numeric_limits<double>::quiet_NaN();
  result.floor_ratio = std::numeric_limits<double>::quiet_NaN();
  if (opt.floor_check) {
    // Two-grid estimate of the discretization error of the finest-eps solve,
    // assuming second-order convergence: |u_h - u_2h| / 3.
    const Grid1p1 coarse = *g.coarsened();
    const DiscreteField uc = solve(base, coarse);
    const auto w = trapezoid_weights(coarse.nx(), coarse.hx());
    double s = 0;
    for (int i = 0; i <= coarse.nx(); ++i) {
      const double d = last(2 * i, N) - uc(i, coarse.nt());
      s += w[i] * d * d;
    }
    result.floor_estimate = std::sqrt(s) / 3.0;
    result.floor_ratio = result.floor_estimate / result.rows.back().l2_error_T;
    if (!(result.floor_ratio <= opt.max_floor_ratio)) {
      throw SweepAborted("discretization error estimate " + fmt(result.floor_estimate) + " is " +
                         fmt(result.floor_ratio) + " of the eps-effect " + fmt(result.rows.back().l2_error_T) +
                         " at eps=" + fmt(eps_list.back()) + " (limit " + fmt(opt.max_floor_ratio) +
                         "): refine the grid");
    }
  }
  return result;
}

}  // namespace hodge4d::solver
