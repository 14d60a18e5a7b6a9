#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hodge4d/solver.hpp"

namespace hodge4d::solver {

// Named problems ---------------------------------------------------------------

struct ProblemParams {
  double alpha = 1.0;
  double beta = 0.0;
  double epsilon = 0.1;
  Scheme scheme = Scheme::Centered;
  double lx = 1.0, t0 = 0.0, T = 1.0;
};

/// "zero"          f = 0, g = 0.
/// "manufactured"  u = sin(pi x)(1 + t), exact for every eps (forcing and
///                 terminal data eps u_t = eps sin(pi x) built to match).
/// "decay"         u0 = exp(-t) sin(pi x) solves the eps = 0 problem; the
///                 forcing is taken from it, so u0_tt != 0.
/// "heat"          u0 = exp(-pi^2 alpha t) sin(pi x); f = 0 when beta = 0.
/// "layer"         f = 0, u = 0 at x = 0, u = 1 at x = Lx and t = t0.
const std::vector<std::string>& problem_names();
ProblemConfig make_problem(std::string_view name, const ProblemParams& p);

// Epsilon sweep ------------------------------------------------------------------

struct SweepRow {
  double epsilon = 0;
  double l2_error_T = 0;       // ||u_eps - u0||_{L2(Omega_x)} at t = T
  double energy_integral = 0;  // int (||e||^2 + ||e_x||^2) dt
  std::optional<double> local_slope;  // against the previous row
};

struct SweepResult {
  std::vector<SweepRow> rows;
  double slope = 0;           // least-squares slope of log error vs log eps
  double slope_residual = 0;  // RMS residual of that fit
  std::string reference;      // "analytic" or "backward Euler"
  /// Richardson estimate of the discretization error at the smallest eps,
  /// and its ratio to the measured eps-effect there (NaN when unchecked).
  double floor_estimate = 0;
  double floor_ratio = 0;
};

class SweepAborted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SweepOptions {
  bool floor_check = true;
  /// Largest admissible discretization-error / eps-effect ratio.
  double max_floor_ratio = 0.1;
};

/// Solves the eps-problem for each eps (strictly decreasing, all positive)
/// and compares with u0 at t = T: the analytic reference when the config has
/// one, otherwise backward Euler on the same grid. Throws ConfigError for a
/// bad eps list and SweepAborted when the error stops decreasing or the
/// refinement probe shows the discretization error is not small against the
/// smallest eps-effect.
SweepResult epsilon_sweep(const ProblemConfig& c, const Grid1p1& g, const std::vector<double>& eps_list,
                          const SweepOptions& opt = {});

/// Least-squares line fit y = a + s x; returns {s, rms residual}.
std::pair<double, double> fit_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace hodge4d::solver
