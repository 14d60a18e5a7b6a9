#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/SparseCore>

/// 1+1D space-time finite differences for the scalar problem
///
///   -eps u_tt + u_t - (alpha u_x + beta u)_x = f   on (0, Lx) x (t0, T),
///   u = g on x = 0, x = Lx and t = t0,   eps u_t = h on t = T,
///
/// written in flux form -F_x - G_t = f with F = alpha u_x + beta u and
/// G = eps u_t - u.
namespace hodge4d::solver {

enum class Scheme { Centered, Upwind, ExpFitted };

std::string_view scheme_name(Scheme s);
/// Accepts "centered", "upwind", "expfitted" (case-insensitive, '-'/'_' ignored).
std::optional<Scheme> parse_scheme(std::string_view text);

/// Bernoulli function z / (e^z - 1), with B(0) = 1.
double bernoulli(double z);

/// Tensor grid with nx x nt cells, i.e. (nx+1) x (nt+1) nodes, indexed
/// lexicographically as j * (nx+1) + i.
class Grid1p1 {
 public:
  Grid1p1(int nx, int nt, double lx = 1.0, double t0 = 0.0, double T = 1.0);

  int nx() const { return nx_; }
  int nt() const { return nt_; }
  double lx() const { return lx_; }
  double t0() const { return t0_; }
  double T() const { return T_; }
  double hx() const { return lx_ / nx_; }
  double ht() const { return (T_ - t0_) / nt_; }
  double x(int i) const { return lx_ * i / nx_; }
  double t(int j) const { return t0_ + (T_ - t0_) * j / nt_; }

  std::size_t size() const { return std::size_t(nx_ + 1) * std::size_t(nt_ + 1); }
  std::size_t index(int i, int j) const { return std::size_t(j) * std::size_t(nx_ + 1) + std::size_t(i); }
  std::pair<int, int> node(std::size_t k) const { return {int(k % (nx_ + 1)), int(k / (nx_ + 1))}; }

  /// Lateral or initial-time node (Dirichlet data applies).
  bool is_dirichlet(int i, int j) const { return i == 0 || i == nx_ || j == 0; }

  /// Same grid with every cell split (factor 2) or merged (factor 1/2).
  Grid1p1 refined() const { return {2 * nx_, 2 * nt_, lx_, t0_, T_}; }
  std::optional<Grid1p1> coarsened() const;

  friend bool operator==(const Grid1p1&, const Grid1p1&) = default;

 private:
  int nx_, nt_;
  double lx_, t0_, T_;
};

using SpaceFn = std::function<double(double)>;
using SpaceTimeFn = std::function<double(double, double)>;

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ProblemConfig {
  std::string name = "custom";
  SpaceFn alpha = [](double) { return 1.0; };
  SpaceFn beta = [](double) { return 0.0; };
  double epsilon = 0.1;
  SpaceTimeFn f = [](double, double) { return 0.0; };
  /// Dirichlet data on x = 0, x = Lx and the initial time.
  SpaceTimeFn g = [](double, double) { return 0.0; };
  /// Terminal data h(x) in eps u_t(x, T) = h(x).
  SpaceFn terminal = [](double) { return 0.0; };
  Scheme scheme = Scheme::Centered;
  /// Exact solution of this eps-problem, when known.
  SpaceTimeFn exact;
  /// Solution of the eps = 0 problem (same f, g), when known.
  SpaceTimeFn reference;
  double lx = 1.0, t0 = 0.0, T = 1.0;
};

/// Throws ConfigError for eps <= 0 (unless allow_zero_eps), nonpositive alpha
/// at a grid node, or a grid that does not match the configured domain.
void validate(const ProblemConfig& c, const Grid1p1& g, bool allow_zero_eps = false);

class DiscreteField {
 public:
  explicit DiscreteField(Grid1p1 grid) : grid_(grid), values_(grid.size(), 0.0) {}
  DiscreteField(Grid1p1 grid, std::vector<double> values);

  static DiscreteField sample(const Grid1p1& grid, const SpaceTimeFn& fn);

  const Grid1p1& grid() const { return grid_; }
  const std::vector<double>& values() const { return values_; }
  std::vector<double>& values() { return values_; }
  double operator()(int i, int j) const { return values_[grid_.index(i, j)]; }
  double& operator()(int i, int j) { return values_[grid_.index(i, j)]; }

  double min() const;
  double max() const;
  bool finite() const;

  friend DiscreteField operator-(const DiscreteField& a, const DiscreteField& b);

 private:
  Grid1p1 grid_;
  std::vector<double> values_;
};

class GridMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using SparseMatrix = Eigen::SparseMatrix<double, Eigen::RowMajor>;

struct LinearSystem {
  Grid1p1 grid;
  SparseMatrix matrix;
  Eigen::VectorXd rhs;
  /// Context for diagnostics.
  double epsilon = 0.0;
  Scheme scheme = Scheme::Centered;
  std::string describe() const;
};

class SolveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Conservative 5-point space-time discretization. Rows of Dirichlet nodes
/// are identity rows. The t = T row closes eps u_t = h with a reflected ghost
/// node, u_{N+1} = u_{N-1} + 2 ht h / eps.
LinearSystem assemble(const ProblemConfig& c, const Grid1p1& g);

/// Direct sparse LU. Throws SolveError if the factorization fails or the
/// relative residual exceeds 1e-10.
DiscreteField solve(const LinearSystem& sys);
DiscreteField solve(const ProblemConfig& c, const Grid1p1& g);

/// Relative residual ||A u - b|| / ||b|| (absolute when b = 0).
double relative_residual(const LinearSystem& sys, const DiscreteField& u);

/// Backward Euler for u_t - (alpha u_x + beta u)_x = f from u(., t0) = g,
/// one step per grid time level, spatial fluxes as in the space-time scheme.
DiscreteField reference_evolution(const ProblemConfig& c, const Grid1p1& g);

/// Edge flux coefficients: flux = lower * u_lower + upper * u_upper for the
/// edge flux a u' + c u of length h under the given scheme.
struct EdgeFlux {
  double lower;
  double upper;
};
EdgeFlux edge_flux(Scheme s, double a, double c, double h);

// Norms --------------------------------------------------------------------

/// Trapezoid weights of the spatial (or temporal) node line.
std::vector<double> trapezoid_weights(int cells, double h);

/// Discrete L2(Omega_x) norm on time level j.
double l2_at_level(const DiscreteField& u, int j);
/// Discrete L2(Omega) norm over the whole space-time grid.
double l2_spacetime(const DiscreteField& u);
double max_abs(const DiscreteField& u);
/// int_{t0}^{T} (||e||^2 + ||e_x||^2) dt; nodal e_x uses central differences
/// inside and one-sided differences at the spatial boundary.
double energy_integral(const DiscreteField& e);

// Bilinear form --------------------------------------------------------------

/// B(u, v) = int (alpha u_x + beta u) v_x + (eps u_t - u) v_t + int_{t=T} u v,
/// evaluated edge by edge with the configured scheme's edge fluxes (so the
/// discrete B matches the assembled operator), trapezoid weights across
/// the edge direction, and trapezoid weights on the terminal line.
double discrete_bilinear(const DiscreteField& u, const DiscreteField& v, const ProblemConfig& c);

/// Nodal psi0 = int_0^x beta/alpha - (t - t0)/eps (trapezoid in x).
DiscreteField potential_field(const ProblemConfig& c, const Grid1p1& g);

}  // namespace hodge4d::solver
