#include <algorithm>
#include <cctype>
#include <cmath>

#include "hodge4d/solver.hpp"

namespace hodge4d::solver {

std::string_view scheme_name(Scheme s) {
  switch (s) {
    case Scheme::Centered: return "centered";
    case Scheme::Upwind: return "upwind";
    case Scheme::ExpFitted: return "expfitted";
  }
  return "?";
}

std::optional<Scheme> parse_scheme(std::string_view text) {
  std::string key;
  for (char ch : text) {
    if (ch == '-' || ch == '_' || ch == ' ') continue;
    key += char(std::tolower(static_cast<unsigned char>(ch)));
  }
  if (key == "centered" || key == "central") return Scheme::Centered;
  if (key == "upwind") return Scheme::Upwind;
  if (key == "expfitted" || key == "scharfettergummel" || key == "sg") return Scheme::ExpFitted;
  return std::nullopt;
}

double bernoulli(double z) {
  if (std::abs(z) < 1e-4) return 1.0 - z / 2.0 + z * z / 12.0;
  return z / std::expm1(z);
}

EdgeFlux edge_flux(Scheme s, double a, double c, double h) {
  switch (s) {
    case Scheme::Centered: return {-a / h + c / 2.0, a / h + c / 2.0};
    case Scheme::Upwind: {
      EdgeFlux e{-a / h, a / h};
      if (c > 0) e.upper += c;
      else if (c < 0) e.lower += c;
      return e;
    }
    case Scheme::ExpFitted: {
      const double z = c * h / a;
      return {-(a / h) * bernoulli(z), (a / h) * bernoulli(-z)};
    }
  }
  return {0.0, 0.0};
}

Grid1p1::Grid1p1(int nx, int nt, double lx, double t0, double T) : nx_(nx), nt_(nt), lx_(lx), t0_(t0), T_(T) {
  if (nx < 2 || nt < 2) {
    throw ConfigError("grid needs at least 2 cells per direction, got nx=" + std::to_string(nx) +
                      ", nt=" + std::to_string(nt));
  }
  if (!(lx > 0) || !(T > t0)) throw ConfigError("grid needs Lx > 0 and T > t0");
}

std::optional<Grid1p1> Grid1p1::coarsened() const {
  if (nx_ % 2 != 0 || nt_ % 2 != 0 || nx_ < 4 || nt_ < 4) return std::nullopt;
  return Grid1p1(nx_ / 2, nt_ / 2, lx_, t0_, T_);
}

void validate(const ProblemConfig& c, const Grid1p1& g, bool allow_zero_eps) {
  if (!(c.epsilon > 0) && !(allow_zero_eps && c.epsilon == 0)) {
    throw ConfigError("epsilon must be positive for the space-time solve, got " + std::to_string(c.epsilon));
  }
  if (g.lx() != c.lx || g.t0() != c.t0 || g.T() != c.T) {
    throw ConfigError("grid domain does not match the problem domain");
  }
  for (int i = 0; i <= g.nx(); ++i) {
    const double a = c.alpha(g.x(i));
    if (!(a > 0)) throw ConfigError("alpha must be positive, got " + std::to_string(a) + " at x=" + std::to_string(g.x(i)));
  }
  if (!c.f || !c.g || !c.terminal || !c.alpha || !c.beta) throw ConfigError("problem data incomplete");
}

DiscreteField::DiscreteField(Grid1p1 grid, std::vector<double> values) : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.size()) throw GridMismatch("field size does not match its grid");
}

DiscreteField DiscreteField::sample(const Grid1p1& grid, const SpaceTimeFn& fn) {
  DiscreteField u(grid);
  for (int j = 0; j <= grid.nt(); ++j) {
    for (int i = 0; i <= grid.nx(); ++i) u(i, j) = fn(grid.x(i), grid.t(j));
  }
  return u;
}

double DiscreteField::min() const { return *std::min_element(values_.begin(), values_.end()); }
double DiscreteField::max() const { return *std::max_element(values_.begin(), values_.end()); }

bool DiscreteField::finite() const {
  return std::all_of(values_.begin(), values_.end(), [](double v) { return std::isfinite(v); });
}

DiscreteField operator-(const DiscreteField& a, const DiscreteField& b) {
  if (!(a.grid() == b.grid())) throw GridMismatch("fields live on different grids");
  DiscreteField out(a.grid());
  for (std::size_t k = 0; k < a.values().size(); ++k) out.values()[k] = a.values()[k] - b.values()[k];
  return out;
}

}  // namespace hodge4d::solver
