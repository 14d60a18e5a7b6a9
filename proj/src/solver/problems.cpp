#include <cmath>
#include <numbers>

#include "hodge4d/sweep.hpp"

namespace hodge4d::solver {

namespace {
constexpr double pi = std::numbers::pi;
}

const std::vector<std::string>& problem_names() {
  static const std::vector<std::string> names{"zero", "manufactured", "decay", "heat", "layer"};
  return names;
}

ProblemConfig make_problem(std::string_view name, const ProblemParams& p) {
  ProblemConfig c;
  c.name = std::string(name);
  c.epsilon = p.epsilon;
  c.scheme = p.scheme;
  c.lx = p.lx;
  c.t0 = p.t0;
  c.T = p.T;
  const double a = p.alpha, b = p.beta, eps = p.epsilon;
  c.alpha = [a](double) { return a; };
  c.beta = [b](double) { return b; };

  if (name == "zero") {
    c.exact = [](double, double) { return 0.0; };
    c.reference = c.exact;
  } else if (name == "manufactured") {
    c.exact = [](double x, double t) { return std::sin(pi * x) * (1 + t); };
    c.f = [a, b](double x, double t) {
      return std::sin(pi * x) + (1 + t) * (pi * pi * a * std::sin(pi * x) - b * pi * std::cos(pi * x));
    };
    c.g = c.exact;
    c.terminal = [eps](double x) { return eps * std::sin(pi * x); };
  } else if (name == "decay") {
    c.reference = [](double x, double t) { return std::exp(-t) * std::sin(pi * x); };
    c.f = [a, b](double x, double t) {
      return std::exp(-t) * ((pi * pi * a - 1) * std::sin(pi * x) - b * pi * std::cos(pi * x));
    };
    c.g = c.reference;
  } else if (name == "heat") {
    c.reference = [a](double x, double t) { return std::exp(-pi * pi * a * t) * std::sin(pi * x); };
    c.f = [a, b](double x, double t) { return -b * pi * std::cos(pi * x) * std::exp(-pi * pi * a * t); };
    c.g = c.reference;
  } else if (name == "layer") {
    c.g = [](double x, double) { return x <= 0 ? 0.0 : 1.0; };
  } else {
    std::string known;
    for (const auto& n : problem_names()) known += (known.empty() ? "" : ", ") + n;
    throw ConfigError("unknown problem '" + std::string(name) + "' (known: " + known + ")");
  }
  return c;
}

}  // namespace hodge4d::solver
