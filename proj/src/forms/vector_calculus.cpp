#include "hodge4d/vector_calculus.hpp"

namespace hodge4d::vc {

PolyField dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Vec3 grad(const PolyField& f) { return {f.derivative(Var::X), f.derivative(Var::Y), f.derivative(Var::Z)}; }

PolyField div(const Vec3& u) {
  return u[0].derivative(Var::X) + u[1].derivative(Var::Y) + u[2].derivative(Var::Z);
}

Vec3 curl(const Vec3& u) {
  return {u[2].derivative(Var::Y) - u[1].derivative(Var::Z),
          u[0].derivative(Var::Z) - u[2].derivative(Var::X),
          u[1].derivative(Var::X) - u[0].derivative(Var::Y)};
}

PolyField laplacian(const PolyField& f) { return div(grad(f)); }

Vec3 dt(const Vec3& u) { return {u[0].derivative(Var::T), u[1].derivative(Var::T), u[2].derivative(Var::T)}; }

Vec3 scale(const Vec3& u, const PolyField& s) { return {u[0] * s, u[1] * s, u[2] * s}; }

Vec3 add(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }

Vec3 negate(const Vec3& a) { return {-a[0], -a[1], -a[2]}; }

}  // namespace hodge4d::vc
