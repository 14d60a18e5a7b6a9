#pragma once

#include <array>

#include "hodge4d/poly_field.hpp"

/// Classical 3D vector calculus on polynomial fields. It shares no code with
/// the exterior-calculus operators and serves as their reference.
namespace hodge4d::vc {

using Vec3 = std::array<PolyField, 3>;

PolyField dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);
Vec3 grad(const PolyField& f);
PolyField div(const Vec3& u);
Vec3 curl(const Vec3& u);
PolyField laplacian(const PolyField& f);
Vec3 dt(const Vec3& u);
Vec3 scale(const Vec3& u, const PolyField& s);
Vec3 add(const Vec3& a, const Vec3& b);
Vec3 negate(const Vec3& a);

}  // namespace hodge4d::vc
