#pragma once

#include <array>
#include <span>
#include <string>

#include "hodge4d/forms.hpp"
#include "hodge4d/vector_calculus.hpp"

namespace hodge4d {

enum class BoundaryKind { SpatialX, InitialTime, FinalTime };

/// Outward unit normal of a space-time boundary piece, as a 1-form:
/// n1 dx + n2 dy + n3 dz on the lateral boundary, -dt at t = t0 and +dt at t = T.
class NormalForm {
 public:
  static NormalForm spatial(const vc::Vec3& n);
  static NormalForm initial_time(const Rational& t0);
  static NormalForm final_time(const Rational& T);

  BoundaryKind kind() const { return kind_; }
  const KForm& form() const { return form_; }
  /// Time of the hyperplane; zero for the lateral boundary.
  const Rational& time() const { return time_; }

 private:
  NormalForm(BoundaryKind kind, KForm form, Rational time)
      : kind_(kind), form_(std::move(form)), time_(std::move(time)) {}

  BoundaryKind kind_;
  KForm form_;
  Rational time_;
};

/// n ^ w, with t substituted for temporal boundaries. Lateral traces keep
/// their spatial dependence; evaluation on the face is left to the caller.
KForm wedge_trace(const NormalForm& n, const KForm& w);

/// iota_{n_T}(* *_alpha d w) restricted to t = T. Requires deg w <= 3.
KForm artificial_bc(const KForm& w, const MaterialParams& m, const Rational& T);

/// One reduced boundary condition.
struct BoundaryCondition {
  std::string name;   // "x-BC", "t0-BC" or "eps-BC"
  std::string label;  // classical form, e.g. "n x u = 0 on Gamma_x"
  bool applicable = true;
  /// The form-level condition reduces to the classical one on the given data.
  bool reduction_verified = false;
  /// The given u satisfies the condition (residual vanishes). Only evaluated
  /// for the temporal conditions; the lateral one depends on the face.
  bool satisfied = false;
  KForm residual;
};

struct BoundaryReport {
  int degree = 0;
  std::array<BoundaryCondition, 3> conditions;
  bool all_verified() const;
};

/// Reduces the three abstract boundary conditions for a degree-k solution
/// form built from spatial fields u (see build_solution_form) with initial
/// data u_t0, on [t0, T]. k must be 0..3.
BoundaryReport boundary_report(int k, std::span<const PolyField> u, std::span<const PolyField> u_t0,
                               const MaterialParams& m, const Rational& t0 = 0, const Rational& T = 1);

}  // namespace hodge4d
