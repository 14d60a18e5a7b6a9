#pragma once

#include <array>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hodge4d/forms.hpp"

namespace hodge4d {

/// Space-time convection 1-form
///   b1 = alpha^{-1} beta_1 dx + alpha^{-1} beta_2 dy + alpha^{-1} beta_3 dz - epsilon^{-1} dt.
class ConvectionForm {
 public:
  const KForm& b1() const { return b1_; }
  const MaterialParams& material() const { return material_; }

 private:
  friend ConvectionForm build_convection_form(const MaterialParams& m);
  ConvectionForm(KForm b1, MaterialParams m) : b1_(std::move(b1)), material_(std::move(m)) {}

  KForm b1_;
  MaterialParams material_;
};

/// Requires a constant alpha (b1 carries alpha^{-1}); throws ParameterError otherwise.
ConvectionForm build_convection_form(const MaterialParams& m);

/// J_k w = d_k w + b1 ^ w. A 4-form maps to the zero 5-form.
KForm flux(const KForm& w, const ConvectionForm& b);

/// Delta_{alpha,k} = delta^k_{1 alpha} d_k + d_{k-1} delta^{k-1}_{alpha 1}.
KForm hodge_laplacian(const KForm& w, const MaterialParams& m);

/// The three pieces of the unified operator and their sum.
struct OperatorPieces {
  KForm diffusion;   // delta_{1 alpha} d u
  KForm convection;  // delta_{1 alpha} (b1 ^ u)
  KForm exact;       // d delta_{alpha 1} u
  KForm total;
};

/// (delta^k_{1 alpha} J_k + d_{k-1} delta^{k-1}_{alpha 1}) u_k, split into pieces.
///
/// With constant alpha the convection piece is the literal composition
/// -(*) d (*_alpha)(b1 ^ u). With a spatial alpha field, b1 is not polynomial;
/// the piece is then evaluated as -(*) d (*(beta ^ u) - *(dt ^ u)), which is
/// the same quantity whenever u is dt-free. Other inputs are rejected.
OperatorPieces unified_operator_pieces(const KForm& w, const MaterialParams& m);
KForm unified_operator(const KForm& w, const MaterialParams& m);

/// *_alpha (b1 ^ w) computed without forming b1 (valid for dt-free w or constant alpha).
KForm scaled_star_of_convection(const KForm& w, const MaterialParams& m);

/// Builds u_k from its spatial fields: k=0,3 take one scalar, k=1,2 take the
/// three components of a vector field, k=4 takes none. Every dt-containing
/// basis gets a zero coefficient.
KForm build_solution_form(int k, std::span<const PolyField> fields);

/// Throws std::invalid_argument if w has a nonzero dt-coefficient.
void require_dt_free(const KForm& w);

// ---------------------------------------------------------------------------
// Exponential fitting

class NoPotentialError : public std::domain_error {
 public:
  NoPotentialError(const std::string& what, std::vector<std::string> obstructions)
      : std::domain_error(what), obstructions_(std::move(obstructions)) {}
  /// "component: value" entries of d_1 b1 that fail to vanish.
  const std::vector<std::string>& obstructions() const { return obstructions_; }

 private:
  std::vector<std::string> obstructions_;
};

/// psi0 with d_0 psi0 = b1, normalized to psi0(0,0,0,0) = 0.
struct Potential {
  PolyField psi0;
};

Potential make_potential(const ConvectionForm& b);

/// e^{-psi0} d_k (e^{psi0} w), evaluated in ExpPolyField arithmetic; the
/// weights cancel and the result is returned with polynomial coefficients.
KForm exp_fitted_flux(const KForm& w, const Potential& p);

// ---------------------------------------------------------------------------
// Component-wise expansion

inline constexpr std::array<const char*, 4> kPieceNames{
    "delta_1a d u", "delta_1a (b1^u)", "d delta_a1 u", "total"};

/// One display row: the coefficient of each operator piece on one basis,
/// in the orientation used by the classical tables (e.g. dz^dx).
struct ExpansionRow {
  std::string basis;
  std::array<PolyField, 4> computed;
  std::array<PolyField, 4> expected;
};

struct ExpansionCell {
  int degree;
  std::string basis;
  std::string column;
  PolyField computed;
  PolyField expected;
};

struct ExpansionReport {
  int degree = 0;
  std::vector<ExpansionRow> rows;

  /// Cells whose computed and expected entries differ.
  std::vector<ExpansionCell> mismatches() const;
  bool all_match() const { return mismatches().empty(); }
  /// total - expected total, per row.
  std::vector<PolyField> residuals() const;
};

/// Reference entries for each row, per column (diffusion, convection, exact),
/// built with classical vector calculus only.
std::vector<std::array<PolyField, 3>> expansion_oracle(int k, std::span<const PolyField> fields,
                                                       const MaterialParams& m);

/// Per-row coefficients of the operator pieces, re-oriented to display bases.
std::vector<std::array<PolyField, 4>> expansion_pieces(int k, const OperatorPieces& pieces);

/// Compares computed rows against expected column entries (total = sum).
ExpansionReport compare_expansion(int k, const std::vector<std::array<PolyField, 4>>& computed,
                                  const std::vector<std::array<PolyField, 3>>& expected);

ExpansionReport expand_componentwise(int k, std::span<const PolyField> fields, const MaterialParams& m);

/// dt-block of the unified operator output (display orientation), i.e. the
/// emergent constraint row(s) for k = 1, 2, 3.
std::vector<PolyField> emergent_constraint(int k, std::span<const PolyField> fields, const MaterialParams& m);

}  // namespace hodge4d
