#include "hodge4d/convdiff.hpp"
#include "hodge4d/vector_calculus.hpp"

namespace hodge4d {

namespace {

vc::Vec3 as_vec(std::span<const PolyField> f) { return {f[0], f[1], f[2]}; }

}  // namespace

std::vector<std::array<PolyField, 3>> expansion_oracle(int k, std::span<const PolyField> fields,
                                                       const MaterialParams& m) {
  // Validate the field count the same way the form builder does.
  (void)build_solution_form(k, fields);

  const PolyField a = m.alpha_coefficient();
  const PolyField e(m.epsilon());
  const vc::Vec3 beta = m.beta();
  const auto dtt = [](const PolyField& f) { return f.derivative(Var::T).derivative(Var::T); };

  std::vector<std::array<PolyField, 3>> rows;
  switch (k) {
    case 0: {
      const PolyField& u = fields[0];
      rows.push_back({-e * dtt(u) - vc::div(vc::scale(vc::grad(u), a)),
                      u.derivative(Var::T) - vc::div(vc::scale(beta, u)), PolyField()});
      break;
    }
    case 1: {
      const vc::Vec3 u = as_vec(fields);
      const vc::Vec3 diff = vc::curl(vc::scale(vc::curl(u), a));
      const vc::Vec3 conv = vc::curl(vc::cross(beta, u));
      const PolyField div_eps = e * vc::div(u);
      for (int i = 0; i < 3; ++i) {
        rows.push_back({-e * dtt(u[i]) + diff[i], u[i].derivative(Var::T) + conv[i],
                        -div_eps.derivative(kSpatialVars[i])});
      }
      rows.push_back({e * vc::div(vc::dt(u)), -vc::div(u), -div_eps.derivative(Var::T)});
      break;
    }
    case 2: {
      const vc::Vec3 u = as_vec(fields);
      const PolyField a_div = a * vc::div(u);
      const PolyField beta_dot = vc::dot(beta, u);
      const vc::Vec3 eps_curl = vc::scale(vc::curl(u), e);
      const vc::Vec3 exact = vc::curl(eps_curl);
      for (int i = 0; i < 3; ++i) {
        const Var xi = kSpatialVars[i];
        rows.push_back({-e * dtt(u[i]) - a_div.derivative(xi), u[i].derivative(Var::T) - beta_dot.derivative(xi),
                        exact[i]});
      }
      const vc::Vec3 curl_t = vc::curl(vc::dt(u));
      const vc::Vec3 curl_u = vc::curl(u);
      for (int i = 0; i < 3; ++i) {
        rows.push_back({e * curl_t[i], -curl_u[i], -eps_curl[i].derivative(Var::T)});
      }
      break;
    }
    case 3: {
      const PolyField& u = fields[0];
      rows.push_back({-e * dtt(u), u.derivative(Var::T), -e * vc::laplacian(u)});
      for (Var xi : kSpatialVars) {
        const PolyField ui = u.derivative(xi);
        rows.push_back({e * ui.derivative(Var::T), -ui, -(e * ui).derivative(Var::T)});
      }
      break;
    }
    case 4: rows.push_back({PolyField(), PolyField(), PolyField()}); break;
    default: throw std::invalid_argument("form degree must be 0..4");
  }
  return rows;
}

std::vector<std::array<PolyField, 4>> expansion_pieces(int k, const OperatorPieces& pieces) {
  std::vector<std::array<PolyField, 4>> rows;
  const std::array<const KForm*, 4> forms{&pieces.diffusion, &pieces.convection, &pieces.exact, &pieces.total};
  for (const auto& d : display_bases(k)) {
    std::array<PolyField, 4> row;
    for (int c = 0; c < 4; ++c) {
      const PolyField v = (*forms[c])[d.basis];
      row[c] = d.sign > 0 ? v : -v;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

ExpansionReport compare_expansion(int k, const std::vector<std::array<PolyField, 4>>& computed,
                                  const std::vector<std::array<PolyField, 3>>& expected) {
  const auto bases = display_bases(k);
  if (computed.size() != bases.size() || expected.size() != bases.size()) {
    throw std::invalid_argument("expansion row count mismatch for degree " + std::to_string(k));
  }
  ExpansionReport report;
  report.degree = k;
  for (std::size_t r = 0; r < bases.size(); ++r) {
    ExpansionRow row{bases[r].name, computed[r], {}};
    for (int c = 0; c < 3; ++c) row.expected[c] = expected[r][c];
    row.expected[3] = expected[r][0] + expected[r][1] + expected[r][2];
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::vector<ExpansionCell> ExpansionReport::mismatches() const {
  std::vector<ExpansionCell> out;
  for (const auto& row : rows) {
    for (int c = 0; c < 4; ++c) {
      if (!(row.computed[c] == row.expected[c])) {
        out.push_back({degree, row.basis, kPieceNames[c], row.computed[c], row.expected[c]});
      }
    }
  }
  return out;
}

std::vector<PolyField> ExpansionReport::residuals() const {
  std::vector<PolyField> out;
  for (const auto& row : rows) out.push_back(row.computed[3] - row.expected[3]);
  return out;
}

ExpansionReport expand_componentwise(int k, std::span<const PolyField> fields, const MaterialParams& m) {
  const KForm u = build_solution_form(k, fields);
  return compare_expansion(k, expansion_pieces(k, unified_operator_pieces(u, m)), expansion_oracle(k, fields, m));
}

std::vector<PolyField> emergent_constraint(int k, std::span<const PolyField> fields, const MaterialParams& m) {
  if (k < 1 || k > 3) throw std::invalid_argument("emergent constraints exist for k = 1, 2, 3");
  const KForm total = unified_operator(build_solution_form(k, fields), m);
  std::vector<PolyField> out;
  for (const auto& d : display_bases(k)) {
    if (!d.basis.has_dt()) continue;
    const PolyField v = total[d.basis];
    out.push_back(d.sign > 0 ? v : -v);
  }
  return out;
}

}  // namespace hodge4d
