#include "conelab/extension.hpp"

#include <string>

namespace conelab {

namespace {

void require_same_ambient(const Wedge& f_plus, const Subspace& e, const char* op) {
  if (f_plus.dim() != e.ambient_dim())
    throw InputError(std::string(op) + ": subspace ambient dim " +
                     std::to_string(e.ambient_dim()) + " differs from cone dim " +
                     std::to_string(f_plus.dim()));
}

}  // namespace

Wedge restriction_wedge(const Wedge& f_plus, const Subspace& e) {
  require_same_ambient(f_plus, e, "restriction_wedge");
  const Wedge dual = dual_wedge(f_plus);
  std::vector<Vector> restricted;
  for (const auto& r : dual.generators()) restricted.push_back(e.restrict(r));
  return Wedge(e.dim(), std::move(restricted));
}

bool predual_identity_check(const Wedge& f_plus, const Subspace& e) {
  return wedge_equal(intersect_subspace(f_plus, e), dual_wedge(restriction_wedge(f_plus, e)));
}

FunctionalExtensionResult extend_functional(const FunctionalOnSubspace& f, const Subspace& e,
                                            const Wedge& f_plus) {
  require_same_ambient(f_plus, e, "extend_functional");
  require_dim(f.coords, e.dim(), "functional on subspace");

  const lp::FeasibilitySystem sys{e.basis().transpose(), f.coords,
                                  Matrix::from_rows(f_plus.generators(), f_plus.dim())};
  const lp::FeasibilityResult r = lp::feasibility(sys);
  FunctionalExtensionResult out;
  if (const auto* p = std::get_if<lp::FeasiblePoint>(&r)) {
    out = FunctionalExtension{p->x};
  } else {
    // Bᵀ-row multipliers y and cone multipliers z give B(−y) = Σ z_i g_i.
    const auto& cert = std::get<lp::FarkasCertificate>(r);
    Vector coords = Rational(-1) * cert.y;
    Vector point = e.to_ambient(coords);
    out = NonExtendable{std::move(coords), std::move(point), cert.z};
  }
  const bool ok = std::visit([&](const auto& b) { return verify(f, e, f_plus, b); }, out);
  if (!ok) throw std::logic_error("extend_functional: produced an unverifiable result");
  return out;
}

bool verify(const FunctionalOnSubspace& f, const Subspace& e, const Wedge& f_plus,
            const FunctionalExtension& ext) {
  if (ext.phi.size() != f_plus.dim() || e.restrict(ext.phi) != f.coords) return false;
  for (const auto& g : f_plus.generators())
    if (dot(g, ext.phi).sign() < 0) return false;
  return true;
}

bool verify(const FunctionalOnSubspace& f, const Subspace& e, const Wedge& f_plus,
            const NonExtendable& w) {
  if (w.coords.size() != e.dim() || w.cone_coefficients.size() != f_plus.size()) return false;
  if (e.to_ambient(w.coords) != w.point) return false;
  Vector combo(f_plus.dim());
  for (std::size_t i = 0; i < f_plus.size(); ++i) {
    if (w.cone_coefficients[i].sign() < 0) return false;
    combo = combo + w.cone_coefficients[i] * f_plus.generators()[i];
  }
  return combo == w.point && dot(f.coords, w.coords).sign() < 0;
}

SituationEmbedding build_situation(const Wedge& e_plus) {
  const WedgeClass c = classify(e_plus);
  if (!c.is_generating || !c.is_cone)
    throw HypothesisError("embedding hypotheses violated: cone must be generating and pointed");

  SituationEmbedding s{e_plus, extremal_rays(e_plus), extremal_rays(dual_wedge(e_plus)), {}};
  s.t = Matrix::from_rows(s.phis, e_plus.dim());

  if (rank(s.t) != e_plus.dim()) throw std::logic_error("build_situation: T is not injective");
  for (const auto& g : e_plus.generators())
    for (const auto& v : s.t * g)
      if (v.sign() < 0) throw std::logic_error("build_situation: T is not positive");
  if (!wedge_equal(dual_wedge(Wedge(e_plus.dim(), s.phis)), e_plus))
    throw std::logic_error("build_situation: T⁻¹(orthant) differs from the cone");
  return s;
}

std::vector<Matrix> tensor_cone_generators(const SituationEmbedding& s) {
  std::vector<Matrix> out;
  out.reserve(s.rays.size() * s.phis.size());
  for (const auto& p : s.rays)
    for (const auto& phi : s.phis) out.push_back(outer(p, phi));
  return out;
}

OperatorExtensionResult extend_operator(const Matrix& op, const SituationEmbedding& s) {
  const std::size_t n = s.dim();
  if (op.rows() != n || op.cols() != n)
    throw InputError("extend_operator: operator must be " + std::to_string(n) + "x" +
                     std::to_string(n) + ", got " + std::to_string(op.rows()) + "x" +
                     std::to_string(op.cols()));

  std::vector<Vector> flat;
  for (const auto& g : tensor_cone_generators(s)) flat.push_back(g.flat());
  const lp::MembershipResult r = lp::cone_membership(flat, op.flat());

  OperatorExtensionResult out;
  if (const auto* member = std::get_if<lp::ConeMember>(&r)) {
    const std::size_t m = s.m();
    OperatorExtension ext{Matrix(n, m), {}, std::vector<Vector>(m, Vector(s.rays.size()))};
    for (std::size_t a = 0; a < s.rays.size(); ++a)
      for (std::size_t j = 0; j < m; ++j) {
        const Rational& w = member->coefficients[a * m + j];
        if (w.is_zero()) continue;
        ext.decomposition.terms.push_back({a, j, w});
        ext.column_certificates[j][a] = w;
        for (std::size_t i = 0; i < n; ++i) ext.extension(i, j) += w * s.rays[a][i];
      }
    out = std::move(ext);
  } else {
    out = OperatorWitness{Matrix::from_flat(n, n, std::get<lp::ConeSeparation>(r).witness)};
  }
  const bool ok = std::visit([&](const auto& b) { return verify(op, s, b); }, out);
  if (!ok) throw std::logic_error("extend_operator: produced an unverifiable result");
  return out;
}

bool verify(const Matrix& op, const SituationEmbedding& s, const OperatorExtension& ext) {
  const std::size_t n = s.dim(), m = s.m();
  if (ext.extension.rows() != n || ext.extension.cols() != m) return false;
  if (ext.extension * s.t != op) return false;
  if (ext.column_certificates.size() != m) return false;
  for (std::size_t j = 0; j < m; ++j) {
    const Vector& cert = ext.column_certificates[j];
    if (cert.size() != s.rays.size()) return false;
    Vector y(n);
    for (std::size_t a = 0; a < s.rays.size(); ++a) {
      if (cert[a].sign() < 0) return false;
      y = y + cert[a] * s.rays[a];
    }
    if (y != ext.extension.col(j)) return false;
  }
  Matrix sum(n, n);
  for (const auto& term : ext.decomposition.terms) {
    if (term.weight.sign() <= 0 || term.ray_index >= s.rays.size() || term.phi_index >= m)
      return false;
    sum = sum + term.weight * outer(s.rays[term.ray_index], s.phis[term.phi_index]);
  }
  return sum == op;
}

bool verify(const Matrix& op, const SituationEmbedding& s, const OperatorWitness& w) {
  if (w.h.rows() != s.dim() || w.h.cols() != s.dim()) return false;
  for (const auto& p : s.rays)
    for (const auto& phi : s.phis)
      if (dot(p, w.h * phi).sign() < 0) return false;
  return frobenius(op, w.h).sign() < 0;
}

IdentityApproximation identity_approximable(const Wedge& e_plus) {
  SituationEmbedding s = build_situation(e_plus);
  OperatorExtensionResult evidence = extend_operator(Matrix::identity(s.dim()), s);
  const bool approximable = std::holds_alternative<OperatorExtension>(evidence);
  if (approximable != classify(e_plus).is_simplex)
    throw std::logic_error("identity_approximable: tensor-cone decision disagrees with simplex test");
  return {approximable, std::move(s), std::move(evidence)};
}

}  // namespace conelab
