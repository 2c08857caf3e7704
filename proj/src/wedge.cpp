#include "conelab/wedge.hpp"

#include <algorithm>
#include <string>

#include "conelab/double_description.hpp"

namespace conelab {

namespace {

void canonicalize(std::vector<Vector>& gens) {
  for (auto& g : gens) g = primitive(g);
  std::erase_if(gens, [](const Vector& g) { return is_zero(g); });
  std::sort(gens.begin(), gens.end(),
            [](const Vector& x, const Vector& y) { return lex_compare(x, y) > 0; });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
}

std::vector<Vector> without(const std::vector<Vector>& gens, std::size_t skip) {
  std::vector<Vector> rest;
  rest.reserve(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (i != skip) rest.push_back(gens[i]);
  return rest;
}

/// Generators whose negatives lie in the wedge; they span W ∩ −W.
std::vector<Vector> lineality_generators(const Wedge& w) {
  std::vector<Vector> out;
  for (const auto& g : w.generators())
    if (lp::is_member(w.contains(Rational(-1) * g))) out.push_back(g);
  return out;
}

Wedge from_cone_generators(std::size_t dim, const ConeGenerators& cg) {
  std::vector<Vector> gens = cg.rays;
  for (const auto& l : cg.lineality) {
    gens.push_back(l);
    gens.push_back(Rational(-1) * l);
  }
  return Wedge(dim, std::move(gens));
}

}  // namespace

Wedge::Wedge(std::size_t dim, std::vector<Vector> generators)
    : dim_(dim), generators_(std::move(generators)) {
  if (dim_ == 0) throw InputError("wedge: ambient dimension must be at least 1");
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i].size() != dim_)
      throw InputError("generator " + std::to_string(i) + ": expected dim " +
                       std::to_string(dim_));
  canonicalize(generators_);
}

Wedge Wedge::orthant(std::size_t dim) {
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < dim; ++i) gens.push_back(unit_vector(dim, i));
  return Wedge(dim, std::move(gens));
}

Wedge Wedge::whole_space(std::size_t dim) {
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < dim; ++i) {
    gens.push_back(unit_vector(dim, i));
    gens.push_back(Rational(-1) * unit_vector(dim, i));
  }
  return Wedge(dim, std::move(gens));
}

lp::MembershipResult Wedge::contains(const Vector& x) const {
  require_dim(x, dim_, "wedge membership target");
  return lp::cone_membership(generators_, x);
}

Subspace::Subspace(Matrix basis) : basis_(std::move(basis)) {
  if (basis_.rows() == 0) throw InputError("subspace: ambient dimension must be at least 1");
  if (basis_.cols() == 0) throw InputError("subspace: basis must have at least one column");
  if (rank(basis_) != basis_.cols())
    throw InputError("subspace: basis columns are linearly dependent");
}

Subspace Subspace::from_columns(const std::vector<Vector>& columns, std::size_t ambient_dim) {
  for (std::size_t i = 0; i < columns.size(); ++i)
    if (columns[i].size() != ambient_dim)
      throw InputError("basis column " + std::to_string(i) + ": expected dim " +
                       std::to_string(ambient_dim));
  return Subspace(Matrix::from_cols(columns, ambient_dim));
}

Subspace Subspace::full(std::size_t ambient_dim) {
  return Subspace(Matrix::identity(ambient_dim));
}

std::optional<Vector> Subspace::to_coords(const Vector& x) const {
  require_dim(x, ambient_dim(), "subspace point");
  return solve_linear(basis_, x);
}

Vector Subspace::restrict(const Vector& functional) const {
  require_dim(functional, ambient_dim(), "functional");
  return basis_.transpose() * functional;
}

Wedge dual_wedge(const Wedge& w) {
  return from_cone_generators(w.dim(), enumerate_cone(w.generators(), w.dim()));
}

std::vector<Vector> extremal_rays(const Wedge& w) {
  if (lineality_dim(w) != 0)
    throw InputError("extremal rays are undefined for a wedge containing a line");
  const auto& gens = w.generators();
  std::vector<Vector> rays;
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (!lp::is_member(lp::cone_membership(without(gens, i), gens[i]))) rays.push_back(gens[i]);
  return rays;
}

Wedge intersect_subspace(const Wedge& w, const Subspace& e) {
  if (e.ambient_dim() != w.dim())
    throw InputError("intersect_subspace: subspace ambient dim " +
                     std::to_string(e.ambient_dim()) + " differs from wedge dim " +
                     std::to_string(w.dim()));
  if (w.is_zero()) return Wedge::zero(e.dim());

  // W ∩ E = { Gλ : λ ≥ 0, N·Gλ = 0 } where the rows of N cut out E.
  const std::size_t k = w.size();
  const Matrix gens = Matrix::from_cols(w.generators(), w.dim());
  const std::vector<Vector> annihilators = kernel_basis(e.basis().transpose());
  std::vector<Vector> constraints;
  for (std::size_t i = 0; i < k; ++i) constraints.push_back(unit_vector(k, i));
  for (const auto& row : annihilators) {
    Vector c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = dot(row, w.generators()[i]);
    constraints.push_back(c);
    constraints.push_back(Rational(-1) * c);
  }
  const ConeGenerators lambda = enumerate_cone(constraints, k);

  std::vector<Vector> coords;
  for (const auto& ray : lambda.rays) {
    auto c = e.to_coords(gens * ray);
    if (!c) throw std::logic_error("intersect_subspace: combination left the subspace");
    coords.push_back(std::move(*c));
  }
  return reduce(Wedge(e.dim(), std::move(coords)));
}

std::size_t lineality_dim(const Wedge& w) {
  return rank(lineality_generators(w), w.dim());
}

WedgeClass classify(const Wedge& w) {
  WedgeClass c;
  c.is_generating = rank(w.generators(), w.dim()) == w.dim();
  c.lineality_dim = lineality_dim(w);
  c.is_cone = c.lineality_dim == 0;
  if (c.is_cone) {
    const auto rays = extremal_rays(w);
    c.extremal_ray_count = rays.size();
    c.is_simplex = c.is_generating && rays.size() == w.dim() && rank(rays, w.dim()) == w.dim();
  }
  return c;
}

bool wedge_equal(const Wedge& a, const Wedge& b) {
  if (a.dim() != b.dim())
    throw InputError("wedge_equal: dimensions " + std::to_string(a.dim()) + " and " +
                     std::to_string(b.dim()) + " differ");
  for (const auto& g : a.generators())
    if (!lp::is_member(b.contains(g))) return false;
  for (const auto& g : b.generators())
    if (!lp::is_member(a.contains(g))) return false;
  return true;
}

bool double_dual_check(const Wedge& w) { return wedge_equal(dual_wedge(dual_wedge(w)), w); }

Wedge reduce(const Wedge& w) {
  const std::vector<Vector> line_gens = lineality_generators(w);
  std::vector<Vector> basis;
  if (!line_gens.empty()) {
    const EchelonForm e = reduced_row_echelon(Matrix::from_rows(line_gens, w.dim()));
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      basis.push_back(primitive_direction(e.reduced.row(r)));
  }

  std::vector<Vector> pointed;
  for (const auto& g : w.generators()) {
    if (std::find(line_gens.begin(), line_gens.end(), g) != line_gens.end()) continue;
    Vector v = g;
    if (!basis.empty()) {
      // Subtract the orthogonal projection onto span(basis).
      const std::size_t k = basis.size();
      Matrix gram(k, k);
      Vector rhs(k);
      for (std::size_t i = 0; i < k; ++i) {
        rhs[i] = dot(basis[i], g);
        for (std::size_t j = 0; j < k; ++j) gram(i, j) = dot(basis[i], basis[j]);
      }
      const Vector c = *solve_linear(gram, rhs);
      for (std::size_t i = 0; i < k; ++i) v = v - c[i] * basis[i];
    }
    pointed.push_back(std::move(v));
  }
  canonicalize(pointed);

  std::vector<Vector> gens;
  for (std::size_t i = 0; i < pointed.size(); ++i)
    if (!lp::is_member(lp::cone_membership(without(pointed, i), pointed[i])))
      gens.push_back(pointed[i]);
  for (const auto& l : basis) {
    gens.push_back(l);
    gens.push_back(Rational(-1) * l);
  }
  return Wedge(w.dim(), std::move(gens));
}

}  // namespace conelab
