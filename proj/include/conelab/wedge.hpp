#pragma once

#include <optional>
#include <vector>

#include "conelab/linalg.hpp"
#include "conelab/lp.hpp"

namespace conelab {

/// Finitely generated wedge cone(generators) ⊆ ℚ^dim.
///
/// Generators are stored integer-primitive, without zero vectors or
/// duplicates, in descending lexicographic order. The zero wedge has no
/// generators. Redundant generators are kept; see reduce().
class Wedge {
 public:
  Wedge(std::size_t dim, std::vector<Vector> generators);

  static Wedge orthant(std::size_t dim);
  static Wedge zero(std::size_t dim) { return Wedge(dim, {}); }
  /// ±e_i for every coordinate.
  static Wedge whole_space(std::size_t dim);

  std::size_t dim() const { return dim_; }
  const std::vector<Vector>& generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }
  bool is_zero() const { return generators_.empty(); }

  lp::MembershipResult contains(const Vector& x) const;

  friend bool operator==(const Wedge&, const Wedge&) = default;

 private:
  std::size_t dim_;
  std::vector<Vector> generators_;
};

/// lineality_dim = dim(W ∩ −W); is_cone ⟺ lineality_dim = 0.
struct WedgeClass {
  bool is_generating = false;
  std::size_t lineality_dim = 0;
  bool is_cone = false;
  bool is_simplex = false;
  std::size_t extremal_ray_count = 0;  // 0 unless is_cone
};

/// Subspace E ⊆ ℚ^ambient_dim given by independent basis columns.
class Subspace {
 public:
  /// basis is ambient_dim × k with k ≥ 1 independent columns.
  explicit Subspace(Matrix basis);
  static Subspace from_columns(const std::vector<Vector>& columns, std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return basis_.rows(); }
  std::size_t dim() const { return basis_.cols(); }
  const Matrix& basis() const { return basis_; }

  Vector to_ambient(const Vector& coords) const { return basis_ * coords; }
  /// Coordinates of x in the basis, or nullopt when x ∉ E.
  std::optional<Vector> to_coords(const Vector& x) const;
  /// φ|_E in coordinates: Bᵀφ.
  Vector restrict(const Vector& functional) const;

 private:
  Matrix basis_;
};

/// {φ : ⟨g, φ⟩ ≥ 0 for all generators g}, minimal canonical generators
/// (±basis of the lineality space plus extreme rays orthogonal to it).
Wedge dual_wedge(const Wedge& w);

/// Generators of a pointed wedge that are not in the cone of the others.
/// Throws InputError when lineality_dim(w) > 0.
std::vector<Vector> extremal_rays(const Wedge& w);

/// W ∩ span(E) in E's basis coordinates, minimal canonical generators.
Wedge intersect_subspace(const Wedge& w, const Subspace& e);

std::size_t lineality_dim(const Wedge& w);
WedgeClass classify(const Wedge& w);

/// Mutual generator membership. Throws InputError on dimension mismatch.
bool wedge_equal(const Wedge& a, const Wedge& b);

/// Whether dual_wedge(dual_wedge(w)) equals w.
bool double_dual_check(const Wedge& w);

/// Same wedge with minimal canonical generators: ±canonical lineality basis
/// and the extreme generators projected orthogonally to the lineality space.
Wedge reduce(const Wedge& w);

}  // namespace conelab
