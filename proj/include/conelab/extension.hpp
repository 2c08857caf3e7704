#pragma once

#include <stdexcept>
#include <variant>
#include <vector>

#include "conelab/wedge.hpp"

namespace conelab {

/// Raised when an input cone does not meet the generating/pointed
/// requirements of the operator-extension constructions.
class HypothesisError : public InputError {
 public:
  using InputError::InputError;
};

/// A linear functional on E, given by its values on E's basis vectors.
struct FunctionalOnSubspace {
  Vector coords;
};

/// ℛ = { φ|_E : φ ∈ F₊* } in E-coordinates (restrictions of the dual generators).
Wedge restriction_wedge(const Wedge& f_plus, const Subspace& e);

/// Whether F₊ ∩ E coincides with the predual of ℛ, both in E-coordinates.
bool predual_identity_check(const Wedge& f_plus, const Subspace& e);

/// φ ∈ F* with φ|_E = f and ⟨g, φ⟩ ≥ 0 for every generator g of F₊.
struct FunctionalExtension {
  Vector phi;
};

/// x = Σ cone_coefficients_i g_i ∈ F₊ ∩ E with f(x) < 0, so f ∉ ℛ.
/// `coords` locates x in E's basis.
struct NonExtendable {
  Vector coords;
  Vector point;
  Vector cone_coefficients;
};

using FunctionalExtensionResult = std::variant<FunctionalExtension, NonExtendable>;

FunctionalExtensionResult extend_functional(const FunctionalOnSubspace& f, const Subspace& e,
                                            const Wedge& f_plus);

bool verify(const FunctionalOnSubspace& f, const Subspace& e, const Wedge& f_plus,
            const FunctionalExtension& ext);
bool verify(const FunctionalOnSubspace& f, const Subspace& e, const Wedge& f_plus,
            const NonExtendable& w);

/// E with positive cone E₊ embedded in ℝᵐ (standard orthant) through the
/// extremal rays φ_1..φ_m of E₊*: x ↦ (φ_1(x), …, φ_m(x)).
struct SituationEmbedding {
  Wedge e_plus;
  std::vector<Vector> rays;  // extremal rays p_a of E₊
  std::vector<Vector> phis;  // extremal rays φ_j of E₊*
  Matrix t;                  // m × dim, rows φ_j

  std::size_t dim() const { return e_plus.dim(); }
  std::size_t m() const { return phis.size(); }
};

/// Requires E₊ generating and pointed (HypothesisError otherwise). Verifies
/// injectivity of T and bipositivity before returning.
SituationEmbedding build_situation(const Wedge& e_plus);

/// p_a φ_jᵀ for every extremal ray p_a of E₊ (outer index) and φ_j (inner index).
std::vector<Matrix> tensor_cone_generators(const SituationEmbedding& s);

struct TensorTerm {
  std::size_t ray_index;  // a
  std::size_t phi_index;  // j
  Rational weight;        // λ_{a,j} > 0
};

/// operator = Σ weight · p_a φ_jᵀ.
struct TensorDecomposition {
  std::vector<TensorTerm> terms;
};

/// Positive extension S : ℝᵐ → E with columns y_j ∈ E₊ and S·T = operator.
struct OperatorExtension {
  Matrix extension;
  TensorDecomposition decomposition;
  /// Nonnegative coefficients of y_j over the extremal rays of E₊.
  std::vector<Vector> column_certificates;
};

/// pᵀHφ ≥ 0 for every generator pair and ⟨operator, H⟩ < 0 (Frobenius).
struct OperatorWitness {
  Matrix h;
};

using OperatorExtensionResult = std::variant<OperatorExtension, OperatorWitness>;

OperatorExtensionResult extend_operator(const Matrix& op, const SituationEmbedding& s);

bool verify(const Matrix& op, const SituationEmbedding& s, const OperatorExtension& ext);
bool verify(const Matrix& op, const SituationEmbedding& s, const OperatorWitness& w);

struct IdentityApproximation {
  bool approximable;
  SituationEmbedding situation;
  OperatorExtensionResult evidence;
};

/// Decides whether id_E lies in the cone of positive tensor sums, and
/// cross-checks the answer against classify(e_plus).is_simplex
/// (std::logic_error if they disagree).
IdentityApproximation identity_approximable(const Wedge& e_plus);

}  // namespace conelab
