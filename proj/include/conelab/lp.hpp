#pragma once

#include <functional>
#include <span>
#include <variant>
#include <vector>

#include "conelab/linalg.hpp"

namespace conelab::lp {

/// { x : eq_matrix·x = eq_rhs, ineq_matrix·x ≥ 0 } over free variables x.
struct FeasibilitySystem {
  Matrix eq_matrix;
  Vector eq_rhs;
  Matrix ineq_matrix;

  std::size_t num_vars() const { return eq_matrix.cols(); }
  /// Throws InputError unless the column counts and rhs length agree.
  void validate() const;
};

struct FeasiblePoint {
  Vector x;
};

/// Infeasibility witness: yᵀ·eq_matrix + zᵀ·ineq_matrix = 0, z ≥ 0 and
/// yᵀ·eq_rhs > 0. Any feasible x would give 0 < yᵀb = −zᵀ(Ain x) ≤ 0.
struct FarkasCertificate {
  Vector y;
  Vector z;
};

using FeasibilityResult = std::variant<FeasiblePoint, FarkasCertificate>;

/// Exact phase-one simplex with Bland's rule. Exactly one branch is returned
/// and it is re-verified before returning (std::logic_error on failure).
FeasibilityResult feasibility(const FeasibilitySystem& sys);

bool verify(const FeasibilitySystem& sys, const FeasiblePoint& p);
bool verify(const FeasibilitySystem& sys, const FarkasCertificate& c);

/// target = Σ coefficients_i · generators_i with coefficients ≥ 0.
struct ConeMember {
  Vector coefficients;
};

/// ⟨g, witness⟩ ≥ 0 for every generator g and ⟨target, witness⟩ < 0.
struct ConeSeparation {
  Vector witness;
};

using MembershipResult = std::variant<ConeMember, ConeSeparation>;

/// Decides whether `target` lies in the wedge generated by `generators`.
/// A zero target is always a member with zero coefficients; separating
/// witnesses are integer-primitive.
MembershipResult cone_membership(std::span<const Vector> generators, const Vector& target);

bool verify(std::span<const Vector> generators, const Vector& target, const ConeMember& m);
bool verify(std::span<const Vector> generators, const Vector& target, const ConeSeparation& s);

inline bool is_member(const MembershipResult& r) { return std::holds_alternative<ConeMember>(r); }

/// Called after every feasibility() solve with the system and its result.
/// Used by test harnesses to audit certificates independently. Pass an
/// empty function to uninstall. Calls may arrive from several threads.
using FeasibilityObserver = std::function<void(const FeasibilitySystem&, const FeasibilityResult&)>;
void set_feasibility_observer(FeasibilityObserver observer);

}  // namespace conelab::lp
