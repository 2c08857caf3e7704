#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "conelab/extension.hpp"

namespace conelab {

// ---------------------------------------------------------------------------
// Sampling
// ---------------------------------------------------------------------------

/// mt19937_64 with portable draws: the standard distributions are
/// implementation-defined, so integer and real draws are derived directly
/// from the engine output.
class SampleStream {
 public:
  explicit SampleStream(std::uint64_t seed) : engine_(seed) {}
  /// Uniform on {0, …, bound} by rejection.
  std::uint64_t uniform_int(std::uint64_t bound);
  /// Uniform on [0, 1) with 53 random bits.
  double uniform_unit();

 private:
  std::mt19937_64 engine_;
};

// ---------------------------------------------------------------------------
// Almost-all extendability on polyhedral instances
// ---------------------------------------------------------------------------

inline constexpr std::uint64_t kCoefficientBound = 100;

struct AlmostAllReport {
  std::size_t samples = 0;
  std::size_t extendable = 0;
  std::optional<Rational> fraction;  // extendable / samples; absent when samples = 0
  std::uint64_t seed = 0;
  std::uint64_t coefficient_bound = kCoefficientBound;
  std::size_t cone_dim = 0;
  std::size_t cone_generators = 0;
  std::size_t subspace_dim = 0;
  std::size_t dual_generators = 0;  // generators of E₊* the samples combine
};

/// Samples n functionals Σ c_i r_i over the generators r_i of (F₊ ∩ E)*, with
/// c_i uniform on {0, …, 100}, and counts how many extend positively to F.
/// Samples are drawn sequentially from `seed`; evaluation is split over
/// `workers` threads (0 = hardware concurrency) and reduced in sample order.
AlmostAllReport almost_all_experiment(const Wedge& f_plus, const Subspace& e, std::size_t n,
                                      std::uint64_t seed, unsigned workers = 0);

/// The functionals almost_all_experiment evaluates, in order.
std::vector<FunctionalOnSubspace> sample_positive_functionals(const Wedge& e_plus_dual,
                                                              std::size_t n,
                                                              std::uint64_t seed);

// ---------------------------------------------------------------------------
// Lorentz cone instance
// ---------------------------------------------------------------------------
//
// F₊ = {(x, y, z) : z ≥ √(x² + y²)} ⊂ ℝ³ and E = span{b₁ = (1,0,1), b₂ = (0,1,0)}.
// F₊ ∩ E is the ray through b₁, so f = (u, v) is positive on E exactly when
// u ≥ 0, but it extends only when u > 0 or f = 0.

inline constexpr double kLorentzConeTolerance = 1e-9;         // relative, c² − a² − b²
inline constexpr double kLorentzRestrictionTolerance = 1e-12;  // absolute, φ|_E − f

/// Unevaluated sum hi + lo of two doubles with |lo| ≤ ulp(hi)/2.
struct DoubleDouble {
  double hi = 0.0;
  double lo = 0.0;
  Rational exact() const { return Rational::from_double(hi) + Rational::from_double(lo); }
};

struct LorentzFunctional {
  double u = 0.0;  // value on b₁
  double v = 0.0;  // value on b₂
};

/// φ = (a, b, c) on the boundary of the cone. The large components a and c
/// carry a double-double tail so that a + c = u holds to far below 1e-12
/// even when c ≈ v²/(2u) is huge.
struct LorentzExtension {
  DoubleDouble a;
  double b = 0.0;
  DoubleDouble c;
};

struct LorentzResiduals {
  double cone_relative = 0.0;  // |c² − a² − b²| / c² (0 when φ = 0)
  double restriction = 0.0;    // max(|a + c − u|, |b − v|)
  bool in_cone = false;        // c ≥ 0 and c² ≥ a² + b² up to the cone tolerance
  bool ok() const {
    return in_cone && cone_relative <= kLorentzConeTolerance &&
           restriction <= kLorentzRestrictionTolerance;
  }
};

/// Extension with b = v, c = (u² + v²)/(2u), a = u − c when u > 0; φ = 0 for
/// f = 0; nullopt otherwise. Throws InputError on NaN/infinite input.
std::optional<LorentzExtension> lorentz_extendable(const LorentzFunctional& f);

/// Residuals evaluated exactly on the stored doubles.
LorentzResiduals lorentz_residuals(const LorentzFunctional& f, const LorentzExtension& phi);

struct LorentzStep {
  std::uint64_t k = 0;
  LorentzFunctional f;
  LorentzExtension phi;
};

/// f_k = (1/k, v) for k = 1, 2, … until max|f_k − f| ≤ eps. Requires u = 0,
/// v ≠ 0 (InputError "nothing to approximate" for extendable f), eps > 0 and
/// at most 10^8 steps.
std::vector<LorentzStep> lorentz_approximate(const LorentzFunctional& f, double eps);

struct LorentzDensityReport {
  std::size_t samples = 0;
  std::size_t extendable = 0;
  double fraction = 0.0;
  std::uint64_t seed = 0;
  std::size_t residual_failures = 0;  // extendable samples whose φ misses a tolerance
  double max_cone_residual = 0.0;
  double max_restriction_residual = 0.0;
};

/// (u, v) uniform on [0, 1] × [−1, 1]; every extendable sample's φ is
/// checked with lorentz_residuals.
LorentzDensityReport lorentz_density_experiment(std::size_t n, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Operator counterexample
// ---------------------------------------------------------------------------

struct PairingRecord {
  std::size_t ray_index;
  std::size_t phi_index;
  Rational value;  // pᵀHφ
};

struct CounterexampleReport {
  Wedge cone;
  WedgeClass classification;
  SituationEmbedding situation;
  bool simplex = false;
  bool identity_extendable = false;
  OperatorExtensionResult evidence;
  /// Witness case: pᵀHφ for every generator pair, and ⟨id, H⟩ = trace(H).
  std::vector<PairingRecord> pairings;
  std::optional<Rational> identity_pairing;
  /// Extendable positive operators form a proper subcone of all positive operators.
  bool strict_containment = false;
};

CounterexampleReport counterexample_report(const Wedge& e_plus);

// ---------------------------------------------------------------------------
// Named instances
// ---------------------------------------------------------------------------

/// Square-based cone generated by (±1, ±1, 1).
Wedge square_cone();
/// Cone over a regular pentagon at height 1, vertices rounded to multiples of 1/1000.
Wedge pentagonal_cone();
/// cone{(1,0), (1,1)} in ℝ².
Wedge planar_simplex_cone();

}  // namespace conelab
