#include "conelab/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

namespace conelab {

std::uint64_t SampleStream::uniform_int(std::uint64_t bound) {
  if (bound == std::numeric_limits<std::uint64_t>::max()) return engine_();
  const std::uint64_t range = bound + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % range;
  for (;;) {
    const std::uint64_t x = engine_();
    if (x < limit) return x % range;
  }
}

double SampleStream::uniform_unit() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::vector<FunctionalOnSubspace> sample_positive_functionals(const Wedge& e_plus_dual,
                                                              std::size_t n,
                                                              std::uint64_t seed) {
  SampleStream rng(seed);
  std::vector<FunctionalOnSubspace> out;
  out.reserve(n);
  for (std::size_t s = 0; s < n; ++s) {
    Vector f(e_plus_dual.dim());
    for (const auto& r : e_plus_dual.generators()) {
      const auto c = static_cast<long>(rng.uniform_int(kCoefficientBound));
      if (c != 0) f = f + Rational(c) * r;
    }
    out.push_back({std::move(f)});
  }
  return out;
}

AlmostAllReport almost_all_experiment(const Wedge& f_plus, const Subspace& e, std::size_t n,
                                      std::uint64_t seed, unsigned workers) {
  const Wedge e_plus = intersect_subspace(f_plus, e);
  const Wedge e_plus_dual = dual_wedge(e_plus);
  const auto samples = sample_positive_functionals(e_plus_dual, n, seed);

  std::vector<char> extended(n, 0);
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(n, 1)));
  auto run = [&](unsigned w) {
    for (std::size_t i = w; i < n; i += workers)
      extended[i] = std::holds_alternative<FunctionalExtension>(
          extend_functional(samples[i], e, f_plus));
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }

  AlmostAllReport report;
  report.samples = n;
  report.extendable = static_cast<std::size_t>(std::count(extended.begin(), extended.end(), 1));
  if (n > 0)
    report.fraction = Rational(static_cast<long>(report.extendable)) /
                      Rational(static_cast<long>(n));
  report.seed = seed;
  report.cone_dim = f_plus.dim();
  report.cone_generators = f_plus.size();
  report.subspace_dim = e.dim();
  report.dual_generators = e_plus_dual.size();
  return report;
}

namespace {

// Error-free transformations; std::fma is correctly rounded.
DoubleDouble two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

DoubleDouble quick_two_sum(double a, double b) {
  const double s = a + b;
  return {s, b - (s - a)};
}

DoubleDouble two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

DoubleDouble add(const DoubleDouble& x, const DoubleDouble& y) {
  DoubleDouble s = two_sum(x.hi, y.hi);
  DoubleDouble t = two_sum(x.lo, y.lo);
  s.lo += t.hi;
  s = quick_two_sum(s.hi, s.lo);
  s.lo += t.lo;
  return quick_two_sum(s.hi, s.lo);
}

DoubleDouble divide(const DoubleDouble& x, double d) {
  const double q1 = x.hi / d;
  const DoubleDouble p = two_prod(q1, d);
  DoubleDouble r = two_sum(x.hi, -p.hi);
  r.lo -= p.lo;
  r.lo += x.lo;
  const double q2 = (r.hi + r.lo) / d;
  return quick_two_sum(q1, q2);
}

DoubleDouble subtract(double u, const DoubleDouble& c) {
  DoubleDouble s = two_sum(u, -c.hi);
  s.lo -= c.lo;
  return quick_two_sum(s.hi, s.lo);
}

void require_finite(const LorentzFunctional& f) {
  if (!std::isfinite(f.u) || !std::isfinite(f.v))
    throw InputError("lorentz functional: u and v must be finite");
}

}  // namespace

std::optional<LorentzExtension> lorentz_extendable(const LorentzFunctional& f) {
  require_finite(f);
  if (f.u == 0.0 && f.v == 0.0) return LorentzExtension{};
  if (!(f.u > 0.0)) return std::nullopt;
  const DoubleDouble norm = add(two_prod(f.u, f.u), two_prod(f.v, f.v));
  const DoubleDouble c = divide(norm, 2.0 * f.u);
  if (!std::isfinite(c.hi) || !std::isfinite(c.lo))
    throw std::overflow_error("lorentz extension: c = (u² + v²)/(2u) overflows float64");
  return LorentzExtension{subtract(f.u, c), f.v, c};
}

LorentzResiduals lorentz_residuals(const LorentzFunctional& f, const LorentzExtension& phi) {
  require_finite(f);
  const Rational a = phi.a.exact();
  const Rational b = Rational::from_double(phi.b);
  const Rational c = phi.c.exact();
  const Rational gap = c * c - a * a - b * b;

  LorentzResiduals r;
  const Rational c2 = c * c;
  r.cone_relative = c2.is_zero() ? abs(gap).to_double() : (abs(gap) / c2).to_double();
  r.in_cone = c.sign() >= 0 && (gap.sign() >= 0 || r.cone_relative <= kLorentzConeTolerance);
  const Rational du = abs(a + c - Rational::from_double(f.u));
  const Rational dv = abs(b - Rational::from_double(f.v));
  r.restriction = std::max(du, dv).to_double();
  return r;
}

std::vector<LorentzStep> lorentz_approximate(const LorentzFunctional& f, double eps) {
  require_finite(f);
  if (!std::isfinite(eps) || !(eps > 0.0)) throw InputError("eps must be positive and finite");
  if (lorentz_extendable(f)) throw InputError("nothing to approximate: functional already extends");
  if (f.u != 0.0)
    throw InputError("functional is negative on the cone over b1 and is not approximable");
  if (1.0 / eps > 1e8) throw InputError("eps too small: sequence would exceed 1e8 steps");

  std::vector<LorentzStep> steps;
  for (std::uint64_t k = 1;; ++k) {
    const LorentzFunctional fk{1.0 / static_cast<double>(k), f.v};
    steps.push_back({k, fk, *lorentz_extendable(fk)});
    if (std::abs(fk.u - f.u) <= eps) break;
  }
  return steps;
}

LorentzDensityReport lorentz_density_experiment(std::size_t n, std::uint64_t seed) {
  SampleStream rng(seed);
  LorentzDensityReport report;
  report.samples = n;
  report.seed = seed;
  for (std::size_t s = 0; s < n; ++s) {
    const double u = rng.uniform_unit();
    const double v = 2.0 * rng.uniform_unit() - 1.0;
    const LorentzFunctional f{u, v};
    const auto phi = lorentz_extendable(f);
    if (!phi) continue;
    ++report.extendable;
    const LorentzResiduals r = lorentz_residuals(f, *phi);
    report.max_cone_residual = std::max(report.max_cone_residual, r.cone_relative);
    report.max_restriction_residual = std::max(report.max_restriction_residual, r.restriction);
    if (!r.ok()) ++report.residual_failures;
  }
  report.fraction = n == 0 ? 0.0 : static_cast<double>(report.extendable) / static_cast<double>(n);
  return report;
}

CounterexampleReport counterexample_report(const Wedge& e_plus) {
  const WedgeClass cls = classify(e_plus);
  IdentityApproximation approx = identity_approximable(e_plus);

  CounterexampleReport report{e_plus, cls, approx.situation, cls.is_simplex,
                              approx.approximable, approx.evidence, {}, std::nullopt,
                              !cls.is_simplex};
  if (const auto* w = std::get_if<OperatorWitness>(&report.evidence)) {
    const auto& s = report.situation;
    for (std::size_t a = 0; a < s.rays.size(); ++a)
      for (std::size_t j = 0; j < s.phis.size(); ++j)
        report.pairings.push_back({a, j, dot(s.rays[a], w->h * s.phis[j])});
    report.identity_pairing = frobenius(Matrix::identity(s.dim()), w->h);
  }
  if (report.simplex != report.identity_extendable)
    throw std::logic_error("counterexample_report: simplex flag differs from identity extendability");
  return report;
}

Wedge square_cone() {
  return Wedge(3, {{1, 1, 1}, {1, -1, 1}, {-1, 1, 1}, {-1, -1, 1}});
}

Wedge pentagonal_cone() {
  return Wedge(3, {{1000, 0, 1000},
                   {309, 951, 1000},
                   {-809, 588, 1000},
                   {-809, -588, 1000},
                   {309, -951, 1000}});
}

Wedge planar_simplex_cone() { return Wedge(2, {{1, 0}, {1, 1}}); }

}  // namespace conelab
