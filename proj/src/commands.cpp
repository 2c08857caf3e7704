#include "conelab/commands.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace conelab::commands {

namespace {

std::string tuple(const Vector& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ")";
  return os.str();
}

std::string lines(const std::vector<Vector>& vs) {
  std::string out;
  for (const auto& v : vs) out += "  " + tuple(v) + "\n";
  return out;
}

}  // namespace

Output dual(const Wedge& cone) {
  const Wedge d = dual_wedge(cone);
  return {io::to_json(d), io::render_text(d), kPositive};
}

Output rays(const Wedge& cone) {
  const auto r = extremal_rays(cone);
  io::json body = {{"dim", cone.dim()}, {"rays", io::json::array()}};
  for (const auto& v : r) body["rays"].push_back(io::to_json(v));
  return {body, std::to_string(r.size()) + " extremal ray(s)\n" + lines(r), kPositive};
}

Output classify(const Wedge& cone) {
  const WedgeClass c = conelab::classify(cone);
  std::ostringstream os;
  os << "generating: " << (c.is_generating ? "yes" : "no") << "\n"
     << "lineality dimension: " << c.lineality_dim << "\n"
     << "pointed cone: " << (c.is_cone ? "yes" : "no") << "\n"
     << "simplex cone: " << (c.is_simplex ? "yes" : "no") << "\n"
     << "extremal rays: " << c.extremal_ray_count << "\n";
  return {io::to_json(c), os.str(), kPositive};
}

Output intersect(const Wedge& cone, const Subspace& e) {
  const Wedge w = intersect_subspace(cone, e);
  return {io::to_json(w), "in subspace coordinates: " + io::render_text(w), kPositive};
}

Output extend_functional(const Wedge& cone, const Subspace& e, const FunctionalOnSubspace& f) {
  const auto r = conelab::extend_functional(f, e, cone);
  Output out{io::to_json(r, f, e, cone), {}, kPositive};
  if (const auto* ext = std::get_if<FunctionalExtension>(&r)) {
    out.text = "extendable: phi = " + tuple(ext->phi) + "\n";
  } else {
    const auto& w = std::get<NonExtendable>(r);
    out.text = "not extendable: x = " + tuple(w.point) + " lies in the cone and f(x) = " +
               dot(f.coords, w.coords).str() + " < 0\n";
    out.exit_code = kNegative;
  }
  return out;
}

Output situation(const Wedge& cone) {
  const SituationEmbedding s = build_situation(cone);
  std::ostringstream os;
  os << "m = " << s.m() << " dual extremal rays (rows of T):\n" << lines(s.phis);
  return {io::to_json(s), os.str(), kPositive};
}

Output extend_operator(const Wedge& cone, const std::optional<Matrix>& op) {
  const SituationEmbedding s = build_situation(cone);
  const Matrix m = op.value_or(Matrix::identity(cone.dim()));
  const auto r = conelab::extend_operator(m, s);
  Output out{io::to_json(r, m, s), {}, kPositive};
  if (const auto* ext = std::get_if<OperatorExtension>(&r)) {
    out.text = "extendable: " + std::to_string(ext->decomposition.terms.size()) +
               " positive tensor term(s)\n";
  } else {
    const auto& w = std::get<OperatorWitness>(r);
    out.text = "not extendable; separating form H rows:\n";
    for (std::size_t i = 0; i < w.h.rows(); ++i) out.text += "  " + tuple(w.h.row(i)) + "\n";
    out.exit_code = kNegative;
  }
  return out;
}

Output identity_test(const Wedge& cone) {
  const IdentityApproximation a = identity_approximable(cone);
  const Matrix id = Matrix::identity(cone.dim());
  io::json body = {{"approximable", a.approximable},
                   {"simplex", conelab::classify(cone).is_simplex},
                   {"evidence", io::to_json(a.evidence, id, a.situation)}};
  return {body,
          std::string("identity approximable by extendable positive operators: ") +
              (a.approximable ? "yes" : "no") + "\n",
          a.approximable ? kPositive : kNegative};
}

Output almost_all(const Wedge& cone, const Subspace& e, std::size_t n, std::uint64_t seed,
                  unsigned workers) {
  const AlmostAllReport r = almost_all_experiment(cone, e, n, seed, workers);
  std::ostringstream os;
  os << r.extendable << " of " << r.samples << " sampled positive functionals extend; fraction "
     << (r.fraction ? r.fraction->str() : "undefined") << " (seed " << r.seed << ")\n";
  return {io::to_json(r), os.str(), r.extendable == r.samples ? kPositive : kNegative};
}

Output lorentz_demo(const LorentzDemoOptions& o) {
  io::json body;
  body["point"] = {{"u", o.point.u}, {"v", o.point.v}};
  std::ostringstream os;
  bool ok = true;

  const auto phi = lorentz_extendable(o.point);
  body["extendable"] = phi.has_value();
  if (phi) {
    const LorentzResiduals r = lorentz_residuals(o.point, *phi);
    body["phi"] = io::to_json(*phi);
    body["residuals"] = {{"cone_relative", r.cone_relative}, {"restriction", r.restriction}};
    ok = ok && r.ok();
    os << "f = (" << o.point.u << ", " << o.point.v << ") extends: phi = (" << phi->a.hi << ", "
       << phi->b << ", " << phi->c.hi << ")\n";
  } else if (o.point.u == 0.0) {
    const auto steps = lorentz_approximate(o.point, o.eps);
    double max_cone = 0.0, max_restriction = 0.0;
    bool all_verified = true;
    for (const auto& s : steps) {
      const LorentzResiduals r = lorentz_residuals(s.f, s.phi);
      max_cone = std::max(max_cone, r.cone_relative);
      max_restriction = std::max(max_restriction, r.restriction);
      all_verified = all_verified && r.ok();
    }
    const LorentzStep& last = steps.back();
    const double gap = std::max(std::abs(last.f.u - o.point.u), std::abs(last.f.v - o.point.v));
    body["approximation"] = {{"eps", o.eps},
                             {"steps", steps.size()},
                             {"final_k", last.k},
                             {"final_functional", {{"u", last.f.u}, {"v", last.f.v}}},
                             {"final_phi", io::to_json(last.phi)},
                             {"final_gap", gap},
                             {"all_verified", all_verified},
                             {"max_cone_residual", max_cone},
                             {"max_restriction_residual", max_restriction}};
    ok = ok && all_verified && gap <= o.eps;
    os << "f = (0, " << o.point.v << ") does not extend; f_k = (1/k, v) extends for every k, "
       << "and k = " << last.k << " is within " << o.eps << "\n";
  } else {
    os << "f = (" << o.point.u << ", " << o.point.v << ") is not positive on the cone\n";
  }

  const LorentzDensityReport d = lorentz_density_experiment(o.samples, o.seed);
  body["density"] = io::to_json(d);
  ok = ok && d.residual_failures == 0 && (d.samples == 0 || d.fraction >= 1.0 - 1e-6);
  os << d.extendable << " of " << d.samples << " uniform samples extend (fraction " << d.fraction
     << ", seed " << d.seed << ")\n";
  return {body, os.str(), ok ? kPositive : kNegative};
}

Output counterexample(const Wedge& cone) {
  const CounterexampleReport r = counterexample_report(cone);
  return {io::to_json(r), io::render_text(r), kPositive};
}

}  // namespace conelab::commands
