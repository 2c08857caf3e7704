// Acceptance suite: one PASS/FAIL line per criterion. Every LP solved while
// criteria 1-7 run is re-verified by an exact checker installed through the
// feasibility observer (criterion 8). Criterion 9 reruns 1-7 and the CLI and
// compares the recorded JSON byte for byte.

#include <sys/wait.h>

#include <array>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>

#include "conelab/commands.hpp"
#include "support/random_instances.hpp"

using namespace conelab;
using io::json;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = "first failure: " + what;
    pass = pass && ok;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// ---------------------------------------------------------------------------
// Criterion 8: independent exact re-verification of every LP result.
// ---------------------------------------------------------------------------

struct LpAudit {
  std::atomic<std::size_t> calls{0};
  std::atomic<std::size_t> feasible{0};
  std::atomic<std::size_t> infeasible{0};
  std::atomic<std::size_t> failures{0};
  std::mutex mu;
  std::string first_failure;

  void fail(const std::string& why) {
    failures++;
    std::lock_guard lock(mu);
    if (first_failure.empty()) first_failure = why;
  }
};

LpAudit audit;

// Written against the system's matrices directly rather than lp::verify.
void check_lp(const lp::FeasibilitySystem& sys, const lp::FeasibilityResult& result) {
  audit.calls++;
  const std::size_t n = sys.num_vars();
  const std::size_t me = sys.eq_matrix.rows(), mi = sys.ineq_matrix.rows();
  if (const auto* p = std::get_if<lp::FeasiblePoint>(&result)) {
    audit.feasible++;
    if (p->x.size() != n) return audit.fail("point has wrong length");
    for (std::size_t i = 0; i < me; ++i) {
      Rational s;
      for (std::size_t j = 0; j < n; ++j) s += sys.eq_matrix(i, j) * p->x[j];
      if (s != sys.eq_rhs[i]) return audit.fail("equality row " + std::to_string(i) + " violated");
    }
    for (std::size_t i = 0; i < mi; ++i) {
      Rational s;
      for (std::size_t j = 0; j < n; ++j) s += sys.ineq_matrix(i, j) * p->x[j];
      if (s.sign() < 0) return audit.fail("inequality row " + std::to_string(i) + " violated");
    }
    if (!lp::verify(sys, *p)) audit.fail("library verifier disagrees on a feasible point");
    return;
  }
  const auto& c = std::get<lp::FarkasCertificate>(result);
  audit.infeasible++;
  if (c.y.size() != me || c.z.size() != mi) return audit.fail("certificate has wrong length");
  for (const auto& z : c.z)
    if (z.sign() < 0) return audit.fail("negative z");
  for (std::size_t j = 0; j < n; ++j) {
    Rational s;
    for (std::size_t i = 0; i < me; ++i) s += c.y[i] * sys.eq_matrix(i, j);
    for (std::size_t i = 0; i < mi; ++i) s += c.z[i] * sys.ineq_matrix(i, j);
    if (!s.is_zero()) return audit.fail("certificate combination nonzero in column " + std::to_string(j));
  }
  Rational yb;
  for (std::size_t i = 0; i < me; ++i) yb += c.y[i] * sys.eq_rhs[i];
  if (yb.sign() <= 0) return audit.fail("certificate does not separate the right-hand side");
  if (!lp::verify(sys, c)) audit.fail("library verifier disagrees on a certificate");
}

// ---------------------------------------------------------------------------
// Shared instances
// ---------------------------------------------------------------------------

struct PolyInstance {
  Wedge f_plus;
  Subspace e;
};

std::vector<PolyInstance> polyhedral_instances(std::size_t count) {
  testing::Gen gen(2002);
  std::vector<PolyInstance> out;
  while (out.size() < count) {
    const std::size_t dim = gen.index(2, 5);
    Wedge w = gen.wedge_in(dim, 10, -3, 3);
    Subspace e = gen.subspace(dim, -3, 3);
    out.push_back({std::move(w), std::move(e)});
  }
  return out;
}

bool pairs_nonneg(const Wedge& w, const Vector& phi) {
  for (const auto& g : w.generators())
    if (dot(g, phi).sign() < 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Criteria
// ---------------------------------------------------------------------------

Outcome bipolar(json& art) {
  Outcome o;
  testing::Gen gen(1001);
  const auto t0 = Clock::now();
  std::size_t ok = 0;
  for (int i = 0; i < 200; ++i) {
    const Wedge w = gen.wedge(5, 10, -3, 3);
    const bool check = double_dual_check(w);
    o.require(check, "wedge " + std::to_string(i));
    ok += check;
    art["bipolar"].push_back(io::to_json(dual_wedge(w)));
  }
  const double secs = seconds_since(t0);
  o.require(secs < 30.0, "runtime " + std::to_string(secs) + " s");
  std::ostringstream s;
  s << ok << "/200 wedges, " << secs << " s";
  if (o.pass) o.detail = s.str();
  return o;
}

Outcome predual(json& art) {
  Outcome o;
  std::size_t ok = 0;
  for (const auto& [f_plus, e] : polyhedral_instances(100)) {
    const bool check = predual_identity_check(f_plus, e);
    o.require(check, "instance " + std::to_string(ok));
    ok += check;
    art["predual"].push_back(io::to_json(intersect_subspace(f_plus, e)));
  }
  if (o.pass) o.detail = std::to_string(ok) + "/100 instances";
  return o;
}

Outcome polyhedral_extension(json& art) {
  Outcome o;
  std::size_t total = 0, extended = 0, index = 0;
  for (const auto& [f_plus, e] : polyhedral_instances(100)) {
    const Wedge dual = dual_wedge(intersect_subspace(f_plus, e));
    const auto fs = sample_positive_functionals(dual, 1000, 3000 + index);
    for (const auto& f : fs) {
      ++total;
      const auto r = extend_functional(f, e, f_plus);
      const auto* ext = std::get_if<FunctionalExtension>(&r);
      if (!ext) {
        o.require(false, "instance " + std::to_string(index) + " returned NonExtendable");
        continue;
      }
      const bool ok = pairs_nonneg(f_plus, ext->phi) && e.restrict(ext->phi) == f.coords;
      o.require(ok, "instance " + std::to_string(index) + " extension fails re-verification");
      extended += ok;
    }
    art["extension"].push_back(io::to_json(fs.back().coords));
    ++index;
  }
  o.require(total == 100000, "sample count");
  if (o.pass) o.detail = std::to_string(extended) + "/" + std::to_string(total) + " functionals extended";
  return o;
}

Outcome almost_all(json& art) {
  Outcome o;
  std::size_t instances = 0;
  {
    const Subspace e = Subspace::from_columns({{1, 2, 0, 1}, {0, 1, 3, -1}}, 4);
    const auto r = almost_all_experiment(Wedge::orthant(4), e, 1000, 7);
    o.require(r.fraction && *r.fraction == 1, "orthant instance fraction");
    art["almost_all"].push_back(io::to_json(r));
    ++instances;
  }
  const auto polys = polyhedral_instances(20);
  for (std::size_t i = 0; i < polys.size(); ++i) {
    const auto r = almost_all_experiment(polys[i].f_plus, polys[i].e, 500, 40 + i);
    o.require(r.fraction && *r.fraction == 1, "random instance " + std::to_string(i));
    art["almost_all"].push_back(io::to_json(r));
    ++instances;
  }
  const auto lor = lorentz_density_experiment(100000, 7);
  o.require(lor.fraction >= 1 - 1e-6, "lorentz fraction");
  o.require(lor.residual_failures == 0, "lorentz residuals");
  art["lorentz_density"] = io::to_json(lor);
  if (o.pass) {
    std::ostringstream s;
    s << "fraction 1 on " << instances << " polyhedral instances; lorentz " << lor.extendable << "/"
      << lor.samples << " extendable, max restriction residual " << lor.max_restriction_residual;
    o.detail = s.str();
  }
  return o;
}

Outcome lorentz_density_point(json& art) {
  Outcome o;
  const LorentzFunctional f{0, 1};
  o.require(!lorentz_extendable(f).has_value(), "(0,1) reported extendable");
  const auto seq = lorentz_approximate(f, 1e-6);
  o.require(!seq.empty(), "empty sequence");
  double worst_cone = 0;
  for (const auto& step : seq) {
    const auto res = lorentz_residuals(step.f, step.phi);
    worst_cone = std::max(worst_cone, res.cone_relative);
    if (!res.ok()) o.require(false, "step " + std::to_string(step.k) + " fails verification");
    const auto again = lorentz_extendable(step.f);
    o.require(again.has_value(), "step not extendable");
  }
  const auto& last = seq.back();
  const double gap = std::max(std::abs(last.f.u - f.u), std::abs(last.f.v - f.v));
  o.require(gap <= 1e-6, "final gap");
  art["lorentz_path"] = {{"steps", seq.size()}, {"last", io::to_json(last.phi)}};
  if (o.pass) {
    std::ostringstream s;
    s << seq.size() << " steps, final gap " << gap << ", worst cone residual " << worst_cone;
    o.detail = s.str();
  }
  return o;
}

Outcome round_trip(json& art) {
  Outcome o;
  testing::Gen gen(606);
  std::size_t ok = 0;
  for (const Wedge& w : {square_cone(), Wedge::orthant(3)}) {
    const SituationEmbedding s = build_situation(w);
    for (int trial = 0; trial < 200; ++trial) {
      Matrix op(s.dim(), s.dim());
      for (const auto& p : s.rays)
        for (const auto& phi : s.phis)
          if (gen.integer(0, 1)) op = op + Rational(gen.integer(0, 12), gen.integer(1, 6)) * outer(p, phi);
      const auto r = extend_operator(op, s);
      const auto* ext = std::get_if<OperatorExtension>(&r);
      if (!ext) {
        o.require(false, "tensor combination reported non-extendable");
        continue;
      }
      // Restrict back along T, and rebuild Σ y_j φ_jᵀ from the columns.
      Matrix rebuilt(s.dim(), s.dim());
      bool columns_positive = true;
      for (std::size_t j = 0; j < s.m(); ++j) {
        const Vector y = ext->extension.col(j);
        columns_positive = columns_positive && lp::is_member(w.contains(y));
        rebuilt = rebuilt + outer(y, s.phis[j]);
      }
      Matrix from_terms(s.dim(), s.dim());
      for (const auto& t : ext->decomposition.terms)
        from_terms = from_terms + t.weight * outer(s.rays[t.ray_index], s.phis[t.phi_index]);
      const bool good = ext->extension * s.t == op && rebuilt == op && from_terms == op &&
                        columns_positive && verify(op, s, *ext);
      o.require(good, "round trip mismatch");
      ok += good;
      art["round_trip"].push_back(io::to_json(ext->extension));
    }
  }
  if (o.pass) o.detail = std::to_string(ok) + "/400 combinations (200 over each cone)";
  return o;
}

Outcome identity_battery(json& art) {
  Outcome o;
  std::vector<std::pair<std::string, Wedge>> battery = {
      {"orthant2", Wedge::orthant(2)}, {"orthant3", Wedge::orthant(3)},
      {"orthant4", Wedge::orthant(4)}, {"Q4", square_cone()},
      {"pentagon", pentagonal_cone()}};
  testing::Gen gen(707);
  for (int i = 0; i < 20; ++i)
    battery.emplace_back("simplex" + std::to_string(i), gen.simplex_cone(gen.index(2, 4), -4, 4));

  std::size_t agree = 0;
  for (const auto& [name, w] : battery) {
    const bool simplex = classify(w).is_simplex;
    const auto r = identity_approximable(w);
    o.require(r.approximable == simplex, name + ": decision disagrees with classification");
    agree += r.approximable == simplex;
    const Matrix id = Matrix::identity(w.dim());
    if (const auto* ext = std::get_if<OperatorExtension>(&r.evidence)) {
      Matrix sum(w.dim(), w.dim());
      for (const auto& t : ext->decomposition.terms) {
        o.require(t.weight.sign() > 0, name + ": nonpositive weight");
        sum = sum + t.weight * outer(r.situation.rays[t.ray_index], r.situation.phis[t.phi_index]);
      }
      o.require(sum == id, name + ": decomposition does not rebuild the identity");
    } else {
      const Matrix& h = std::get<OperatorWitness>(r.evidence).h;
      std::size_t pairings = 0;
      for (const auto& p : r.situation.rays)
        for (const auto& phi : r.situation.phis) {
          o.require(dot(p, h * phi).sign() >= 0, name + ": negative pairing");
          ++pairings;
        }
      o.require(frobenius(id, h).sign() < 0, name + ": trace not negative");
      if (name == "Q4") o.require(pairings == 16, "Q4 pairing count");
    }
    art["identity"].push_back(io::to_json(r.evidence, id, r.situation));
  }

  // Golden reference: the hand witness diag(−1,−1,1) for Q4.
  const SituationEmbedding q = build_situation(square_cone());
  Matrix hand = Matrix::identity(3);
  hand(0, 0) = -1;
  hand(1, 1) = -1;
  o.require(verify(Matrix::identity(3), q, OperatorWitness{hand}), "hand witness");
  for (const auto& p : q.rays)
    for (const auto& phi : q.phis) {
      const Rational v = dot(p, hand * phi);
      o.require(v == 0 || v == 2, "hand witness pairing outside {0, 2}");
    }
  o.require(frobenius(Matrix::identity(3), hand) == -1, "hand witness trace");
  if (o.pass) o.detail = std::to_string(agree) + "/" + std::to_string(battery.size()) + " cones agree";
  return o;
}

// ---------------------------------------------------------------------------
// Criterion 9
// ---------------------------------------------------------------------------

std::string run_cli(const std::string& args, int& code) {
  const std::string cmd = std::string(CONELAB_BIN) + " " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    code = -1;
    return {};
  }
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe);
  code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

using Criterion = Outcome (*)(json&);
const std::array<std::pair<const char*, Criterion>, 7> kCriteria = {{
    {"bipolar suite", bipolar},
    {"predual identity", predual},
    {"polyhedral extendability", polyhedral_extension},
    {"almost-all experiment", almost_all},
    {"density at a non-extendable point", lorentz_density_point},
    {"operator round-trip", round_trip},
    {"identity approximability battery", identity_battery},
}};

Outcome determinism(const std::string& first_run) {
  Outcome o;
  json again;
  for (const auto& [name, fn] : kCriteria) fn(again);
  o.require(io::dump(again) == first_run, "library JSON differs between runs");

  const std::string data = CONELAB_DATA;
  const std::string args = "almost-all --cone " + data + "/orthant4.json --subspace " + data +
                           "/e2.json --n 1000 --seed 7";
  int c1 = 0, c2 = 0, c3 = 0;
  const std::string a = run_cli(args, c1);
  const std::string b = run_cli(args, c2);
  const std::string threads = run_cli(args + " --workers 4", c3);
  o.require(c1 == 0 && c2 == 0 && c3 == 0, "cli exit code");
  o.require(!a.empty() && a == b && a == threads, "cli output differs between runs");
  const Subspace e = io::subspace_from_json(io::load_json(data + "/e2.json"));
  o.require(a == io::dump(commands::almost_all(Wedge::orthant(4), e, 1000, 7, 1).body),
            "cli output differs from library");
  if (o.pass)
    o.detail = std::to_string(first_run.size()) + " bytes of suite JSON identical; cli almost-all --seed 7 identical";
  return o;
}

void report(int index, const char* name, const Outcome& o, bool& all) {
  std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << index << "  " << name << ": "
            << o.detail << std::endl;
  all = all && o.pass;
}

}  // namespace

int main() {
  lp::set_feasibility_observer(check_lp);
  bool all = true;
  json artifacts;
  int index = 1;
  for (const auto& [name, fn] : kCriteria) {
    Outcome o;
    try {
      o = fn(artifacts);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    report(index++, name, o, all);
  }

  Outcome exclusivity;
  exclusivity.require(audit.failures == 0, audit.first_failure);
  exclusivity.require(audit.feasible > 0 && audit.infeasible > 0, "both branches exercised");
  if (exclusivity.pass)
    exclusivity.detail = std::to_string(audit.calls) + " LP results re-verified exactly (" +
                         std::to_string(audit.feasible) + " feasible, " +
                         std::to_string(audit.infeasible) + " certificates)";
  report(8, "certificate exclusivity", exclusivity, all);

  Outcome det;
  try {
    det = determinism(io::dump(artifacts));
  } catch (const std::exception& e) {
    det.require(false, std::string("exception: ") + e.what());
  }
  report(9, "determinism", det, all);

  lp::set_feasibility_observer({});
  std::cout << (all ? "all criteria passed" : "some criteria FAILED") << std::endl;
  return all ? 0 : 1;
}
