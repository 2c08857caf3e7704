#include "conelab/serialize.hpp"

#include <fstream>
#include <sstream>

namespace conelab::io {

json to_json(const Rational& r) { return r.str(); }

json to_json(const Vector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

json to_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

namespace {

json vectors(const std::vector<Vector>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(to_json(v));
  return out;
}

}  // namespace

json to_json(const Wedge& w) {
  return {{"dim", w.dim()}, {"generators", vectors(w.generators())}};
}

json to_json(const Subspace& e) {
  json cols = json::array();
  for (std::size_t c = 0; c < e.dim(); ++c) cols.push_back(to_json(e.basis().col(c)));
  return {{"ambient_dim", e.ambient_dim()}, {"basis", cols}};
}

json to_json(const WedgeClass& c) {
  return {{"is_generating", c.is_generating},
          {"lineality_dim", c.lineality_dim},
          {"is_cone", c.is_cone},
          {"is_simplex", c.is_simplex},
          {"extremal_ray_count", c.extremal_ray_count}};
}

json to_json(const SituationEmbedding& s) {
  return {{"dim", s.dim()},
          {"m", s.m()},
          {"e_plus", to_json(s.e_plus)},
          {"rays", vectors(s.rays)},
          {"phis", vectors(s.phis)},
          {"T", to_json(s.t)}};
}

json to_json(const lp::MembershipResult& r) {
  if (const auto* m = std::get_if<lp::ConeMember>(&r))
    return {{"member", true}, {"coefficients", to_json(m->coefficients)}};
  return {{"member", false}, {"witness", to_json(std::get<lp::ConeSeparation>(r).witness)}};
}

json to_json(const FunctionalExtensionResult& r, const FunctionalOnSubspace& f,
             const Subspace& e, const Wedge& f_plus) {
  if (const auto* ext = std::get_if<FunctionalExtension>(&r)) {
    json pairings = json::array();
    for (const auto& g : f_plus.generators()) pairings.push_back(to_json(dot(g, ext->phi)));
    return {{"extendable", true},
            {"phi", to_json(ext->phi)},
            {"certificate",
             {{"restriction", to_json(e.restrict(ext->phi))},
              {"target", to_json(f.coords)},
              {"generator_pairings", pairings}}}};
  }
  const auto& w = std::get<NonExtendable>(r);
  return {{"extendable", false},
          {"witness",
           {{"coords", to_json(w.coords)},
            {"point", to_json(w.point)},
            {"cone_coefficients", to_json(w.cone_coefficients)}}},
          {"certificate", {{"functional_at_witness", to_json(dot(f.coords, w.coords))}}}};
}

json to_json(const OperatorExtensionResult& r, const Matrix& op, const SituationEmbedding& s) {
  if (const auto* ext = std::get_if<OperatorExtension>(&r)) {
    json terms = json::array();
    for (const auto& t : ext->decomposition.terms)
      terms.push_back({{"ray", t.ray_index},
                       {"phi", t.phi_index},
                       {"weight", to_json(t.weight)},
                       {"x", to_json(t.weight * s.rays[t.ray_index])},
                       {"psi", to_json(s.phis[t.phi_index])}});
    return {{"extendable", true},
            {"extension", to_json(ext->extension)},
            {"decomposition", terms},
            {"certificate",
             {{"extension_times_T", to_json(ext->extension * s.t)},
              {"column_ray_coefficients", vectors(ext->column_certificates)}}}};
  }
  const auto& w = std::get<OperatorWitness>(r);
  json pairings = json::array();
  for (std::size_t a = 0; a < s.rays.size(); ++a)
    for (std::size_t j = 0; j < s.phis.size(); ++j)
      pairings.push_back(
          {{"ray", a}, {"phi", j}, {"value", to_json(dot(s.rays[a], w.h * s.phis[j]))}});
  return {{"extendable", false},
          {"witness", to_json(w.h)},
          {"certificate",
           {{"pairings", pairings}, {"operator_pairing", to_json(frobenius(op, w.h))}}}};
}

json to_json(const AlmostAllReport& r) {
  return {{"samples", r.samples},
          {"extendable", r.extendable},
          {"fraction", r.fraction ? json(r.fraction->str()) : json(nullptr)},
          {"seed", r.seed},
          {"coefficient_bound", r.coefficient_bound},
          {"instance",
           {{"cone_dim", r.cone_dim},
            {"cone_generators", r.cone_generators},
            {"subspace_dim", r.subspace_dim},
            {"dual_generators", r.dual_generators}}}};
}

json to_json(const LorentzExtension& phi) {
  return {{"a", phi.a.hi}, {"a_lo", phi.a.lo}, {"b", phi.b}, {"c", phi.c.hi}, {"c_lo", phi.c.lo}};
}

json to_json(const LorentzDensityReport& r) {
  return {{"samples", r.samples},
          {"extendable", r.extendable},
          {"fraction", r.fraction},
          {"seed", r.seed},
          {"residual_failures", r.residual_failures},
          {"max_cone_residual", r.max_cone_residual},
          {"max_restriction_residual", r.max_restriction_residual}};
}

json to_json(const CounterexampleReport& r) {
  json out = {{"cone", to_json(r.cone)},
              {"classification", to_json(r.classification)},
              {"situation", to_json(r.situation)},
              {"simplex", r.simplex},
              {"identity_extendable", r.identity_extendable},
              {"strict_containment", r.strict_containment},
              {"identity", to_json(r.evidence, Matrix::identity(r.cone.dim()), r.situation)}};
  return out;
}

Rational rational_from_json(const json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const InputError& e) {
      throw InputError(where + ": " + e.what());
    }
  }
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw InputError(where + ": expected a rational string \"p/q\" or an integer");
}

Vector vector_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array");
  Vector v;
  for (std::size_t i = 0; i < j.size(); ++i)
    v.push_back(rational_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  return v;
}

Matrix matrix_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw InputError(where + ": expected a non-empty array of rows");
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < j.size(); ++i)
    rows.push_back(vector_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  const std::size_t cols = rows.front().size();
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (rows[i].size() != cols)
      throw InputError(where + "[" + std::to_string(i) + "]: expected " + std::to_string(cols) +
                       " entries");
  return Matrix::from_rows(rows, cols);
}

namespace {

const json& field(const json& j, const char* name, const char* object) {
  if (!j.is_object()) throw InputError(std::string(object) + ": expected a JSON object");
  const auto it = j.find(name);
  if (it == j.end())
    throw InputError(std::string(object) + ": missing field \"" + name + "\"");
  return *it;
}

std::size_t positive_count(const json& j, const char* name) {
  if (!j.is_number_unsigned() || j.get<std::size_t>() == 0)
    throw InputError(std::string("field \"") + name + "\": expected a positive integer");
  return j.get<std::size_t>();
}

}  // namespace

Wedge wedge_from_json(const json& j) {
  const std::size_t dim = positive_count(field(j, "dim", "wedge"), "dim");
  const json& gens = field(j, "generators", "wedge");
  if (!gens.is_array()) throw InputError("field \"generators\": expected an array");
  std::vector<Vector> out;
  for (std::size_t i = 0; i < gens.size(); ++i)
    out.push_back(vector_from_json(gens[i], "generators[" + std::to_string(i) + "]"));
  return Wedge(dim, std::move(out));
}

Subspace subspace_from_json(const json& j) {
  const std::size_t n = positive_count(field(j, "ambient_dim", "subspace"), "ambient_dim");
  const json& basis = field(j, "basis", "subspace");
  if (!basis.is_array()) throw InputError("field \"basis\": expected an array of columns");
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < basis.size(); ++i)
    cols.push_back(vector_from_json(basis[i], "basis[" + std::to_string(i) + "]"));
  return Subspace::from_columns(cols, n);
}

json load_json(const std::string& path_or_inline) {
  const auto first = path_or_inline.find_first_not_of(" \t\r\n");
  std::string text;
  std::string origin = path_or_inline;
  if (first != std::string::npos &&
      (path_or_inline[first] == '{' || path_or_inline[first] == '[')) {
    text = path_or_inline;
    origin = "inline JSON";
  } else {
    std::ifstream in(path_or_inline);
    if (!in) throw InputError("cannot open \"" + path_or_inline + "\"");
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(origin + ": malformed JSON: " + e.what());
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string render_text(const Wedge& w) {
  std::ostringstream os;
  os << "wedge in dimension " << w.dim() << " with " << w.size() << " generator(s)\n";
  for (const auto& g : w.generators()) {
    os << "  (";
    for (std::size_t i = 0; i < g.size(); ++i) os << (i ? ", " : "") << g[i];
    os << ")\n";
  }
  return os.str();
}

namespace {

std::string tuple(const Vector& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ")";
  return os.str();
}

}  // namespace

std::string render_text(const CounterexampleReport& r) {
  std::ostringstream os;
  const auto& s = r.situation;
  os << "cone: " << r.cone.size() << " generator(s) in dimension " << r.cone.dim() << ", "
     << s.rays.size() << " extremal ray(s), dual cone with " << s.m() << " extremal ray(s)\n";
  os << "simplex cone: " << (r.simplex ? "yes" : "no") << "\n";
  os << "identity extends to a positive map R^" << s.m() << " -> E: "
     << (r.identity_extendable ? "yes" : "no") << "\n";
  if (const auto* ext = std::get_if<OperatorExtension>(&r.evidence)) {
    os << "identity = sum of " << ext->decomposition.terms.size() << " positive tensor(s):\n";
    for (const auto& t : ext->decomposition.terms)
      os << "  " << t.weight << " * " << tuple(s.rays[t.ray_index]) << " (x) "
         << tuple(s.phis[t.phi_index]) << "\n";
  } else {
    const auto& w = std::get<OperatorWitness>(r.evidence);
    os << "separating form H:\n";
    for (std::size_t i = 0; i < w.h.rows(); ++i) os << "  " << tuple(w.h.row(i)) << "\n";
    os << "verified pairings p^T H phi >= 0 (" << r.pairings.size() << "):\n";
    for (const auto& p : r.pairings)
      os << "  p = " << tuple(s.rays[p.ray_index]) << ", phi = " << tuple(s.phis[p.phi_index])
         << ": " << p.value << " >= 0\n";
    os << "verified <id, H> = trace(H) = " << *r.identity_pairing << " < 0\n";
  }
  os << "extendable positive operators form a strictly smaller closed cone: "
     << (r.strict_containment ? "yes" : "no") << "\n";
  return os.str();
}

}  // namespace conelab::io
