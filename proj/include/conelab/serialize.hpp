#pragma once

// JSON encodings shared by the CLI and by external tools.
//
//   Rational   "p/q", or "p" when q = 1 (integers are also accepted on input)
//   Vector     ["1", "-1/2", ...]
//   Matrix     [[row], [row], ...]
//   Wedge      {"dim": n, "generators": [[...], ...]}
//   Subspace   {"ambient_dim": n, "basis": [[column], ...]}
//
// Result objects carry a "certificate" echoing every pairing needed to
// re-check the decision without this library.

#include <string>

#include <json.hpp>

#include "conelab/experiments.hpp"

namespace conelab::io {

using nlohmann::json;

json to_json(const Rational& r);
json to_json(const Vector& v);
json to_json(const Matrix& m);
json to_json(const Wedge& w);
json to_json(const Subspace& e);
json to_json(const WedgeClass& c);
json to_json(const SituationEmbedding& s);
json to_json(const lp::MembershipResult& r);
json to_json(const FunctionalExtensionResult& r, const FunctionalOnSubspace& f,
             const Subspace& e, const Wedge& f_plus);
json to_json(const OperatorExtensionResult& r, const Matrix& op, const SituationEmbedding& s);
json to_json(const AlmostAllReport& r);
json to_json(const LorentzExtension& phi);
json to_json(const LorentzDensityReport& r);
json to_json(const CounterexampleReport& r);

/// `where` names the offending field in diagnostics.
Rational rational_from_json(const json& j, const std::string& where);
Vector vector_from_json(const json& j, const std::string& where);
Matrix matrix_from_json(const json& j, const std::string& where);
Wedge wedge_from_json(const json& j);
Subspace subspace_from_json(const json& j);

/// Parses `text` as JSON, or reads and parses the file it names. Inline
/// JSON is recognised by a leading '{' or '['.
json load_json(const std::string& path_or_inline);

/// Fixed-format output: two-space indentation, trailing newline.
std::string dump(const json& j);

std::string render_text(const Wedge& w);
std::string render_text(const CounterexampleReport& r);

}  // namespace conelab::io
