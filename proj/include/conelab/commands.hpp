#pragma once

// One function per CLI subcommand. The CLI only parses arguments, loads
// inputs and prints what these return, so library callers get byte-identical
// output.

#include <cstdint>
#include <optional>
#include <string>

#include "conelab/serialize.hpp"

namespace conelab::commands {

enum ExitCode : int { kPositive = 0, kNegative = 1, kInputError = 2, kInternalError = 3 };

struct Output {
  io::json body;
  std::string text;  // --format text rendering
  int exit_code = kPositive;
};

Output dual(const Wedge& cone);
Output rays(const Wedge& cone);
Output classify(const Wedge& cone);
Output intersect(const Wedge& cone, const Subspace& e);
Output extend_functional(const Wedge& cone, const Subspace& e, const FunctionalOnSubspace& f);
Output situation(const Wedge& cone);
/// `op` absent means the identity on E.
Output extend_operator(const Wedge& cone, const std::optional<Matrix>& op);
Output identity_test(const Wedge& cone);
Output almost_all(const Wedge& cone, const Subspace& e, std::size_t n, std::uint64_t seed,
                  unsigned workers);

struct LorentzDemoOptions {
  LorentzFunctional point{0.0, 1.0};
  double eps = 1e-6;
  std::size_t samples = 100000;
  std::uint64_t seed = 0;
};
Output lorentz_demo(const LorentzDemoOptions& options);

Output counterexample(const Wedge& cone);

}  // namespace conelab::commands
