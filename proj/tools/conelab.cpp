// conelab: command-line access to cone duality, positive extension, and the
// extension experiments. Inputs are JSON files or inline JSON; results are
// written as JSON (default) or text. Exit codes: 0 positive decision,
// 1 negative decision with certificate, 2 input error, 3 internal failure.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "conelab/commands.hpp"

namespace {

using namespace conelab;

struct Global {
  std::string out;
  std::string format = "json";
};

Wedge load_cone(const std::string& src) { return io::wedge_from_json(io::load_json(src)); }
Subspace load_subspace(const std::string& src) {
  return io::subspace_from_json(io::load_json(src));
}

int emit(const commands::Output& result, const Global& g) {
  const std::string payload = g.format == "text" ? result.text : io::dump(result.body);
  if (g.out.empty()) {
    std::cout << payload;
  } else {
    std::ofstream file(g.out, std::ios::binary);
    if (!file) throw InputError("cannot write \"" + g.out + "\"");
    file << payload;
  }
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact cone duality and positive extension toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_option("--out", g.out, "Write the result here instead of standard output");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "text"}));

  std::string cone, subspace, functional, op = "identity";
  std::size_t n = 0;
  std::uint64_t seed = 0;
  unsigned workers = 0;
  commands::LorentzDemoOptions lorentz;

  auto* dual = app.add_subcommand("dual", "Dual wedge of a finitely generated wedge");
  dual->add_option("--in", cone, "Wedge JSON (file or inline)")->required();
  auto* rays = app.add_subcommand("rays", "Extremal rays of a pointed cone");
  rays->add_option("--in", cone, "Wedge JSON")->required();
  auto* classify = app.add_subcommand("classify", "Generating/pointed/simplex classification");
  classify->add_option("--in", cone, "Wedge JSON")->required();

  auto* intersect = app.add_subcommand("intersect", "Intersection with a subspace, in its coordinates");
  intersect->add_option("--cone", cone, "Wedge JSON")->required();
  intersect->add_option("--subspace", subspace, "Subspace JSON")->required();

  auto* extend_f = app.add_subcommand("extend-functional", "Positive extension of a functional on E");
  extend_f->add_option("--cone", cone, "Wedge JSON for F+")->required();
  extend_f->add_option("--subspace", subspace, "Subspace JSON for E")->required();
  extend_f->add_option("--functional", functional, "Values on E's basis (JSON array)")->required();

  auto* situation = app.add_subcommand("situation", "Embed E into R^m via the dual extremal rays");
  situation->add_option("--cone", cone, "Wedge JSON for E+")->required();

  auto* extend_op = app.add_subcommand("extend-operator", "Positive extension of an operator E -> E");
  extend_op->add_option("--cone", cone, "Wedge JSON for E+")->required();
  extend_op->add_option("--op", op, "\"identity\" or a matrix JSON");

  auto* identity = app.add_subcommand("identity-test", "Is the identity a positive tensor sum?");
  identity->add_option("--cone", cone, "Wedge JSON for E+")->required();

  auto* almost = app.add_subcommand("almost-all", "Sample positive functionals and extend them");
  almost->add_option("--cone", cone, "Wedge JSON for F+")->required();
  almost->add_option("--subspace", subspace, "Subspace JSON for E")->required();
  almost->add_option("--n", n, "Number of samples")->required();
  almost->add_option("--seed", seed, "RNG seed")->required();
  almost->add_option("--workers", workers, "Worker threads (0 = hardware concurrency)");

  auto* demo = app.add_subcommand("lorentz-demo", "Density at a non-extendable Lorentz functional");
  demo->add_option("--u", lorentz.point.u, "Value on (1,0,1)");
  demo->add_option("--v", lorentz.point.v, "Value on (0,1,0)");
  demo->add_option("--eps", lorentz.eps, "Approximation tolerance");
  demo->add_option("--n", lorentz.samples, "Number of density samples");
  demo->add_option("--seed", lorentz.seed, "RNG seed")->required();

  auto* counter = app.add_subcommand("counterexample", "Operator-extension counterexample report");
  counter->add_option("--cone", cone, "Wedge JSON for E+")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return commands::kInputError;
  }

  try {
    commands::Output result;
    if (*dual) {
      result = commands::dual(load_cone(cone));
    } else if (*rays) {
      result = commands::rays(load_cone(cone));
    } else if (*classify) {
      result = commands::classify(load_cone(cone));
    } else if (*intersect) {
      result = commands::intersect(load_cone(cone), load_subspace(subspace));
    } else if (*extend_f) {
      const Vector f = io::vector_from_json(io::load_json(functional), "functional");
      result = commands::extend_functional(load_cone(cone), load_subspace(subspace), {f});
    } else if (*situation) {
      result = commands::situation(load_cone(cone));
    } else if (*extend_op) {
      std::optional<Matrix> m;
      if (op != "identity") m = io::matrix_from_json(io::load_json(op), "op");
      result = commands::extend_operator(load_cone(cone), m);
    } else if (*identity) {
      result = commands::identity_test(load_cone(cone));
    } else if (*almost) {
      result = commands::almost_all(load_cone(cone), load_subspace(subspace), n, seed, workers);
    } else if (*demo) {
      result = commands::lorentz_demo(lorentz);
    } else if (*counter) {
      result = commands::counterexample(load_cone(cone));
    }
    return emit(result, g);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return commands::kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return commands::kInternalError;
  }
}
