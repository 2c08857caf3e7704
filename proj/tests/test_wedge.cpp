#include <doctest.h>

#include <algorithm>

#include "conelab/double_description.hpp"
#include "conelab/experiments.hpp"
#include "conelab/wedge.hpp"
#include "support/random_instances.hpp"

using namespace conelab;

namespace {

bool same_set(std::vector<Vector> a, std::vector<Vector> b) {
  auto less = [](const Vector& x, const Vector& y) { return lex_compare(x, y) < 0; };
  std::sort(a.begin(), a.end(), less);
  std::sort(b.begin(), b.end(), less);
  return a == b;
}

const Wedge q4 = square_cone();
const Wedge plane = Wedge::whole_space(2);

// Lattice points of [−r, r]^dim.
std::vector<Vector> lattice_box(std::size_t dim, long r) {
  std::vector<Vector> pts{Vector{}};
  for (std::size_t d = 0; d < dim; ++d) {
    std::vector<Vector> next;
    for (const auto& p : pts)
      for (long x = -r; x <= r; ++x) {
        Vector q = p;
        q.emplace_back(x);
        next.push_back(q);
      }
    pts = std::move(next);
  }
  return pts;
}

}  // namespace

TEST_CASE("wedge canonical storage") {
  const Wedge w(2, {{2, 4}, {0, 0}, {1, 2}, {0, 3}});
  CHECK(w.generators() == std::vector<Vector>{{1, 2}, {0, 1}});
  CHECK(Wedge::zero(3).is_zero());
  CHECK_THROWS_AS(Wedge(2, {{1, 0, 0}}), InputError);
  CHECK_THROWS_WITH_AS(Wedge(2, {{1, 0}, {1}}), "generator 1: expected dim 2", InputError);
  CHECK_THROWS_AS(Wedge(0, {}), InputError);
}

TEST_CASE("dual_wedge examples") {
  CHECK(dual_wedge(Wedge::orthant(3)) == Wedge::orthant(3));
  const Wedge d = dual_wedge(q4);
  CHECK(same_set(d.generators(), {{1, 0, 1}, {-1, 0, 1}, {0, 1, 1}, {0, -1, 1}}));
  CHECK(dual_wedge(plane).is_zero());
  CHECK(dual_wedge(Wedge::zero(2)) == plane);
}

TEST_CASE("dual of a wedge with lineality keeps a minimal description") {
  // Half-plane {y ≥ 0}: its dual is the ray through (0,1).
  const Wedge half(2, {{1, 0}, {-1, 0}, {0, 1}});
  CHECK(dual_wedge(half).generators() == std::vector<Vector>{{0, 1}});
  // A single ray in ℝ³: dual is a half-space = line ± plus one ray.
  const Wedge ray(3, {{1, 1, 0}});
  const Wedge d = dual_wedge(ray);
  CHECK(d.size() == 5);
  CHECK(lineality_dim(d) == 2);
  CHECK(double_dual_check(ray));
}

TEST_CASE("extremal_rays examples") {
  CHECK(extremal_rays(Wedge(2, {{1, 0}, {0, 1}, {1, 1}})) == std::vector<Vector>{{1, 0}, {0, 1}});
  CHECK(extremal_rays(q4).size() == 4);
  CHECK(extremal_rays(Wedge::orthant(3)) == Wedge::orthant(3).generators());
  CHECK_THROWS_AS(extremal_rays(plane), InputError);
  CHECK_THROWS_AS(extremal_rays(Wedge(2, {{1, 0}, {-1, 0}, {0, 1}})), InputError);
}

TEST_CASE("intersect_subspace examples") {
  const Wedge o3 = Wedge::orthant(3);
  const Subspace e = Subspace::from_columns({{1, 1, 0}, {0, 0, 1}}, 3);
  CHECK(intersect_subspace(o3, e) == Wedge::orthant(2));
  CHECK(wedge_equal(intersect_subspace(q4, Subspace::full(3)), q4));
  CHECK(intersect_subspace(o3, Subspace::from_columns({{1, -1, 0}}, 3)).is_zero());
  CHECK_THROWS_AS(intersect_subspace(Wedge::orthant(2), e), InputError);
}

TEST_CASE("classify examples") {
  const WedgeClass o = classify(Wedge::orthant(3));
  CHECK(o.is_generating);
  CHECK(o.lineality_dim == 0);
  CHECK(o.is_cone);
  CHECK(o.is_simplex);

  const WedgeClass q = classify(q4);
  CHECK(q.is_generating);
  CHECK(q.lineality_dim == 0);
  CHECK(q.is_cone);
  CHECK_FALSE(q.is_simplex);
  CHECK(q.extremal_ray_count == 4);

  CHECK(classify(planar_simplex_cone()).is_simplex);

  const WedgeClass p = classify(plane);
  CHECK(p.lineality_dim == 2);
  CHECK_FALSE(p.is_cone);
  CHECK_FALSE(p.is_simplex);

  const WedgeClass flat = classify(Wedge(3, {{1, 0, 0}, {0, 1, 0}}));
  CHECK_FALSE(flat.is_generating);
  CHECK_FALSE(flat.is_simplex);
}

TEST_CASE("wedge_equal examples") {
  CHECK(wedge_equal(Wedge(2, {{0, 1}, {1, 0}}), Wedge(2, {{1, 0}, {0, 1}})));
  CHECK(wedge_equal(Wedge::orthant(2), Wedge(2, {{1, 0}, {1, 1}, {0, 1}})));
  CHECK_FALSE(wedge_equal(Wedge::orthant(2), Wedge(2, {{1, 0}})));
  CHECK_THROWS_AS(wedge_equal(Wedge::orthant(2), Wedge::orthant(3)), InputError);
}

TEST_CASE("double_dual_check examples") {
  CHECK(double_dual_check(Wedge::orthant(3)));
  CHECK(double_dual_check(q4));
  CHECK(double_dual_check(plane));
  CHECK(double_dual_check(Wedge::zero(4)));
}

TEST_CASE("dual_wedge agrees with the lattice oracle") {
  // A lattice point is in the dual (all pairings ≥ 0) iff it is in the cone
  // of the computed dual generators.
  testing::Gen gen(31);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t dim = gen.index(1, 3);
    const Wedge w = gen.wedge_in(dim, 6, -3, 3);
    const Wedge d = dual_wedge(w);
    for (const auto& phi : lattice_box(dim, 2)) {
      bool pairs_nonneg = true;
      for (const auto& g : w.generators()) pairs_nonneg = pairs_nonneg && dot(g, phi).sign() >= 0;
      CHECK(pairs_nonneg == lp::is_member(d.contains(phi)));
    }
  }
}

TEST_CASE("duality invariants on random wedges") {
  testing::Gen gen(77);
  for (int trial = 0; trial < 100; ++trial) {
    const Wedge w = gen.wedge(5, 10, -3, 3);
    const Wedge d = dual_wedge(w);
    for (const auto& g : w.generators())
      for (const auto& r : d.generators()) CHECK(dot(g, r).sign() >= 0);
    CHECK(double_dual_check(w));

    // Minimal description: no generator of the dual is redundant modulo lineality.
    CHECK(d == reduce(d));

    const WedgeClass c = classify(w);
    if (c.is_cone) {
      const auto rays = extremal_rays(w);
      CHECK(wedge_equal(Wedge(w.dim(), rays), w));
      for (std::size_t i = 0; i < rays.size(); ++i) {
        std::vector<Vector> rest = rays;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
        CHECK_FALSE(lp::is_member(lp::cone_membership(rest, rays[i])));
      }
      if (c.is_simplex && c.is_generating) CHECK(rays.size() == w.dim());
    }
    if (c.is_simplex) CHECK(c.is_cone);
  }
}

TEST_CASE("enumerate_cone returns canonical output") {
  // {x ≥ 0, y ≥ 0} in ℝ³: lineality is the z axis.
  const std::vector<Vector> ineq = {{1, 0, 0}, {0, 1, 0}};
  const ConeGenerators g = enumerate_cone(ineq, 3);
  CHECK(g.lineality == std::vector<Vector>{{0, 0, 1}});
  CHECK(g.rays == std::vector<Vector>{{1, 0, 0}, {0, 1, 0}});
}

TEST_CASE("intersect_subspace matches the dual route on random instances") {
  testing::Gen gen(123);
  for (int trial = 0; trial < 60; ++trial) {
    const Wedge w = gen.wedge(4, 7, -3, 3);
    const Subspace e = gen.subspace(w.dim(), -2, 2);
    const Wedge inter = intersect_subspace(w, e);
    // Every generator lies in W after mapping to the ambient space...
    for (const auto& c : inter.generators()) CHECK(lp::is_member(w.contains(e.to_ambient(c))));
    // ...and H-description route: E-coordinates c with B c ∈ W.
    const Wedge d = dual_wedge(w);
    std::vector<Vector> restricted;
    for (const auto& r : d.generators()) restricted.push_back(e.restrict(r));
    CHECK(wedge_equal(inter, dual_wedge(Wedge(e.dim(), restricted))));
  }
}
