#include "conelab/double_description.hpp"

#include <algorithm>

namespace conelab {

namespace {

struct Ray {
  Vector v;
  std::vector<bool> zeros;  // zeros[t]: constraint t is tight at v
};

bool subset_of(const std::vector<bool>& a, const std::vector<bool>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && !b[i]) return false;
  return true;
}

std::size_t count(const std::vector<bool>& a) {
  return static_cast<std::size_t>(std::count(a.begin(), a.end(), true));
}

/// Orthogonal projection of v onto the complement of span(basis).
Vector project_out(const Vector& v, const std::vector<Vector>& basis) {
  if (basis.empty()) return v;
  const std::size_t k = basis.size();
  Matrix gram(k, k);
  Vector rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    rhs[i] = dot(basis[i], v);
    for (std::size_t j = 0; j < k; ++j) gram(i, j) = dot(basis[i], basis[j]);
  }
  const Vector c = *solve_linear(gram, rhs);
  Vector out = v;
  for (std::size_t i = 0; i < k; ++i) out = out - c[i] * basis[i];
  return out;
}

}  // namespace

ConeGenerators enumerate_cone(std::span<const Vector> inequalities, std::size_t dim) {
  std::vector<Vector> lineality;
  for (std::size_t i = 0; i < dim; ++i) lineality.push_back(unit_vector(dim, i));
  std::vector<Ray> rays;

  for (std::size_t t = 0; t < inequalities.size(); ++t) {
    const Vector& a = inequalities[t];
    require_dim(a, dim, "inequality");

    auto pivot = std::find_if(lineality.begin(), lineality.end(),
                              [&](const Vector& l) { return !dot(a, l).is_zero(); });
    if (pivot != lineality.end()) {
      Vector l = *pivot;
      lineality.erase(pivot);
      Rational al = dot(a, l);
      if (al.sign() < 0) {
        l = Rational(-1) * l;
        al = -al;
      }
      for (auto& other : lineality) {
        const Rational s = dot(a, other);
        if (!s.is_zero()) other = primitive(other - (s / al) * l);
      }
      for (auto& r : rays) {
        const Rational s = dot(a, r.v);
        if (!s.is_zero()) r.v = primitive(r.v - (s / al) * l);
        r.zeros.push_back(true);
      }
      Ray fresh{primitive(l), std::vector<bool>(t, true)};
      fresh.zeros.push_back(false);
      rays.push_back(std::move(fresh));
      continue;
    }

    std::vector<Rational> slack(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) slack[i] = dot(a, rays[i].v);

    std::vector<Ray> next;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (slack[i].sign() < 0) continue;
      Ray r = rays[i];
      r.zeros.push_back(slack[i].is_zero());
      next.push_back(std::move(r));
    }
    // Two rays of a pointed cone of dimension d are adjacent only if at least
    // d − 2 constraints are tight at both of them.
    const std::size_t pointed_dim = dim - lineality.size();
    const std::size_t min_common = pointed_dim >= 2 ? pointed_dim - 2 : 0;
    for (std::size_t p = 0; p < rays.size(); ++p) {
      if (slack[p].sign() <= 0) continue;
      for (std::size_t q = 0; q < rays.size(); ++q) {
        if (slack[q].sign() >= 0) continue;
        std::vector<bool> common(t);
        for (std::size_t k = 0; k < t; ++k) common[k] = rays[p].zeros[k] && rays[q].zeros[k];
        if (count(common) < min_common) continue;
        bool adjacent = true;
        for (std::size_t o = 0; o < rays.size() && adjacent; ++o) {
          if (o == p || o == q) continue;
          if (subset_of(common, rays[o].zeros)) adjacent = false;
        }
        if (!adjacent) continue;
        Vector v = slack[p] * rays[q].v - slack[q] * rays[p].v;
        common.push_back(true);
        next.push_back(Ray{primitive(v), std::move(common)});
      }
    }
    rays = std::move(next);
  }

  ConeGenerators out;
  if (!lineality.empty()) {
    const EchelonForm e = reduced_row_echelon(Matrix::from_rows(lineality, dim));
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      out.lineality.push_back(primitive_direction(e.reduced.row(r)));
  }
  for (const auto& r : rays) {
    Vector v = primitive(project_out(r.v, out.lineality));
    if (!is_zero(v)) out.rays.push_back(std::move(v));
  }
  std::sort(out.rays.begin(), out.rays.end(),
            [](const Vector& x, const Vector& y) { return lex_compare(x, y) > 0; });
  out.rays.erase(std::unique(out.rays.begin(), out.rays.end()), out.rays.end());
  return out;
}

}  // namespace conelab
