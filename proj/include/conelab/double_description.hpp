#pragma once

#include <span>
#include <vector>

#include "conelab/linalg.hpp"

namespace conelab {

/// H-to-V conversion result: the cone equals span(lineality) + cone(rays).
/// Canonical: lineality is the primitive RREF basis of the lineality space,
/// rays are integer-primitive, orthogonal to the lineality space, extreme,
/// and sorted in descending lexicographic order.
struct ConeGenerators {
  std::vector<Vector> lineality;
  std::vector<Vector> rays;
};

/// Generators of {x ∈ ℚ^dim : ⟨a, x⟩ ≥ 0 for every a in `inequalities`}
/// via the double description method (incremental insertion with the
/// combinatorial adjacency test).
ConeGenerators enumerate_cone(std::span<const Vector> inequalities, std::size_t dim);

}  // namespace conelab
