#pragma once

#include <utility>
#include <vector>

#include "alcove/affine_root.hpp"

namespace alcove {

// Exact geometry of the base alcove A in the standard apartment.  Points of
// the apartment are stored as integer vectors scaled by a fixed denominator
// and are only ever compared through affine-root values x_i - x_j - d, which
// are invariant under the R.(1,...,1) ambiguity.
//
// The vertices are a_0 = (0,...,0), a_0' = (-1, 0^(2n-2), 1),
// a_i = ((-1/2)^(i), 0^(2n-2i), (1/2)^(i)) for 2 <= i <= n-2,
// a_n = ((-1/2)^(n), (1/2)^(n)), and
// a_n' = ((-1/2)^(n-1), 1/2, -1/2, (1/2)^(n-1));
// the middle family is empty for n = 2, 3.
class BaseAlcove {
 public:
  explicit BaseAlcove(int n);

  // Shared per-n instance (computed once, immutable afterwards).
  static const BaseAlcove& get(int n);

  int n() const { return n_; }
  int two_n() const { return 2 * n_; }

  // Vertex lifts in doubled coordinates.
  const std::vector<Vec>& vertices_doubled() const { return vertices2_; }

  // Barycenter of the vertices, scaled by scale(); an interior point of A.
  const std::vector<long long>& barycenter_scaled() const { return barycenter_; }
  long long scale() const { return scale_; }

  // Canonical representatives (i, j) of the root-function families
  // x_i - x_j: 1 <= i < j <= 2n with i + j < 2n + 1; there are n(n-1).
  const std::vector<std::pair<int, int>>& root_pairs() const { return pairs_; }

  // The walls of A, derived from the vertex data: hyperplanes
  // x_i - x_j = d supporting A and containing a facet.
  const std::vector<AffineRoot>& walls() const { return walls_; }

 private:
  int n_;
  std::vector<Vec> vertices2_;
  std::vector<long long> barycenter_;
  long long scale_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<AffineRoot> walls_;
};

}  // namespace alcove
