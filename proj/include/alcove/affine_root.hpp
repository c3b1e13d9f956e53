#pragma once

#include <compare>

#include "alcove/iw_element.hpp"

namespace alcove {

// The affine function x_i - x_j - d on the cocharacter space, with
// 1 <= i < j <= 2n and j != i, i*.  Since x_i - x_j and x_{j*} - x_{i*}
// agree on that space, alpha_{i,j;d} = alpha_{j*,i*;d}; we normalize to the
// representative with the smaller first index.
struct AffineRoot {
  int i;
  int j;
  int d;
  int two_n;

  AffineRoot(int i_, int j_, int d_, int two_n_);

  // s_{i,j;d} as a group element: the linear part is (i j)(i* j*) and the
  // translation part is d(e_i - e_j + e_{j*} - e_{i*}); always lies in W_a.
  IWElement reflection() const;

  // Value of x_i - x_j - d at a point given in scale-multiplied coordinates.
  long long value_scaled(const std::vector<long long>& x, long long scale) const {
    return x[i - 1] - x[j - 1] - scale * d;
  }

  auto operator<=>(const AffineRoot&) const = default;
};

// s_alpha . w
IWElement reflect(const AffineRoot& alpha, const IWElement& w);

}  // namespace alcove
