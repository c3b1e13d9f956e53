#include "alcove/affine_root.hpp"

#include <numeric>

namespace alcove {

AffineRoot::AffineRoot(int i_, int j_, int d_, int two_n_)
    : i(i_), j(j_), d(d_), two_n(two_n_) {
  require(1 <= i && i < j && j <= two_n, "affine root needs 1 <= i < j <= 2n");
  require(j != dual_index(i, two_n), "x_i - x_j is not a root when j = i*");
  if (i > dual_index(j, two_n)) {
    const int ni = dual_index(j, two_n);
    const int nj = dual_index(i, two_n);
    i = ni;
    j = nj;
  }
}

IWElement AffineRoot::reflection() const {
  const int N = two_n;
  const int is = dual_index(i, N);
  const int js = dual_index(j, N);
  Vec im(N);
  std::iota(im.begin(), im.end(), 1);
  std::swap(im[i - 1], im[j - 1]);
  std::swap(im[is - 1], im[js - 1]);
  Vec t(N, 0);
  t[i - 1] += d;
  t[j - 1] -= d;
  t[js - 1] += d;
  t[is - 1] -= d;
  return IWElement(Cocharacter(std::move(t)), SignedPermutation(std::move(im)));
}

IWElement reflect(const AffineRoot& alpha, const IWElement& w) {
  require(alpha.two_n == 2 * w.n(), "size mismatch in reflect");
  return alpha.reflection() * w;
}

}  // namespace alcove
