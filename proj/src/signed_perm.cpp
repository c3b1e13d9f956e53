#include "alcove/signed_perm.hpp"

#include <numeric>

namespace alcove {

SignedPermutation::SignedPermutation(Vec images) : images_(std::move(images)) {
  const int N = static_cast<int>(images_.size());
  require(N >= 2 && N % 2 == 0, "one-line notation must have even length >= 2");
  std::vector<char> seen(N + 1, 0);
  for (int x : images_) {
    require(1 <= x && x <= N, "image out of range");
    require(!seen[x], "images are not a bijection");
    seen[x] = 1;
  }
  for (int i = 1; i <= N; ++i)
    require(images_[dual_index(i, N) - 1] == dual_index(images_[i - 1], N),
            "sigma(i*) != sigma(i)*");
}

SignedPermutation SignedPermutation::identity(int n) {
  Vec im(2 * n);
  std::iota(im.begin(), im.end(), 1);
  return SignedPermutation(std::move(im));
}

SignedPermutation SignedPermutation::transposition_tau(int n) {
  Vec im(2 * n);
  std::iota(im.begin(), im.end(), 1);
  std::swap(im[n - 1], im[n]);
  return SignedPermutation(std::move(im));
}

SignedPermutation SignedPermutation::compose(const SignedPermutation& rhs) const {
  require(size() == rhs.size(), "size mismatch in compose");
  const int N = size();
  Vec im(N);
  for (int i = 1; i <= N; ++i) im[i - 1] = (*this)(rhs(i));
  return SignedPermutation(std::move(im));
}

SignedPermutation SignedPermutation::inverse() const {
  const int N = size();
  Vec im(N);
  for (int i = 1; i <= N; ++i) im[images_[i - 1] - 1] = i;
  return SignedPermutation(std::move(im));
}

bool SignedPermutation::is_identity() const {
  for (int i = 1; i <= size(); ++i)
    if (images_[i - 1] != i) return false;
  return true;
}

bool SignedPermutation::is_even() const {
  const int N = size();
  int inversions = 0;
  for (int a = 0; a < N; ++a)
    for (int b = a + 1; b < N; ++b)
      if (images_[a] > images_[b]) ++inversions;
  return inversions % 2 == 0;
}

Vec SignedPermutation::act(const Vec& v) const {
  require(static_cast<int>(v.size()) == size(), "size mismatch in act");
  const SignedPermutation inv = inverse();
  Vec r(v.size());
  for (int i = 1; i <= size(); ++i) r[i - 1] = v[inv(i) - 1];
  return r;
}

}  // namespace alcove
