#include "alcove/cochar.hpp"

namespace alcove {

Cocharacter::Cocharacter(Vec r) : r_(std::move(r)) {
  const int N = static_cast<int>(r_.size());
  require(N >= 2 && N % 2 == 0, "cocharacter must have even length >= 2");
  const int c0 = r_[0] + r_[N - 1];
  for (int j = 2; j <= N / 2; ++j)
    require(r_[j - 1] + r_[dual_index(j, N) - 1] == c0,
            "similitude constraint violated");
}

Cocharacter Cocharacter::mu1(int n) {
  Vec r(2 * n, 0);
  for (int j = 0; j < n; ++j) r[j] = 1;
  return Cocharacter(std::move(r));
}

Cocharacter Cocharacter::mu2(int n) {
  require(n >= 2, "mu2 needs n >= 2");
  Vec r(2 * n, 0);
  for (int j = 0; j < n - 1; ++j) r[j] = 1;
  r[n] = 1;
  return Cocharacter(std::move(r));
}

bool Cocharacter::is_zero() const {
  for (int x : r_)
    if (x != 0) return false;
  return true;
}

bool in_coroot_lattice(const Cocharacter& v) {
  if (v.c() != 0) return false;
  int s = 0;
  for (int j = 1; j <= v.n(); ++j) s += v(j);
  return s % 2 == 0;
}

Cocharacter act_on_vector(const SignedPermutation& s, const Cocharacter& v) {
  return Cocharacter(s.act(v.r()));
}

}  // namespace alcove
