#include "alcove/iw_element.hpp"

namespace alcove {

IWElement::IWElement(Cocharacter t, SignedPermutation sigma)
    : t_(std::move(t)), sigma_(std::move(sigma)) {
  require(t_.size() == sigma_.size(), "translation/permutation size mismatch");
}

IWElement IWElement::identity(int n) {
  return IWElement(Cocharacter::zero(n), SignedPermutation::identity(n));
}

IWElement IWElement::translation(const Cocharacter& mu) {
  return IWElement(mu, SignedPermutation::identity(mu.n()));
}

IWElement IWElement::tau(int n) {
  return IWElement(Cocharacter::zero(n), SignedPermutation::transposition_tau(n));
}

IWElement IWElement::operator*(const IWElement& rhs) const {
  require(n() == rhs.n(), "size mismatch in multiply");
  return IWElement(t_ + act_on_vector(sigma_, rhs.t_), sigma_.compose(rhs.sigma_));
}

IWElement IWElement::inverse() const {
  const SignedPermutation si = sigma_.inverse();
  return IWElement(-act_on_vector(si, t_), si);
}

Vec IWElement::apply(const Vec& x) const {
  return vec_add(t_.r(), sigma_.act(x));
}

std::vector<long long> IWElement::apply_scaled(const std::vector<long long>& x,
                                               long long scale) const {
  const int N = sigma_.size();
  require(static_cast<int>(x.size()) == N, "size mismatch in apply_scaled");
  const SignedPermutation inv = sigma_.inverse();
  std::vector<long long> r(N);
  for (int i = 1; i <= N; ++i) r[i - 1] = x[inv(i) - 1] + scale * t_(i);
  return r;
}

}  // namespace alcove
