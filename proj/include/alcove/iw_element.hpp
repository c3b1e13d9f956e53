#pragma once

#include <compare>

#include "alcove/cochar.hpp"
#include "alcove/signed_perm.hpp"

namespace alcove {

// An element (t, sigma) of the Iwahori-Weyl group X_*(T) x| W, with group
// law (t, sigma)(t', sigma') = (t + sigma.t', sigma sigma').
class IWElement {
 public:
  IWElement(Cocharacter t, SignedPermutation sigma);

  static IWElement identity(int n);
  static IWElement translation(const Cocharacter& mu);
  static IWElement tau(int n);

  int n() const { return t_.n(); }
  const Cocharacter& translation_part() const { return t_; }
  const SignedPermutation& finite_part() const { return sigma_; }

  IWElement operator*(const IWElement& rhs) const;
  IWElement inverse() const;

  bool is_translation() const { return sigma_.is_identity(); }

  // Affine action x |-> t + sigma.x on integer vectors, and on doubled or
  // otherwise scaled vectors (the translation part is added scale times).
  Vec apply(const Vec& x) const;
  std::vector<long long> apply_scaled(const std::vector<long long>& x, long long scale) const;

  auto operator<=>(const IWElement&) const = default;

 private:
  Cocharacter t_;
  SignedPermutation sigma_;
};

}  // namespace alcove
