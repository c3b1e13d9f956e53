#pragma once

#include <compare>

#include "alcove/basics.hpp"
#include "alcove/signed_perm.hpp"

namespace alcove {

// An integer vector (r_1,...,r_2n) with r_1 + r_2n = r_2 + r_{2n-1} = ... =
// r_n + r_{n+1}.  The common value is the similitude constant c.
class Cocharacter {
 public:
  explicit Cocharacter(Vec r);

  static Cocharacter zero(int n) { return Cocharacter(Vec(2 * n, 0)); }
  // mu1 = (1^(n), 0^(n)), mu2 = (1^(n-1), 0, 1, 0^(n-1)).
  static Cocharacter mu1(int n);
  static Cocharacter mu2(int n);

  int n() const { return static_cast<int>(r_.size()) / 2; }
  int size() const { return static_cast<int>(r_.size()); }
  int c() const { return r_.front() + r_.back(); }

  int operator()(int j) const { return r_[j - 1]; }
  const Vec& r() const { return r_; }

  Cocharacter operator+(const Cocharacter& o) const { return Cocharacter(vec_add(r_, o.r_)); }
  Cocharacter operator-(const Cocharacter& o) const { return Cocharacter(vec_sub(r_, o.r_)); }
  Cocharacter operator-() const { return Cocharacter(vec_neg(r_)); }
  bool is_zero() const;

  auto operator<=>(const Cocharacter&) const = default;

 private:
  Vec r_;
};

// r_1 + r_2n = ... = r_n + r_{n+1} = 0 and r_1 + ... + r_n even.
bool in_coroot_lattice(const Cocharacter& v);

Cocharacter act_on_vector(const SignedPermutation& s, const Cocharacter& v);

// A point of X_*(T) tensor R with half-integer coordinates, stored as the
// doubled integer vector so all arithmetic stays exact.
struct HalfVector {
  Vec twice;

  static HalfVector from_integral(const Vec& v) {
    Vec t(v.size());
    for (size_t k = 0; k < v.size(); ++k) t[k] = 2 * v[k];
    return HalfVector{std::move(t)};
  }
  int size() const { return static_cast<int>(twice.size()); }
  auto operator<=>(const HalfVector&) const = default;
};

}  // namespace alcove
