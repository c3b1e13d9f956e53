#pragma once

#include <vector>

#include "alcove/extended_alcove.hpp"
#include "alcove/weyl_orbit.hpp"

namespace alcove {

// mu_i^w := v_i - omega_i; a 0/1 vector with exactly n entries equal to 1
// whenever w is GL-permissible.
class MuVector {
 public:
  explicit MuVector(Vec bits);

  int size() const { return static_cast<int>(bits_.size()); }
  int operator()(int j) const { return bits_[j - 1]; }
  const Vec& bits() const { return bits_; }

  bool totally_isotropic() const { return is_totally_isotropic(bits_); }
  MuClass iso_class() const { return classify_isotropic(bits_); }

  // E^w_i := { j : mu_i(j) = 0 }, as a sorted list.
  std::vector<int> e_set() const;

  bool operator==(const MuVector&) const = default;

 private:
  Vec bits_;
};

// K_m = { k : mu_k^w(m) = 0 } in Z/2nZ: empty, full, or the cyclic interval
// [lower, upper) with upper = m mod 2n; m is "proper" in the last case.
struct KInterval {
  enum class Kind { empty, full, interval };
  Kind kind;
  int lower = -1;  // residues in {0,...,2n-1}; valid only for Kind::interval
  int upper = -1;

  bool contains(int k, int two_n) const {
    switch (kind) {
      case Kind::empty: return false;
      case Kind::full: return true;
      case Kind::interval: return in_cyclic_interval(k, lower, upper, two_n);
    }
    return false;
  }
  bool proper() const { return kind == Kind::interval; }
};

// (P1) omega_i <= v_i <= omega_i + (1,...,1) for all i, and (P2) sum v_0 = n.
// P1 needs only 0 <= i <= n, but all rows are checked as a redundancy guard.
bool is_gl_permissible(const IWElement& w);

// The 2n vectors mu_0^w,...,mu_{2n-1}^w; rejects non-GL-permissible input.
std::vector<MuVector> mu_vectors(const IWElement& w);

// K_m for 1 <= m <= 2n; rejects non-GL-permissible input.
KInterval k_interval(const IWElement& w, int m);

// (P3) w is GL-permissible and every totally isotropic mu_i^w for
// 0 <= i <= n lies in W°mu; mu must be mu1 or mu2.
bool is_spin_permissible(const IWElement& w, const Cocharacter& mu);

// All of Perm^sp(mu), by depth-first search over the prefixes
// mu_0,...,mu_n (each step either repeats the row or moves one 1 into
// position k+1), completed by duality.  Canonically sorted.
std::vector<IWElement> enumerate_perm_sp(int n, const Cocharacter& mu);

// All GL-permissible elements of the Iwahori-Weyl group (the comparison set
// coming from GL_{2n}).  Canonically sorted.
std::vector<IWElement> z_set(int n);

// w = t_mu mod W_a and wx - x in Conv(W°mu) for every x in the closed base
// alcove; checked on the vertex lifts, which suffices since x |-> wx - x is
// affine and insensitive to the (1,...,1) ambiguity.
bool is_permissible(const IWElement& w, const Cocharacter& mu);

// Perm(mu) by filtering is_permissible over a candidate pool derived only
// from the hull condition at the origin vertex (translation part a 0/1
// isotropic vector, finite part arbitrary in W).  Independent of the
// extended-alcove enumeration pipeline.  Canonically sorted.
std::vector<IWElement> perm_set(int n, const Cocharacter& mu, int threads = 1);

}  // namespace alcove
