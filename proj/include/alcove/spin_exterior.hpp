#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "alcove/permissibility.hpp"

namespace alcove {

// A size-n subset E of {1,...,2n}, stored as a bitmask (bit e-1 for
// element e).  E* = 2n+1-E and E^perp = (E*)^c = (E^c)*.
class IndexSet {
 public:
  IndexSet(uint32_t mask, int two_n);
  static IndexSet from_members(const std::vector<int>& members, int two_n);

  uint32_t mask() const { return mask_; }
  int two_n() const { return two_n_; }
  bool contains(int e) const { return (mask_ >> (e - 1)) & 1u; }
  std::vector<int> members() const;

  IndexSet star() const;
  IndexSet perp() const;
  bool totally_isotropic() const { return mask_ == perp().mask_; }

  auto operator<=>(const IndexSet&) const = default;

 private:
  uint32_t mask_;
  int two_n_;
};

// Sign of sigma_E, the permutation sending {1,...,n} to the elements of E*
// in decreasing order and {n+1,...,2n} to the elements of E^perp in
// increasing order.
int sigma_sign(const IndexSet& E);

// An exact-integer element of the middle exterior power, in the wedge basis
// { e_E }.
class SpinVector {
 public:
  explicit SpinVector(int two_n) : two_n_(two_n) {}

  int two_n() const { return two_n_; }
  const std::map<uint32_t, long long>& coefficients() const { return coeff_; }
  void add(const IndexSet& E, long long c);
  long long coefficient(const IndexSet& E) const;

  bool operator==(const SpinVector&) const = default;

 private:
  int two_n_;
  std::map<uint32_t, long long> coeff_;  // zero entries are erased
};

// The involution a(e_E) = sgn(sigma_E) e_{E^perp}, extended linearly.
SpinVector apply_a(const SpinVector& v);

// A spanning set of the (sign)-eigenspace of a: the vectors
// e_E + sign*sgn(sigma_E) e_{E^perp} over unordered pairs {E, E^perp} with
// E != E^perp, together with the e_E with E = E^perp landing in this sign.
std::vector<SpinVector> eigenbasis(int n, int sign);

// Rank over Q of a list of spin vectors (exact integer elimination).
int spin_rank(const std::vector<SpinVector>& vectors);

// A T-fixed point of the naive local model: the chain of index sets
// E_0,...,E_2n (E_2n = E_0) of the standard-basis subspaces F_i, with the
// successor and duality constraints of a GL-permissible extended alcove.
class TFixedPoint {
 public:
  explicit TFixedPoint(std::vector<IndexSet> chain);

  static TFixedPoint from_element(const IWElement& w);  // w GL-permissible

  int two_n() const { return chain_.front().two_n(); }
  const std::vector<IndexSet>& chain() const { return chain_; }

 private:
  std::vector<IndexSet> chain_;
};

// Whether the point satisfies the spin condition, decided directly on the
// lattice chain: for each i the line wedge^n F_i must lie in the mod-pi
// image of the +1 eigenpart of wedge^n Lambda_i for all i, or of the -1
// eigenpart for all i.  Valuations are tracked as exact pi-exponents.
bool tfixed_spin_direct(const TFixedPoint& p);

// The combinatorial form: the totally isotropic E_i for 0 <= i <= n all lie
// in a single W°-orbit.
bool tfixed_spin_combinatorial(const TFixedPoint& p);

}  // namespace alcove
