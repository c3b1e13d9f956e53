#pragma once

#include <compare>

#include "alcove/basics.hpp"

namespace alcove {

// A permutation sigma of {1,...,2n} with sigma(i*) = sigma(i)* for all i,
// stored in one-line notation.  These form the finite Weyl group of the
// split even orthogonal similitude group; the index-2 subgroup of elements
// that are even as permutations of {1,...,2n} is the Weyl group of the
// identity component.
class SignedPermutation {
 public:
  explicit SignedPermutation(Vec images);

  static SignedPermutation identity(int n);
  // The transposition (n, n+1); swaps the two dominant minuscule
  // cocharacters by conjugation and generates W / W°.
  static SignedPermutation transposition_tau(int n);

  int n() const { return static_cast<int>(images_.size()) / 2; }
  int size() const { return static_cast<int>(images_.size()); }

  // sigma(i), 1-based.
  int operator()(int i) const { return images_[i - 1]; }
  const Vec& images() const { return images_; }

  SignedPermutation compose(const SignedPermutation& rhs) const;
  SignedPermutation inverse() const;

  bool is_identity() const;
  // Parity as an element of the symmetric group S_{2n}.
  bool is_even() const;

  // Coordinate permutation action: (sigma.v)(i) = v(sigma^{-1}(i)).
  Vec act(const Vec& v) const;

  auto operator<=>(const SignedPermutation&) const = default;

 private:
  Vec images_;
};

inline bool is_in_w_circ(const SignedPermutation& s) { return s.is_even(); }

}  // namespace alcove
