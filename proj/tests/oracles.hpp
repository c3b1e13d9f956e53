#pragma once

// Test-only oracles, kept independent of the library code paths they check:
// brute-force group enumeration by filtering S_{2n}, an exact rational
// convex-combination solver, and a subword-based Bruhat closure.

#include <optional>
#include <random>
#include <vector>

#include "alcove/ascent.hpp"
#include "alcove/length_bruhat.hpp"

namespace alcove::oracles {

// All of S^h_{2n} obtained by filtering every permutation of {1,...,2n};
// even_only restricts to W°.
std::vector<SignedPermutation> brute_weyl_group(int n, bool even_only);

// Exact rational arithmetic for the hull oracle.
struct Fraction {
  long long num = 0;
  long long den = 1;

  Fraction() = default;
  Fraction(long long n, long long d = 1);
  Fraction operator+(const Fraction& o) const;
  Fraction operator-(const Fraction& o) const;
  Fraction operator*(const Fraction& o) const;
  Fraction operator/(const Fraction& o) const;
  bool operator==(const Fraction& o) const { return num == o.num && den == o.den; }
  bool negative() const { return num < 0; }
  bool zero() const { return num == 0; }
};

// Does x (doubled coordinates) lie in the convex hull of the given vertices?
// Solves for barycentric weights by rational elimination; requires the
// vertex list to be affinely independent (true for the orbits at n <= 3).
bool convex_combination_oracle(const std::vector<Cocharacter>& vertices, const Vec& x_doubled);

// Lower Bruhat closure of one element via the subword property: fix a
// reduced word of the W_a part by walking through the walls of A, take all
// subword products times the omega part.
std::vector<IWElement> subword_closure(const IWElement& top);

// Every affine root (i, j, d) with |d| <= dmax.
std::vector<AffineRoot> all_roots_within(int n, int dmax);

// Uniform-ish random Iwahori-Weyl element with translation entries in
// [-span, span].
IWElement random_element(int n, std::mt19937& rng, int span = 2);

}  // namespace alcove::oracles
