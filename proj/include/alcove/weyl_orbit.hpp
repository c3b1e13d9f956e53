#pragma once

#include <vector>

#include "alcove/cochar.hpp"
#include "alcove/signed_perm.hpp"

namespace alcove {

// All of W = S^h_{2n}, generated directly as {+-1}^n x S_n; |W| = 2^n n!.
// Sorted canonically.
std::vector<SignedPermutation> w_elements(int n);

// All of W°, generated directly as ({+-1}^n even sign changes) x S_n rather
// than by filtering S_{2n}; |W°| = 2^(n-1) n!.  Sorted canonically.
std::vector<SignedPermutation> w_circ_elements(int n);

// The W°-orbit of mu, lexicographically sorted.
std::vector<Cocharacter> orbit(const Cocharacter& mu, int n);

// mu(j) = 1 - mu(j*) for all j.
bool is_totally_isotropic(const Vec& bits);

enum class MuClass { mu1, mu2 };

// Which of the two W°-orbits a totally isotropic 0/1 vector lies in.
// The invariant is the parity of the number of zeros among positions 1..n;
// validate_mu_classifier checks this against orbit() itself.
MuClass classify_isotropic(const Vec& bits);

MuClass mu_label_class(const Cocharacter& mu);

// Cross-validates classify_isotropic against the two enumerated orbits.
// Runs once per n (thread-safe); throws on mismatch.
void validate_mu_classifier(int n);

// Membership of the half-integer point x in Conv(W° mu) for mu in
// {mu1, mu2}: 0 <= x <= 1 coordinatewise, c(x) = 1, and mu'.x >= 1 for all
// mu' in W° mu (n odd) or in tau W° mu (n even).
bool conv_contains(const Cocharacter& mu, const HalfVector& x, int n);

}  // namespace alcove
