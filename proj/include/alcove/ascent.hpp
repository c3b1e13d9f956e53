#pragma once

#include <vector>

#include "alcove/length_bruhat.hpp"
#include "alcove/permissibility.hpp"

namespace alcove {

// Adm°(mu) = { w : w <= t_mu' for some mu' in W°mu }, as the lower Bruhat
// closure of the orbit translations.  Canonically sorted.
std::vector<IWElement> adm_circ(int n, const Cocharacter& mu, int threads = 1);

// Adm(mu) = Adm°(mu) u Adm°(tau mu tau^{-1}); disjoint for mu1, mu2.
std::vector<IWElement> adm(int n, const Cocharacter& mu, int threads = 1);

// The combinatorial condition under which s_{i,j;0} (for i < j) or
// s_{j,i;-1} (for j < i) preserves GL-permissibility and increases length:
// i in K_j and i-tilde not in K_j.  Requires i proper.
bool lemma_glperm_bruhat(int i, int j, const IWElement& w);

// Weaker form characterizing GL-permissibility alone:
// i in K_j and j-1 not in K_i.
bool glperm_reflection_condition(int i, int j, const IWElement& w);

// For spin-permissible, non-translation w: an affine root alpha with
// reflect(alpha, w) spin-permissible and strictly longer.  Follows the
// three-case procedure on the minimal proper element; deterministic.
AffineRoot ascent_step(const IWElement& w, const Cocharacter& mu);

struct AscentStep {
  AffineRoot alpha;
  IWElement after;
};

// A reflection chain from a spin-permissible element up to an orbit
// translation t_mu', every link spin-permissible and strictly longer.
struct AscentCertificate {
  IWElement start;
  std::vector<AscentStep> chain;
  Cocharacter target;  // mu' in W°mu

  AscentCertificate(IWElement s, Cocharacter t) : start(std::move(s)), target(std::move(t)) {}
};

AscentCertificate ascent_chain(const IWElement& w, const Cocharacter& mu);

// Re-verifies every link of a certificate through the public predicates
// (spin-permissibility, strict length increase, orbit-translation end).
bool certificate_valid(const AscentCertificate& cert, const Cocharacter& mu);

}  // namespace alcove
