#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "alcove/base_alcove.hpp"

namespace alcove {

// The affine-root hyperplanes strictly separating the interiors of A and
// w.A, detected on the alcove barycenters (which never lie on a hyperplane).
std::vector<AffineRoot> separating_hyperplanes(const IWElement& w);

// l(w) = number of separating hyperplanes; this equals the Coxeter length
// of the W_a part of w.
long long length(const IWElement& w);

// The unique factorization w = wa_part . omega_part with wa_part in W_a and
// omega_part stabilizing the base alcove, computed by walking w.A back to A
// through the walls of A.
std::pair<IWElement, IWElement> omega_component(const IWElement& w);
IWElement omega_part(const IWElement& w);

bool same_wa_coset(const IWElement& w, const IWElement& w2);

// { x : x <= w for some w in tops } via reflection BFS: Bruhat descent
// chains through length-decreasing reflections reach every lower element.
// Canonically sorted; deterministic for any thread count.
std::vector<IWElement> lower_closure(const std::vector<IWElement>& tops, int threads = 1);

bool bruhat_leq(const IWElement& w, const IWElement& w2);

// Memoizes lower closures per top element for repeated order queries.
class ClosureCache {
 public:
  const std::vector<IWElement>& closure_of(const IWElement& top);
  bool leq(const IWElement& lo, const IWElement& hi);

 private:
  std::map<IWElement, std::vector<IWElement>> memo_;
  std::mutex mu_;
};

}  // namespace alcove
