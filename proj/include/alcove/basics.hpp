#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace alcove {

// Integer vectors of length 2n with 1-based accessors throughout, matching
// the convention that indices live in {1,...,2n} and i* := 2n+1-i.
using Vec = std::vector<int>;

inline int dual_index(int i, int two_n) { return two_n + 1 - i; }

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

// Violations of internal invariants that valid inputs can never trigger.
inline void internal_check(bool cond, const std::string& msg) {
  if (!cond) throw std::logic_error("internal invariant violated: " + msg);
}

inline int vec_sum(const Vec& v) {
  int s = 0;
  for (int x : v) s += x;
  return s;
}

inline Vec vec_add(const Vec& a, const Vec& b) {
  require(a.size() == b.size(), "vector size mismatch");
  Vec r(a.size());
  for (size_t k = 0; k < a.size(); ++k) r[k] = a[k] + b[k];
  return r;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
  require(a.size() == b.size(), "vector size mismatch");
  Vec r(a.size());
  for (size_t k = 0; k < a.size(); ++k) r[k] = a[k] - b[k];
  return r;
}

inline Vec vec_neg(const Vec& a) {
  Vec r(a.size());
  for (size_t k = 0; k < a.size(); ++k) r[k] = -a[k];
  return r;
}

// Unit vector e_j (1-based j) of length len.
inline Vec unit_vec(int j, int len) {
  Vec r(len, 0);
  r[j - 1] = 1;
  return r;
}

inline long long binom2(long long n) { return n * (n - 1) / 2; }

inline long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
  return r;
}

// Membership in the cyclic interval [lo, hi) of Z/mZ; lo != hi.
inline bool in_cyclic_interval(int k, int lo, int hi, int m) {
  k %= m;
  lo %= m;
  hi %= m;
  if (lo < hi) return lo <= k && k < hi;
  return k >= lo || k < hi;
}

}  // namespace alcove
