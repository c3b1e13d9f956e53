#include "alcove/ascent.hpp"

#include <algorithm>

namespace alcove {

std::vector<IWElement> adm_circ(int n, const Cocharacter& mu, int threads) {
  mu_label_class(mu);
  require(mu.n() == n, "size mismatch in adm_circ");
  std::vector<IWElement> tops;
  for (const Cocharacter& m : orbit(mu, n)) tops.push_back(IWElement::translation(m));
  return lower_closure(tops, threads);
}

std::vector<IWElement> adm(int n, const Cocharacter& mu, int threads) {
  const Cocharacter other =
      act_on_vector(SignedPermutation::transposition_tau(n), mu);  // tau mu tau^{-1}
  std::vector<IWElement> a = adm_circ(n, mu, threads);
  std::vector<IWElement> b = adm_circ(n, other, threads);
  std::vector<IWElement> out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  internal_check(std::adjacent_find(out.begin(), out.end()) == out.end(),
                 "Adm° halves are not disjoint");
  return out;
}

namespace {

struct KTable {
  int two_n;
  std::vector<KInterval> k;                 // K_m, 1-based by m
  std::vector<std::vector<int>> e;          // E_k^w, 0-based by k

  bool proper(int m) const { return k[m - 1].proper(); }
  // Lower endpoint of K_m as an element of {1,...,2n}.
  int tilde(int m) const {
    internal_check(proper(m), "tilde of a non-proper element");
    const int lo = k[m - 1].lower;
    return lo == 0 ? two_n : lo;
  }
  bool in_k(int m, int kk) const { return k[m - 1].contains(kk, two_n); }
};

KTable build_k_table(const IWElement& w) {
  KTable t;
  t.two_n = 2 * w.n();
  const auto mus = mu_vectors(w);
  for (int m = 1; m <= t.two_n; ++m) t.k.push_back(k_interval(w, m));
  for (int kk = 0; kk < t.two_n; ++kk) t.e.push_back(mus[kk].e_set());
  return t;
}

// Is the cyclic interval [lo1, hi1) contained in [lo2, hi2)?
bool interval_subset(int lo1, int hi1, int lo2, int hi2, int m) {
  for (int k = lo1 % m; k != hi1 % m; k = (k + 1) % m)
    if (!in_cyclic_interval(k, lo2, hi2, m)) return false;
  return true;
}

// The four-case reflection choice for a proper r with K_r = [r~, r) and
// r~ != r, r*: both [r, r~) and K_{r~} are intervals with upper endpoint r~,
// so one contains the other; ties go to the first case in listing order.
AffineRoot interval_lemma_reflection(const KTable& t, int r) {
  const int N = t.two_n;
  const int rt = t.tilde(r);
  internal_check(rt != r && rt != dual_index(r, N), "interval lemma needs r~ != r, r*");
  const KInterval& krt = t.k[rt - 1];
  internal_check(krt.proper(), "r~ must be proper");
  const bool r_in_krt = interval_subset(r % N, rt % N, krt.lower, krt.upper, N);
  const bool krt_in_r = interval_subset(krt.lower, krt.upper, r % N, rt % N, N);
  internal_check(r_in_krt || krt_in_r, "neither interval contains the other");
  if (r_in_krt && r < rt) return AffineRoot(r, rt, 0, N);
  if (r_in_krt && rt < r) return AffineRoot(rt, r, -1, N);
  if (krt_in_r && r < rt) return AffineRoot(r, rt, -1, N);
  return AffineRoot(rt, r, 0, N);
}

}  // namespace

bool glperm_reflection_condition(int i, int j, const IWElement& w) {
  const int N = 2 * w.n();
  require(1 <= i && i <= N && 1 <= j && j <= N, "index out of range");
  require(j != i && j != dual_index(i, N), "need j != i, i*");
  const KTable t = build_k_table(w);
  return t.in_k(j, i % N) && !t.in_k(i, (j - 1 + N) % N);
}

bool lemma_glperm_bruhat(int i, int j, const IWElement& w) {
  const int N = 2 * w.n();
  require(1 <= i && i <= N && 1 <= j && j <= N, "index out of range");
  require(j != i && j != dual_index(i, N), "need j != i, i*");
  const KTable t = build_k_table(w);
  require(t.proper(i), "lemma_glperm_bruhat requires i proper");
  return t.in_k(j, i % N) && !t.in_k(j, t.tilde(i) % N);
}

AffineRoot ascent_step(const IWElement& w, const Cocharacter& mu) {
  require(is_spin_permissible(w, mu), "ascent_step requires a spin-permissible element");
  require(!w.is_translation(), "ascent_step requires a non-translation element");
  const int N = 2 * w.n();
  const KTable t = build_k_table(w);

  // a: minimal proper element; then K_a = [a~, a) with a < a~ and a~ != a*.
  int a = 0;
  for (int m = 1; m <= N; ++m)
    if (t.proper(m)) {
      a = m;
      break;
    }
  internal_check(a != 0, "non-translation element has no proper index");
  internal_check(a <= w.n(), "minimal proper element exceeds n");
  const int at = t.tilde(a);
  internal_check(a < at, "minimality forces a < a~");
  internal_check(at != dual_index(a, N), "spin-permissibility forces a~ != a*");

  // b: the element entering E at step a; K_b = [a, b), and m = min(b, b*).
  const std::vector<int>& ea = t.e[a];
  const std::vector<int>& eprev = t.e[a - 1];
  std::vector<int> entered;
  std::set_difference(ea.begin(), ea.end(), eprev.begin(), eprev.end(),
                      std::back_inserter(entered));
  internal_check(entered.size() == 1, "E_a \\ E_{a-1} is not a single element");
  const int b = entered[0];
  internal_check(b != a && b != dual_index(a, N), "b collides with a or a*");
  internal_check(t.proper(b) && t.tilde(b) == a, "K_b is not [a, b)");
  const int m = std::min(b, dual_index(b, N));
  internal_check(a < m, "expected a < min(b, b*)");

  // Case of a proper r in [a, m) with r~ != r* and min(r~, r~*) < m.
  for (int r = a; r < m; ++r) {
    if (!t.proper(r)) continue;
    const int rt = t.tilde(r);
    if (rt == dual_index(r, N)) continue;
    if (std::min(rt, dual_index(rt, N)) < m) return interval_lemma_reflection(t, r);
  }

  // Case of some proper l in [a, m) other than a (with no r as above).
  for (int l = a + 1; l < m; ++l) {
    if (!t.proper(l)) continue;
    const int lt = t.tilde(l);
    if (lt == dual_index(l, N)) return AffineRoot(a, l, 0, N);
    return AffineRoot(l, m, 0, N);
  }

  // a is the only proper element in [a, m): use the interval lemma at b,
  // whose lower endpoint is a.
  return interval_lemma_reflection(t, b);
}

AscentCertificate ascent_chain(const IWElement& w, const Cocharacter& mu) {
  require(is_spin_permissible(w, mu), "ascent_chain requires a spin-permissible element");
  const long long bound = binom2(w.n());
  IWElement cur = w;
  long long len = length(cur);
  std::vector<AscentStep> chain;
  while (!cur.is_translation()) {
    const AffineRoot alpha = ascent_step(cur, mu);
    IWElement next = reflect(alpha, cur);
    internal_check(is_spin_permissible(next, mu), "ascent left the spin-permissible set");
    const long long nlen = length(next);
    internal_check(nlen > len, "ascent failed to increase length");
    chain.push_back({alpha, next});
    cur = std::move(next);
    len = nlen;
    internal_check(static_cast<long long>(chain.size()) <= bound,
                   "ascent chain exceeded the length bound");
  }
  const Cocharacter target = cur.translation_part();
  const auto orb = orbit(mu, w.n());
  internal_check(std::binary_search(orb.begin(), orb.end(), target),
                 "ascent terminated outside the orbit translations");
  AscentCertificate cert(w, target);
  cert.chain = std::move(chain);
  return cert;
}

bool certificate_valid(const AscentCertificate& cert, const Cocharacter& mu) {
  IWElement cur = cert.start;
  if (!is_spin_permissible(cur, mu)) return false;
  long long len = length(cur);
  for (const AscentStep& step : cert.chain) {
    const IWElement next = reflect(step.alpha, cur);
    if (next != step.after) return false;
    if (!is_spin_permissible(next, mu)) return false;
    const long long nlen = length(next);
    if (nlen <= len) return false;
    cur = next;
    len = nlen;
  }
  if (!cur.is_translation()) return false;
  if (cur.translation_part() != cert.target) return false;
  const auto orb = orbit(mu, mu.n());
  return std::binary_search(orb.begin(), orb.end(), cert.target);
}

}  // namespace alcove
