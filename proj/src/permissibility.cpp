#include "alcove/permissibility.hpp"

#include <algorithm>
#include <thread>

#include "alcove/length_bruhat.hpp"

namespace alcove {

MuVector::MuVector(Vec bits) : bits_(std::move(bits)) {
  const int N = static_cast<int>(bits_.size());
  require(N >= 2 && N % 2 == 0, "mu vector must have length 2n");
  int ones = 0;
  for (int b : bits_) {
    require(b == 0 || b == 1, "mu vector entries must be 0/1");
    ones += b;
  }
  require(ones == N / 2, "mu vector must have exactly n ones");
}

std::vector<int> MuVector::e_set() const {
  std::vector<int> e;
  for (int j = 1; j <= size(); ++j)
    if (bits_[j - 1] == 0) e.push_back(j);
  return e;
}

bool is_gl_permissible(const IWElement& w) {
  const int N = 2 * w.n();
  const ExtendedAlcove a = to_extended_alcove(w);
  if (vec_sum(a.row(0)) != w.n()) return false;  // P2
  for (int i = 0; i < N; ++i) {
    const Vec om = omega_row(i, N);
    const Vec& v = a.rows()[i];
    for (int k = 0; k < N; ++k)
      if (v[k] < om[k] || v[k] > om[k] + 1) return false;  // P1
  }
  return true;
}

std::vector<MuVector> mu_vectors(const IWElement& w) {
  require(is_gl_permissible(w), "mu_vectors requires a GL-permissible element");
  const int N = 2 * w.n();
  const ExtendedAlcove a = to_extended_alcove(w);
  std::vector<MuVector> mus;
  mus.reserve(N);
  for (int i = 0; i < N; ++i) mus.emplace_back(vec_sub(a.rows()[i], omega_row(i, N)));
  return mus;
}

namespace {

KInterval classify_k_set(const std::vector<char>& member, int m, int two_n) {
  int count = 0;
  for (char c : member) count += c;
  if (count == 0) return {KInterval::Kind::empty};
  if (count == two_n) return {KInterval::Kind::full};
  int lower = -1;
  int starts = 0;
  for (int k = 0; k < two_n; ++k)
    if (member[k] && !member[(k + two_n - 1) % two_n]) {
      lower = k;
      ++starts;
    }
  internal_check(starts == 1, "K_m is not a cyclic interval");
  const int upper = (lower + count) % two_n;
  internal_check(upper == m % two_n, "K_m upper endpoint is not m");
  return {KInterval::Kind::interval, lower, upper};
}

std::vector<KInterval> all_k_intervals(const std::vector<MuVector>& mus) {
  const int N = mus[0].size();
  std::vector<KInterval> ks;
  ks.reserve(N);
  for (int m = 1; m <= N; ++m) {
    std::vector<char> member(N, 0);
    for (int k = 0; k < N; ++k) member[k] = mus[k](m) == 0;
    ks.push_back(classify_k_set(member, m, N));
  }
  return ks;
}

}  // namespace

KInterval k_interval(const IWElement& w, int m) {
  require(1 <= m && m <= 2 * w.n(), "k_interval index out of range");
  return all_k_intervals(mu_vectors(w))[m - 1];
}

bool is_spin_permissible(const IWElement& w, const Cocharacter& mu) {
  const MuClass cls = mu_label_class(mu);
  require(mu.n() == w.n(), "size mismatch in is_spin_permissible");
  validate_mu_classifier(w.n());
  if (!is_gl_permissible(w)) return false;
  const auto mus = mu_vectors(w);
  for (int i = 0; i <= w.n(); ++i) {
    const MuVector& m = mus[i % (2 * w.n())];
    if (m.totally_isotropic() && m.iso_class() != cls) return false;
  }
  return true;
}

namespace {

// All totally isotropic 0/1 vectors of length 2n (2^n of them): one free
// bit per dual pair.
std::vector<Vec> isotropic_vectors(int n) {
  const int N = 2 * n;
  std::vector<Vec> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    Vec v(N, 0);
    for (int j = 1; j <= n; ++j) {
      const int bit = (mask >> (j - 1)) & 1;
      v[j - 1] = bit;
      v[dual_index(j, N) - 1] = 1 - bit;
    }
    out.push_back(std::move(v));
  }
  return out;
}

IWElement element_from_prefix(const std::vector<Vec>& prefix, int n) {
  const int N = 2 * n;
  std::vector<Vec> mus(N);
  for (int k = 0; k <= n; ++k) mus[k] = prefix[k];
  // Duality determines the second half: mu_{2n-k}(j) = 1 - mu_k(j*).
  for (int k = 1; k <= n - 1; ++k) {
    Vec m(N);
    for (int j = 1; j <= N; ++j) m[j - 1] = 1 - prefix[k][dual_index(j, N) - 1];
    mus[N - k] = std::move(m);
  }
  std::vector<Vec> rows(N);
  for (int i = 0; i < N; ++i) rows[i] = vec_add(mus[i], omega_row(i, N));
  return from_extended_alcove(ExtendedAlcove(std::move(rows)));
}

// Single DFS used for both Perm^sp(mu) and the GL comparison set; when
// `cls` is set, every totally isotropic row mu_0..mu_n must lie in that
// W°-orbit, otherwise only the forced isotropy of mu_0 and mu_n applies.
std::vector<IWElement> enumerate_gl_permissible(int n, const MuClass* cls) {
  const int N = 2 * n;
  std::vector<IWElement> out;
  std::vector<Vec> prefix(n + 1);

  auto emit = [&]() { out.push_back(element_from_prefix(prefix, n)); };

  auto step = [&](auto&& self, int k) -> void {
    // prefix[k] is chosen; extend to row k+1.
    const Vec& cur = prefix[k];
    auto try_next = [&](Vec next) {
      const bool iso = is_totally_isotropic(next);
      if (k + 1 == n && !iso) return;  // mu_n must be totally isotropic
      if (iso && cls != nullptr && classify_isotropic(next) != *cls) return;
      prefix[k + 1] = std::move(next);
      if (k + 1 == n)
        emit();
      else
        self(self, k + 1);
    };
    try_next(cur);  // the step may drop column k+1 itself, repeating the row
    if (cur[k] == 0) {  // position k+1 is 1-based index k+1
      for (int j = 1; j <= N; ++j)
        if (cur[j - 1] == 1) {
          Vec next = cur;
          next[j - 1] = 0;
          next[k] = 1;
          try_next(std::move(next));
        }
    }
  };

  for (const Vec& start : isotropic_vectors(n)) {
    if (cls != nullptr && classify_isotropic(start) != *cls) continue;
    prefix[0] = start;
    step(step, 0);
  }
  std::sort(out.begin(), out.end());
  internal_check(std::adjacent_find(out.begin(), out.end()) == out.end(),
                 "enumeration produced duplicate elements");
  return out;
}

}  // namespace

std::vector<IWElement> enumerate_perm_sp(int n, const Cocharacter& mu) {
  const MuClass cls = mu_label_class(mu);
  require(mu.n() == n, "size mismatch in enumerate_perm_sp");
  validate_mu_classifier(n);
  return enumerate_gl_permissible(n, &cls);
}

std::vector<IWElement> z_set(int n) {
  require(n >= 2, "z_set needs n >= 2");
  return enumerate_gl_permissible(n, nullptr);
}

bool is_permissible(const IWElement& w, const Cocharacter& mu) {
  mu_label_class(mu);  // throws unless mu1/mu2
  require(mu.n() == w.n(), "size mismatch in is_permissible");
  const BaseAlcove& A = BaseAlcove::get(w.n());
  for (const Vec& x2 : A.vertices_doubled()) {
    std::vector<long long> xs(x2.begin(), x2.end());
    const auto y = w.apply_scaled(xs, 2);
    Vec disp(x2.size());
    for (size_t k = 0; k < x2.size(); ++k) disp[k] = static_cast<int>(y[k]) - x2[k];
    if (!conv_contains(mu, HalfVector{std::move(disp)}, w.n())) return false;
  }
  return same_wa_coset(w, IWElement::translation(mu));
}

std::vector<IWElement> perm_set(int n, const Cocharacter& mu, int threads) {
  mu_label_class(mu);
  require(mu.n() == n, "size mismatch in perm_set");
  // Necessary conditions from the origin vertex: w.a_0 - a_0 = t must be an
  // integer point of the hull, hence 0/1 with c(t) = 1, hence isotropic.
  std::vector<IWElement> pool;
  for (const Vec& t : isotropic_vectors(n))
    for (const SignedPermutation& s : w_elements(n))
      pool.emplace_back(Cocharacter(t), s);

  std::vector<char> keep(pool.size(), 0);
  auto work = [&](size_t lo, size_t hi) {
    for (size_t k = lo; k < hi; ++k) keep[k] = is_permissible(pool[k], mu);
  };
  if (threads > 1) {
    const size_t nt = std::min<size_t>(threads, pool.size());
    std::vector<std::thread> ts;
    const size_t chunk = (pool.size() + nt - 1) / nt;
    for (size_t t = 0; t < nt; ++t) {
      const size_t lo = t * chunk;
      const size_t hi = std::min(pool.size(), lo + chunk);
      if (lo < hi) ts.emplace_back(work, lo, hi);
    }
    for (auto& th : ts) th.join();
  } else {
    work(0, pool.size());
  }
  std::vector<IWElement> out;
  for (size_t k = 0; k < pool.size(); ++k)
    if (keep[k]) out.push_back(pool[k]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace alcove
