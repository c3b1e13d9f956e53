#include "alcove/weyl_orbit.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

namespace alcove {

namespace {

std::vector<SignedPermutation> hyperoctahedral(int n, bool even_flips_only) {
  require(n >= 1, "n must be positive");
  const int N = 2 * n;
  std::vector<SignedPermutation> out;
  Vec pi(n);
  std::iota(pi.begin(), pi.end(), 1);
  do {
    for (unsigned flips = 0; flips < (1u << n); ++flips) {
      if (even_flips_only && __builtin_popcount(flips) % 2 != 0) continue;
      Vec im(N);
      for (int i = 1; i <= n; ++i) {
        int target = pi[i - 1];
        if (flips & (1u << (i - 1))) target = dual_index(target, N);
        im[i - 1] = target;
        im[dual_index(i, N) - 1] = dual_index(target, N);
      }
      out.emplace_back(std::move(im));
    }
  } while (std::next_permutation(pi.begin(), pi.end()));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<SignedPermutation> w_elements(int n) { return hyperoctahedral(n, false); }

std::vector<SignedPermutation> w_circ_elements(int n) { return hyperoctahedral(n, true); }

std::vector<Cocharacter> orbit(const Cocharacter& mu, int n) {
  require(mu.n() == n, "orbit: size mismatch");
  static std::mutex cache_mu;
  static std::map<Cocharacter, std::vector<Cocharacter>> cache;
  {
    std::lock_guard<std::mutex> lock(cache_mu);
    auto it = cache.find(mu);
    if (it != cache.end()) return it->second;
  }
  std::set<Cocharacter> seen;
  for (const auto& s : w_circ_elements(n)) seen.insert(act_on_vector(s, mu));
  std::vector<Cocharacter> out(seen.begin(), seen.end());
  std::lock_guard<std::mutex> lock(cache_mu);
  cache.emplace(mu, out);
  return out;
}

bool is_totally_isotropic(const Vec& bits) {
  const int N = static_cast<int>(bits.size());
  for (int j = 1; j <= N; ++j)
    if (bits[j - 1] != 1 - bits[dual_index(j, N) - 1]) return false;
  return true;
}

MuClass classify_isotropic(const Vec& bits) {
  internal_check(is_totally_isotropic(bits), "classify_isotropic: input not totally isotropic");
  const int n = static_cast<int>(bits.size()) / 2;
  int zeros = 0;
  for (int j = 0; j < n; ++j)
    if (bits[j] == 0) ++zeros;
  return zeros % 2 == 0 ? MuClass::mu1 : MuClass::mu2;
}

MuClass mu_label_class(const Cocharacter& mu) {
  const int n = mu.n();
  if (mu == Cocharacter::mu1(n)) return MuClass::mu1;
  if (mu == Cocharacter::mu2(n)) return MuClass::mu2;
  throw std::invalid_argument("mu must be mu1 or mu2");
}

void validate_mu_classifier(int n) {
  static std::mutex mu;
  static std::set<int> validated;
  std::lock_guard<std::mutex> lock(mu);
  if (validated.count(n)) return;
  for (int which = 1; which <= 2; ++which) {
    const Cocharacter base = which == 1 ? Cocharacter::mu1(n) : Cocharacter::mu2(n);
    const MuClass expect = which == 1 ? MuClass::mu1 : MuClass::mu2;
    for (const auto& v : orbit(base, n))
      internal_check(classify_isotropic(v.r()) == expect,
                     "isotropic orbit classifier disagrees with orbit()");
  }
  validated.insert(n);
}

bool conv_contains(const Cocharacter& mu, const HalfVector& x, int n) {
  const MuClass cls = mu_label_class(mu);  // throws unless mu1/mu2
  require(mu.n() == n, "conv_contains: size mismatch");
  if (x.size() != 2 * n) return false;
  // The hull lives inside X_*(T) tensor R, so x must satisfy the similitude
  // constraint; points outside that subspace are never members.
  const int c2 = x.twice[0] + x.twice[2 * n - 1];
  for (int j = 2; j <= n; ++j)
    if (x.twice[j - 1] + x.twice[dual_index(j, 2 * n) - 1] != c2) return false;
  if (c2 != 2) return false;  // c(x) = 1
  for (int v : x.twice)
    if (v < 0 || v > 2) return false;  // 0 <= x <= 1
  // For odd n the facet normals are the orbit of mu itself; for even n they
  // are the tau-translate, i.e. the orbit of the other minuscule cocharacter.
  const Cocharacter other = cls == MuClass::mu1 ? Cocharacter::mu2(n) : Cocharacter::mu1(n);
  const std::vector<Cocharacter> normals = orbit(n % 2 == 1 ? mu : other, n);
  for (const auto& m : normals) {
    long long dot2 = 0;
    for (int j = 1; j <= 2 * n; ++j) dot2 += static_cast<long long>(m(j)) * x.twice[j - 1];
    if (dot2 < 2) return false;  // mu'.x >= 1
  }
  return true;
}

}  // namespace alcove
