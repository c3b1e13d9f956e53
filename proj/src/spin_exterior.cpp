#include "alcove/spin_exterior.hpp"

#include <algorithm>

namespace alcove {

IndexSet::IndexSet(uint32_t mask, int two_n) : mask_(mask), two_n_(two_n) {
  require(two_n >= 2 && two_n % 2 == 0 && two_n <= 30, "bad ambient size");
  require((mask & ~((1u << two_n) - 1)) == 0, "mask has bits outside {1,...,2n}");
  require(__builtin_popcount(mask) == two_n / 2, "index set must have size n");
}

IndexSet IndexSet::from_members(const std::vector<int>& members, int two_n) {
  uint32_t m = 0;
  for (int e : members) {
    require(1 <= e && e <= two_n, "member out of range");
    m |= 1u << (e - 1);
  }
  return IndexSet(m, two_n);
}

std::vector<int> IndexSet::members() const {
  std::vector<int> out;
  for (int e = 1; e <= two_n_; ++e)
    if (contains(e)) out.push_back(e);
  return out;
}

IndexSet IndexSet::star() const {
  uint32_t m = 0;
  for (int e = 1; e <= two_n_; ++e)
    if (contains(e)) m |= 1u << (dual_index(e, two_n_) - 1);
  return IndexSet(m, two_n_);
}

IndexSet IndexSet::perp() const {
  const uint32_t all = (1u << two_n_) - 1;
  return IndexSet(all & ~star().mask(), two_n_);
}

int sigma_sign(const IndexSet& E) {
  const int N = E.two_n();
  const int n = N / 2;
  std::vector<int> star = E.star().members();    // increasing
  std::vector<int> perp = E.perp().members();    // increasing
  Vec images(N);
  for (int k = 0; k < n; ++k) images[k] = star[n - 1 - k];  // E* decreasing
  for (int k = 0; k < n; ++k) images[n + k] = perp[k];      // E^perp increasing
  int inversions = 0;
  for (int a = 0; a < N; ++a)
    for (int b = a + 1; b < N; ++b)
      if (images[a] > images[b]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

void SpinVector::add(const IndexSet& E, long long c) {
  require(E.two_n() == two_n_, "size mismatch in SpinVector::add");
  auto it = coeff_.find(E.mask());
  if (it == coeff_.end()) {
    if (c != 0) coeff_.emplace(E.mask(), c);
    return;
  }
  it->second += c;
  if (it->second == 0) coeff_.erase(it);
}

long long SpinVector::coefficient(const IndexSet& E) const {
  auto it = coeff_.find(E.mask());
  return it == coeff_.end() ? 0 : it->second;
}

SpinVector apply_a(const SpinVector& v) {
  SpinVector out(v.two_n());
  for (const auto& [mask, c] : v.coefficients()) {
    const IndexSet E(mask, v.two_n());
    out.add(E.perp(), c * sigma_sign(E));
  }
  return out;
}

std::vector<SpinVector> eigenbasis(int n, int sign) {
  require(sign == 1 || sign == -1, "sign must be +-1");
  const int N = 2 * n;
  std::vector<SpinVector> out;
  for (uint32_t mask = 0; mask < (1u << N); ++mask) {
    if (__builtin_popcount(mask) != n) continue;
    const IndexSet E(mask, N);
    const IndexSet P = E.perp();
    if (E.mask() == P.mask()) {
      if (sigma_sign(E) == sign) {
        SpinVector v(N);
        v.add(E, 1);
        out.push_back(std::move(v));
      }
    } else if (E.mask() < P.mask()) {  // each unordered pair once
      SpinVector v(N);
      v.add(E, 1);
      v.add(P, sign * sigma_sign(E));
      out.push_back(std::move(v));
    }
  }
  return out;
}

int spin_rank(const std::vector<SpinVector>& vectors) {
  if (vectors.empty()) return 0;
  // Dense integer row reduction over the union of supports.
  std::vector<uint32_t> cols;
  for (const auto& v : vectors)
    for (const auto& [mask, c] : v.coefficients()) cols.push_back(mask);
  std::sort(cols.begin(), cols.end());
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  std::vector<std::vector<long long>> m;
  for (const auto& v : vectors) {
    std::vector<long long> row(cols.size(), 0);
    for (const auto& [mask, c] : v.coefficients()) {
      const auto pos = std::lower_bound(cols.begin(), cols.end(), mask) - cols.begin();
      row[pos] = c;
    }
    m.push_back(std::move(row));
  }
  int rank = 0;
  const int rows = static_cast<int>(m.size());
  for (size_t c = 0; c < cols.size() && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (int r = rank + 1; r < rows; ++r) {
      if (m[r][c] == 0) continue;
      const long long a = m[rank][c];
      const long long b = m[r][c];
      for (size_t k = c; k < cols.size(); ++k) m[r][k] = m[r][k] * a - m[rank][k] * b;
    }
    ++rank;
  }
  return rank;
}

TFixedPoint::TFixedPoint(std::vector<IndexSet> chain) : chain_(std::move(chain)) {
  require(!chain_.empty(), "empty chain");
  const int N = chain_.front().two_n();
  require(static_cast<int>(chain_.size()) == N + 1, "chain must have 2n+1 entries");
  for (const IndexSet& E : chain_) require(E.two_n() == N, "mixed ambient sizes");
  require(chain_.front() == chain_.back(), "chain must satisfy E_0 = E_2n");
  for (int k = 0; k < N; ++k) {
    // The structure map Lambda_k -> Lambda_{k+1} multiplies slot k+1 by pi,
    // so F_k must map into F_{k+1}.
    const uint32_t image = chain_[k].mask() & ~(1u << k);
    require((image & ~chain_[k + 1].mask()) == 0, "chain violates the structure maps");
  }
  for (int k = 0; k <= N; ++k)
    require(chain_[N - k] == chain_[k].perp(), "chain violates the duality pairing");
}

TFixedPoint TFixedPoint::from_element(const IWElement& w) {
  const auto mus = mu_vectors(w);  // rejects non-GL-permissible w
  const int N = 2 * w.n();
  std::vector<IndexSet> chain;
  chain.reserve(N + 1);
  for (int k = 0; k <= N; ++k)
    chain.push_back(IndexSet::from_members(mus[k % N].e_set(), N));
  return TFixedPoint(std::move(chain));
}

bool tfixed_spin_direct(const TFixedPoint& p) {
  const int N = p.two_n();
  bool plus_ok = true;
  bool minus_ok = true;
  for (int i = 0; i < N; ++i) {
    const IndexSet& E = p.chain()[i];
    const IndexSet P = E.perp();
    if (E == P) {
      // e^i_E is itself an eigenvector of a with eigenvalue sgn(sigma_E);
      // the line lands in exactly that eigenpart.
      if (sigma_sign(E) == 1)
        minus_ok = false;
      else
        plus_ok = false;
    } else {
      // An eigenvector pi^{-d_i}(e_E + eps sgn(sigma_E) e_{E^perp}) lies in
      // wedge^n Lambda_i and reduces to e^i_E mod pi exactly when
      // d_i^perp > d_i, for either sign; otherwise no eigenvector reduces
      // onto the line.
      int d = 0, dp = 0;
      for (int e = 1; e <= i; ++e) {
        if (E.contains(e)) ++d;
        if (P.contains(e)) ++dp;
      }
      if (dp <= d) {
        plus_ok = false;
        minus_ok = false;
      }
    }
    if (!plus_ok && !minus_ok) return false;
  }
  return plus_ok || minus_ok;
}

bool tfixed_spin_combinatorial(const TFixedPoint& p) {
  const int N = p.two_n();
  const int n = N / 2;
  bool have = false;
  MuClass cls = MuClass::mu1;
  for (int i = 0; i <= n; ++i) {
    const IndexSet& E = p.chain()[i];
    if (!E.totally_isotropic()) continue;
    Vec bits(N, 1);
    for (int e : E.members()) bits[e - 1] = 0;
    const MuClass c = classify_isotropic(bits);
    if (!have) {
      cls = c;
      have = true;
    } else if (c != cls) {
      return false;
    }
  }
  return true;
}

}  // namespace alcove
