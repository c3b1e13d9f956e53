#include "oracles.hpp"

#include <algorithm>
#include <numeric>

namespace alcove::oracles {

std::vector<SignedPermutation> brute_weyl_group(int n, bool even_only) {
  const int N = 2 * n;
  Vec im(N);
  std::iota(im.begin(), im.end(), 1);
  std::vector<SignedPermutation> out;
  do {
    bool h_compatible = true;
    for (int i = 1; i <= N && h_compatible; ++i)
      if (im[dual_index(i, N) - 1] != dual_index(im[i - 1], N)) h_compatible = false;
    if (!h_compatible) continue;
    SignedPermutation s(im);
    if (even_only && !s.is_even()) continue;
    out.push_back(std::move(s));
  } while (std::next_permutation(im.begin(), im.end()));
  std::sort(out.begin(), out.end());
  return out;
}

Fraction::Fraction(long long n, long long d) : num(n), den(d) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) {
    den = 1;
    return;
  }
  const long long g = std::gcd(num < 0 ? -num : num, den);
  num /= g;
  den /= g;
}

Fraction Fraction::operator+(const Fraction& o) const {
  return Fraction(num * o.den + o.num * den, den * o.den);
}
Fraction Fraction::operator-(const Fraction& o) const {
  return Fraction(num * o.den - o.num * den, den * o.den);
}
Fraction Fraction::operator*(const Fraction& o) const {
  return Fraction(num * o.num, den * o.den);
}
Fraction Fraction::operator/(const Fraction& o) const {
  return Fraction(num * o.den, den * o.num);
}

bool convex_combination_oracle(const std::vector<Cocharacter>& vertices, const Vec& x_doubled) {
  // Solve V^T lambda = x, 1^T lambda = 1 by Gauss-Jordan over Q, then check
  // lambda >= 0.  The systems here have a unique solution when consistent.
  const size_t cols = vertices.size();
  const size_t dim = x_doubled.size();
  std::vector<std::vector<Fraction>> m(dim + 1, std::vector<Fraction>(cols + 1));
  for (size_t r = 0; r < dim; ++r) {
    for (size_t c = 0; c < cols; ++c) m[r][c] = Fraction(vertices[c](static_cast<int>(r) + 1));
    m[r][cols] = Fraction(x_doubled[r], 2);
  }
  for (size_t c = 0; c < cols; ++c) m[dim][c] = Fraction(1);
  m[dim][cols] = Fraction(1);

  size_t rank = 0;
  std::vector<int> pivot_col;
  for (size_t c = 0; c < cols && rank < m.size(); ++c) {
    size_t p = rank;
    while (p < m.size() && m[p][c].zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[rank], m[p]);
    const Fraction inv = Fraction(1) / m[rank][c];
    for (auto& x : m[rank]) x = x * inv;
    for (size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c].zero()) continue;
      const Fraction f = m[r][c];
      for (size_t k = 0; k <= cols; ++k) m[r][k] = m[r][k] - f * m[rank][k];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++rank;
  }
  for (size_t r = rank; r < m.size(); ++r)
    if (!m[r][cols].zero()) return false;  // inconsistent: x not even affine
  if (rank != cols)
    throw std::logic_error("convex oracle expects affinely independent vertices");
  for (size_t r = 0; r < rank; ++r)
    if (m[r][cols].negative()) return false;
  return true;
}

std::vector<IWElement> subword_closure(const IWElement& top) {
  const BaseAlcove& A = BaseAlcove::get(top.n());
  const long long S = A.scale();
  const auto& p = A.barycenter_scaled();

  // Reduced word for the W_a part by greedy wall descent.
  std::vector<IWElement> letters;
  IWElement u = top;
  long long len = length(u);
  while (len > 0) {
    const auto q = u.apply_scaled(p, S);
    const AffineRoot* crossed = nullptr;
    for (const AffineRoot& wall : A.walls())
      if ((wall.value_scaled(p, S) > 0) != (wall.value_scaled(q, S) > 0)) {
        crossed = &wall;
        break;
      }
    if (crossed == nullptr) throw std::logic_error("subword oracle: no wall descent found");
    letters.push_back(crossed->reflection());
    u = letters.back() * u;
    const long long l2 = length(u);
    if (l2 != len - 1) throw std::logic_error("subword oracle: word is not reduced");
    len = l2;
  }
  // top = letters[0] * ... * letters[k-1] * u with u stabilizing A.
  std::vector<IWElement> out;
  const size_t k = letters.size();
  for (unsigned long long mask = 0; mask < (1ull << k); ++mask) {
    IWElement prod = u;
    for (size_t pos = k; pos-- > 0;)
      if (mask & (1ull << pos)) prod = letters[pos] * prod;
    out.push_back(std::move(prod));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<AffineRoot> all_roots_within(int n, int dmax) {
  const int N = 2 * n;
  std::vector<AffineRoot> out;
  for (int i = 1; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j) {
      if (j == dual_index(i, N) || i + j > N) continue;  // canonical reps only
      for (int d = -dmax; d <= dmax; ++d) out.emplace_back(i, j, d, N);
    }
  return out;
}

IWElement random_element(int n, std::mt19937& rng, int span) {
  std::uniform_int_distribution<int> entry(-span, span);
  Vec t(2 * n);
  const int c = entry(rng);
  for (int j = 1; j <= n; ++j) {
    t[j - 1] = entry(rng);
    t[dual_index(j, 2 * n) - 1] = c - t[j - 1];
  }
  std::vector<int> pi(n);
  std::iota(pi.begin(), pi.end(), 1);
  std::shuffle(pi.begin(), pi.end(), rng);
  std::uniform_int_distribution<int> coin(0, 1);
  Vec im(2 * n);
  for (int i = 1; i <= n; ++i) {
    int target = pi[i - 1];
    if (coin(rng)) target = dual_index(target, 2 * n);
    im[i - 1] = target;
    im[dual_index(i, 2 * n) - 1] = dual_index(target, 2 * n);
  }
  return IWElement(Cocharacter(std::move(t)), SignedPermutation(std::move(im)));
}

}  // namespace alcove::oracles
