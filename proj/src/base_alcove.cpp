#include "alcove/base_alcove.hpp"

#include <map>
#include <mutex>
#include <numeric>

namespace alcove {

namespace {

// Rank over Q of an integer matrix, by exact row reduction.
int integer_rank(std::vector<std::vector<long long>> m) {
  int rank = 0;
  const int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  const int cols = static_cast<int>(m[0].size());
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const long long a = m[rank][c];
      const long long b = m[r][c];
      const long long g = std::gcd(a, b);
      for (int k = 0; k < cols; ++k) m[r][k] = m[r][k] * (a / g) - m[rank][k] * (b / g);
    }
    ++rank;
  }
  return rank;
}

}  // namespace

BaseAlcove::BaseAlcove(int n) : n_(n) {
  require(n >= 2, "base alcove needs n >= 2");
  const int N = 2 * n;

  vertices2_.push_back(Vec(N, 0));  // a_0
  {
    Vec v(N, 0);  // a_0'
    v[0] = -2;
    v[N - 1] = 2;
    vertices2_.push_back(std::move(v));
  }
  for (int i = 2; i <= n - 2; ++i) {  // a_i (empty range for n = 2, 3)
    Vec v(N, 0);
    for (int k = 0; k < i; ++k) v[k] = -1;
    for (int k = N - i; k < N; ++k) v[k] = 1;
    vertices2_.push_back(std::move(v));
  }
  {
    Vec v(N, 0);  // a_n
    for (int k = 0; k < n; ++k) v[k] = -1;
    for (int k = n; k < N; ++k) v[k] = 1;
    vertices2_.push_back(std::move(v));
  }
  {
    Vec v(N, 0);  // a_n'
    for (int k = 0; k < n - 1; ++k) v[k] = -1;
    v[n - 1] = 1;
    v[n] = -1;
    for (int k = n + 1; k < N; ++k) v[k] = 1;
    vertices2_.push_back(std::move(v));
  }

  const long long V = static_cast<long long>(vertices2_.size());
  scale_ = 2 * V;
  barycenter_.assign(N, 0);
  for (const Vec& v : vertices2_)
    for (int k = 0; k < N; ++k) barycenter_[k] += v[k];  // sum of doubled = 2V * barycenter

  for (int i = 1; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j)
      if (i + j < N + 1) pairs_.emplace_back(i, j);
  internal_check(static_cast<int>(pairs_.size()) == n * (n - 1),
                 "unexpected number of root-function families");

  // A hyperplane x_i - x_j = d is a wall when every vertex lies on it or on
  // one side of it, and the vertices on it span a facet (affine dimension
  // n-1 in the apartment).  Vertex coordinates lie in [-1, 1], so |d| <= 2
  // covers all candidates.
  for (const auto& [i, j] : pairs_) {
    for (int d = -2; d <= 2; ++d) {
      int pos = 0, neg = 0;
      std::vector<int> on;
      for (int t = 0; t < static_cast<int>(vertices2_.size()); ++t) {
        const int val = vertices2_[t][i - 1] - vertices2_[t][j - 1] - 2 * d;
        if (val > 0)
          ++pos;
        else if (val < 0)
          ++neg;
        else
          on.push_back(t);
      }
      if (pos > 0 && neg > 0) continue;  // not supporting
      if (on.size() < 2 || on.size() == vertices2_.size()) continue;
      std::vector<std::vector<long long>> rows;
      for (size_t t = 1; t < on.size(); ++t) {
        std::vector<long long> r(N);
        for (int k = 0; k < N; ++k)
          r[k] = vertices2_[on[t]][k] - vertices2_[on[0]][k];
        rows.push_back(std::move(r));
      }
      rows.push_back(std::vector<long long>(N, 1));
      if (integer_rank(std::move(rows)) == n) walls_.emplace_back(i, j, d, N);
    }
  }
  const int expected_walls = n == 2 ? 4 : n + 1;
  internal_check(static_cast<int>(walls_.size()) == expected_walls,
                 "derived wall count does not match the affine rank");
}

const BaseAlcove& BaseAlcove::get(int n) {
  static std::mutex mu;
  static std::map<int, BaseAlcove> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, BaseAlcove(n)).first;
  return it->second;
}

}  // namespace alcove
