#include "alcove/extended_alcove.hpp"

namespace alcove {

Vec omega_row(int i, int two_n) {
  Vec v(two_n, 0);
  for (int j = 0; j < i && j < two_n; ++j) v[j] = -1;
  internal_check(0 <= i && i <= two_n, "omega_row index out of range");
  return v;
}

ExtendedAlcove::ExtendedAlcove(std::vector<Vec> rows) : rows_(std::move(rows)), d_(0) {
  const int N = static_cast<int>(rows_.size());
  require(N >= 4 && N % 2 == 0, "extended alcove needs 2n rows, n >= 2");
  for (const Vec& r : rows_)
    require(static_cast<int>(r.size()) == N, "extended alcove rows must have length 2n");

  // A1 + A2: each successive difference v_{i-1} - v_i (including the wrap
  // to v_0 - (1,...,1)) is nonnegative with entry sum 1.
  for (int i = 1; i <= N; ++i) {
    const Vec hi = rows_[i - 1];
    const Vec lo = row(i);
    int drop = 0;
    for (int j = 0; j < N; ++j) {
      require(hi[j] >= lo[j], "A1 violated: rows not decreasing");
      drop += hi[j] - lo[j];
    }
    require(drop == 1, "A2 violated: row sums must drop by exactly 1");
  }

  // A3: v_i(j) + v_{2n-i}(j*) constant.
  bool have_d = false;
  for (int i = 1; i <= N; ++i) {
    const Vec vi = row(i);
    const Vec vd = row(N - i);
    for (int j = 1; j <= N; ++j) {
      const int s = vi[j - 1] + vd[dual_index(j, N) - 1];
      if (!have_d) {
        d_ = s;
        have_d = true;
      } else {
        require(s == d_, "A3 violated: duality sum not constant");
      }
    }
  }
}

Vec ExtendedAlcove::row(int i) const {
  const int N = static_cast<int>(rows_.size());
  internal_check(0 <= i && i <= N, "row index out of range");
  if (i < N) return rows_[i];
  Vec v = rows_[0];
  for (int& x : v) --x;
  return v;
}

ExtendedAlcove ExtendedAlcove::standard(int n) {
  std::vector<Vec> rows;
  rows.reserve(2 * n);
  for (int i = 0; i < 2 * n; ++i) rows.push_back(omega_row(i, 2 * n));
  return ExtendedAlcove(std::move(rows));
}

ExtendedAlcove to_extended_alcove(const IWElement& w) {
  const int N = 2 * w.n();
  std::vector<Vec> rows;
  rows.reserve(N);
  for (int i = 0; i < N; ++i) rows.push_back(w.apply(omega_row(i, N)));
  return ExtendedAlcove(std::move(rows));
}

IWElement from_extended_alcove(const ExtendedAlcove& a) {
  const int N = 2 * a.n();
  // v_0 = t, and the step from v_{k-1} to v_k drops the unit vector
  // e_{sigma(k)}.
  Vec images(N, 0);
  for (int k = 1; k <= N; ++k) {
    const Vec diff = vec_sub(a.row(k - 1), a.row(k));
    int j = 0;
    for (int p = 1; p <= N; ++p)
      if (diff[p - 1] == 1) j = p;
    internal_check(j != 0, "extended alcove step is not a unit vector");
    images[k - 1] = j;
  }
  IWElement w(Cocharacter(a.row(0)), SignedPermutation(std::move(images)));
  internal_check(to_extended_alcove(w) == a, "from_extended_alcove does not invert");
  return w;
}

}  // namespace alcove
