#include "alcove/length_bruhat.hpp"

#include <algorithm>
#include <set>
#include <thread>

namespace alcove {

namespace {

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long long ceil_div(long long a, long long b) { return -floor_div(-a, b); }

template <typename Fn>
void for_each_separating(const IWElement& w, Fn&& fn) {
  const BaseAlcove& A = BaseAlcove::get(w.n());
  const long long S = A.scale();
  const auto& p = A.barycenter_scaled();
  const auto q = w.apply_scaled(p, S);
  for (const auto& [i, j] : A.root_pairs()) {
    const long long a = p[i - 1] - p[j - 1];
    const long long b = q[i - 1] - q[j - 1];
    internal_check(a % S != 0 && b % S != 0, "barycenter lies on a hyperplane");
    const long long lo = std::min(a, b);
    const long long hi = std::max(a, b);
    const long long dmin = ceil_div(lo + 1, S);
    const long long dmax = floor_div(hi - 1, S);
    for (long long d = dmin; d <= dmax; ++d)
      fn(AffineRoot(i, j, static_cast<int>(d), A.two_n()));
  }
}

}  // namespace

std::vector<AffineRoot> separating_hyperplanes(const IWElement& w) {
  std::vector<AffineRoot> out;
  for_each_separating(w, [&](const AffineRoot& r) { out.push_back(r); });
  return out;
}

long long length(const IWElement& w) {
  long long count = 0;
  for_each_separating(w, [&](const AffineRoot&) { ++count; });
  return count;
}

std::pair<IWElement, IWElement> omega_component(const IWElement& w) {
  const BaseAlcove& A = BaseAlcove::get(w.n());
  const long long S = A.scale();
  const auto& p = A.barycenter_scaled();

  IWElement u = w;
  long long sep = length(u);
  while (true) {
    const auto q = u.apply_scaled(p, S);
    const AffineRoot* crossed = nullptr;
    for (const AffineRoot& wall : A.walls()) {
      const long long vp = wall.value_scaled(p, S);
      const long long vq = wall.value_scaled(q, S);
      internal_check(vp != 0 && vq != 0, "barycenter lies on a wall");
      if ((vp > 0) != (vq > 0)) {
        crossed = &wall;
        break;
      }
    }
    if (crossed == nullptr) break;
    u = reflect(*crossed, u);
    const long long s = length(u);
    internal_check(s < sep, "alcove walk failed to make progress");
    sep = s;
  }

  // u now stabilizes A; check it fixes the barycenter up to R.(1,...,1).
  const auto q = u.apply_scaled(p, S);
  for (size_t k = 1; k < q.size(); ++k)
    internal_check(q[k] - p[k] == q[0] - p[0], "alcove walk did not reach A");

  const IWElement wa = w * u.inverse();
  internal_check(in_coroot_lattice(wa.translation_part()) && wa.finite_part().is_even(),
                 "W_a factor fell outside Q_vee x| W_circ");
  return {wa, u};
}

IWElement omega_part(const IWElement& w) { return omega_component(w).second; }

bool same_wa_coset(const IWElement& w, const IWElement& w2) {
  require(w.n() == w2.n(), "size mismatch in same_wa_coset");
  return omega_part(w) == omega_part(w2);
}

namespace {

std::vector<IWElement> descend_children(const IWElement& w, long long len_w) {
  std::vector<IWElement> kids;
  for (const AffineRoot& alpha : separating_hyperplanes(w)) {
    IWElement child = reflect(alpha, w);
    internal_check(length(child) < len_w, "separating reflection did not shorten");
    kids.push_back(std::move(child));
  }
  return kids;
}

}  // namespace

std::vector<IWElement> lower_closure(const std::vector<IWElement>& tops, int threads) {
  std::set<IWElement> seen(tops.begin(), tops.end());
  std::vector<IWElement> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<std::vector<IWElement>> produced(frontier.size());
    auto work = [&](size_t lo, size_t hi) {
      for (size_t k = lo; k < hi; ++k)
        produced[k] = descend_children(frontier[k], length(frontier[k]));
    };
    if (threads > 1 && frontier.size() > 1) {
      const size_t nt = std::min<size_t>(threads, frontier.size());
      std::vector<std::thread> pool;
      const size_t chunk = (frontier.size() + nt - 1) / nt;
      for (size_t t = 0; t < nt; ++t) {
        const size_t lo = t * chunk;
        const size_t hi = std::min(frontier.size(), lo + chunk);
        if (lo < hi) pool.emplace_back(work, lo, hi);
      }
      for (auto& th : pool) th.join();
    } else {
      work(0, frontier.size());
    }
    std::vector<IWElement> next;
    for (auto& kids : produced)
      for (auto& kid : kids)
        if (seen.insert(kid).second) next.push_back(std::move(kid));
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

bool bruhat_leq(const IWElement& w, const IWElement& w2) {
  require(w.n() == w2.n(), "size mismatch in bruhat_leq");
  if (w == w2) return true;
  if (length(w) >= length(w2)) return false;
  const auto closure = lower_closure({w2});
  return std::binary_search(closure.begin(), closure.end(), w);
}

const std::vector<IWElement>& ClosureCache::closure_of(const IWElement& top) {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = memo_.find(top);
  if (it == memo_.end()) it = memo_.emplace(top, lower_closure({top})).first;
  return it->second;
}

bool ClosureCache::leq(const IWElement& lo, const IWElement& hi) {
  if (lo == hi) return true;
  const auto& cl = closure_of(hi);
  return std::binary_search(cl.begin(), cl.end(), lo);
}

}  // namespace alcove
