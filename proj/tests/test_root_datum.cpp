#include <doctest.h>

#include <random>

#include "alcove/weyl_orbit.hpp"
#include "oracles.hpp"

using namespace alcove;

namespace {

SignedPermutation random_sigma(int n, std::mt19937& rng) {
  return oracles::random_element(n, rng).finite_part();
}

std::vector<Vec> all_01_similitude(int n) {
  std::vector<Vec> out;
  out.push_back(Vec(2 * n, 0));
  out.push_back(Vec(2 * n, 1));
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    Vec v(2 * n, 0);
    for (int j = 1; j <= n; ++j) {
      const int bit = (mask >> (j - 1)) & 1;
      v[j - 1] = bit;
      v[dual_index(j, 2 * n) - 1] = 1 - bit;
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

TEST_CASE("signed permutation validation") {
  CHECK_THROWS_AS(SignedPermutation({1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(SignedPermutation({1, 1, 4, 4}), std::invalid_argument);
  // bijective but not h-compatible: sigma(1)=1 forces sigma(4)=4
  CHECK_THROWS_AS(SignedPermutation({1, 2, 4, 3}), std::invalid_argument);
  CHECK_NOTHROW(SignedPermutation({2, 1, 4, 3}));
}

TEST_CASE("compose: identity, inverses, tau involution") {
  std::mt19937 rng(7);
  for (int n = 2; n <= 5; ++n) {
    const auto id = SignedPermutation::identity(n);
    const auto tau = SignedPermutation::transposition_tau(n);
    CHECK(tau.compose(tau) == id);
    for (int trial = 0; trial < 50; ++trial) {
      const auto s = random_sigma(n, rng);
      CHECK(s.compose(id) == s);
      CHECK(id.compose(s) == s);
      CHECK(s.compose(s.inverse()) == id);
      CHECK(s.inverse().compose(s) == id);
    }
  }
  // group axioms: associativity
  for (int n = 2; n <= 5; ++n)
    for (int trial = 0; trial < 30; ++trial) {
      const auto a = random_sigma(n, rng);
      const auto b = random_sigma(n, rng);
      const auto c = random_sigma(n, rng);
      CHECK(a.compose(b).compose(c) == a.compose(b.compose(c)));
    }
  CHECK_THROWS_AS(SignedPermutation::identity(2).compose(SignedPermutation::identity(3)),
                  std::invalid_argument);
}

TEST_CASE("tau one-line notation for n=2") {
  CHECK(SignedPermutation::transposition_tau(2).images() == Vec{1, 3, 2, 4});
}

TEST_CASE("is_in_w_circ") {
  CHECK(is_in_w_circ(SignedPermutation::identity(2)));
  CHECK_FALSE(is_in_w_circ(SignedPermutation::transposition_tau(2)));
  CHECK(is_in_w_circ(SignedPermutation({4, 3, 2, 1})));  // (1,4)(2,3)

  // parity is a homomorphism to {+-1}
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_sigma(3, rng);
    const auto b = random_sigma(3, rng);
    CHECK(a.compose(b).is_even() == (a.is_even() == b.is_even()));
  }
}

TEST_CASE("act_on_vector") {
  std::mt19937 rng(13);
  for (int n = 2; n <= 4; ++n) {
    const auto mu1 = Cocharacter::mu1(n);
    CHECK(act_on_vector(SignedPermutation::identity(n), mu1) == mu1);
    CHECK(act_on_vector(SignedPermutation::transposition_tau(n), mu1) == Cocharacter::mu2(n));
    const Cocharacter ones{Vec(2 * n, 1)};
    for (int trial = 0; trial < 20; ++trial) {
      const auto s = random_sigma(n, rng);
      CHECK(act_on_vector(s, ones) == ones);
      // group action
      const auto t = random_sigma(n, rng);
      CHECK(act_on_vector(s.compose(t), mu1) == act_on_vector(s, act_on_vector(t, mu1)));
    }
  }
}

TEST_CASE("W° enumeration matches brute-force filter of S_2n") {
  for (int n = 2; n <= 4; ++n) {
    CHECK(w_circ_elements(n) == oracles::brute_weyl_group(n, true));
    CHECK(w_elements(n) == oracles::brute_weyl_group(n, false));
  }
}

TEST_CASE("orbit of mu1 at n=2") {
  const auto orb = orbit(Cocharacter::mu1(2), 2);
  REQUIRE(orb.size() == 2);
  CHECK(orb[0].r() == Vec{0, 0, 1, 1});
  CHECK(orb[1].r() == Vec{1, 1, 0, 0});
}

TEST_CASE("orbit sizes and central orbit") {
  for (int n = 2; n <= 4; ++n) {
    CHECK(orbit(Cocharacter::mu1(n), n).size() == (1u << (n - 1)));
    CHECK(orbit(Cocharacter::mu2(n), n).size() == (1u << (n - 1)));
    const Cocharacter ones{Vec(2 * n, 1)};
    CHECK(orbit(ones, n) == std::vector<Cocharacter>{ones});
    // every orbit element is 0/1 with n ones and totally isotropic
    for (int which = 1; which <= 2; ++which) {
      const auto base = which == 1 ? Cocharacter::mu1(n) : Cocharacter::mu2(n);
      for (const auto& v : orbit(base, n)) {
        CHECK(is_totally_isotropic(v.r()));
        CHECK(vec_sum(v.r()) == n);
        for (int x : v.r()) CHECK((x == 0 || x == 1));
      }
    }
  }
}

TEST_CASE("classifier validation against orbits") {
  for (int n = 2; n <= 5; ++n) CHECK_NOTHROW(validate_mu_classifier(n));
}

TEST_CASE("in_coroot_lattice") {
  CHECK(in_coroot_lattice(Cocharacter::zero(2)));
  CHECK(in_coroot_lattice(Cocharacter({1, 1, -1, -1})));
  CHECK_FALSE(in_coroot_lattice(Cocharacter::mu1(2)));
  CHECK_FALSE(in_coroot_lattice(Cocharacter({1, 0, 0, -1})));  // odd first-half sum
}

TEST_CASE("conv_contains basics") {
  const auto mu1 = Cocharacter::mu1(2);
  CHECK(conv_contains(mu1, HalfVector::from_integral(mu1.r()), 2));
  CHECK(conv_contains(mu1, HalfVector{{1, 1, 1, 1}}, 2));  // midpoint of the two vertices
  CHECK_FALSE(conv_contains(mu1, HalfVector::from_integral(Cocharacter::mu2(2).r()), 2));
  CHECK_FALSE(conv_contains(mu1, HalfVector{{2, 1, 1, 0}}, 2));  // not in the similitude space
  CHECK_THROWS_AS(conv_contains(Cocharacter({2, 0, 0, 0, 0, 2}), HalfVector{{0, 0, 0, 0, 0, 0}}, 3),
                  std::invalid_argument);
}

TEST_CASE("hull membership agrees with the rational convex-combination oracle") {
  for (int n = 2; n <= 3; ++n) {
    for (int which = 1; which <= 2; ++which) {
      const auto mu = which == 1 ? Cocharacter::mu1(n) : Cocharacter::mu2(n);
      const auto verts = orbit(mu, n);
      for (const Vec& cand : all_01_similitude(n)) {
        HalfVector x = HalfVector::from_integral(cand);
        CHECK(conv_contains(mu, x, n) == oracles::convex_combination_oracle(verts, x.twice));
      }
      // half-integer interior points: averages of vertex pairs
      for (const auto& a : verts)
        for (const auto& b : verts) {
          const HalfVector mid{vec_add(a.r(), b.r())};
          CHECK(conv_contains(mu, mid, n));
          CHECK(oracles::convex_combination_oracle(verts, mid.twice));
        }
    }
  }
}

TEST_CASE("integer points of the hull are exactly the orbit") {
  for (int n = 2; n <= 4; ++n) {
    for (int which = 1; which <= 2; ++which) {
      const auto mu = which == 1 ? Cocharacter::mu1(n) : Cocharacter::mu2(n);
      const auto orb = orbit(mu, n);
      for (const Vec& cand : all_01_similitude(n)) {
        const bool in_orbit =
            std::binary_search(orb.begin(), orb.end(), Cocharacter(cand));
        CHECK(conv_contains(mu, HalfVector::from_integral(cand), n) == in_orbit);
      }
    }
  }
}
