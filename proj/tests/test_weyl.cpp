#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "test_util.hpp"

using namespace eix;
using eixtest::ctx;
using eixtest::iv;
using eixtest::rv;

TEST_CASE("reflection action") {
  const RootDatum& d = ctx().datum;
  WeylElement id;
  CHECK(apply(d, id, Weight(d.rho, Basis::Euclidean)) == Weight(d.rho, Basis::Euclidean));

  const WeylElement s8 = simple_reflection(d, ReflFlavor::G, 7);
  const Weight beta(d.beta, Basis::Euclidean);
  const Weight image = apply(d, s8, beta);
  const Rat pairing = d.inner(beta, Weight(d.simple_g[7], Basis::Euclidean));
  const Vec8 expect = vec_sub(d.beta, vec_scale(pairing, d.simple_g[7]));
  CHECK(vec_eq(image.coords, expect));
}

TEST_CASE("dominantization") {
  const RootDatum& d = ctx().datum;

  SUBCASE("dominant input returns the identity") {
    const DomResult r = dominantize_k(d, Weight(d.rho_c, Basis::Euclidean));
    CHECK(r.w.is_identity());
    CHECK(vec_eq(r.dom.coords, d.rho_c));
  }
  SUBCASE("minus rho_c goes to rho_c through w0 = -1") {
    const DomResult r = dominantize_k(d, Weight(vec_scale(-1, d.rho_c), Basis::Euclidean));
    CHECK(vec_eq(d.euclid(r.dom), d.rho_c));
    Mat8 minus = mat_identity();
    for (int i = 0; i < kRank; ++i) minus[i][i] = -1;
    CHECK(mat_eq(r.w.matrix, minus));
  }
  SUBCASE("idempotence on random points") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> num(-25, 25), den(1, 3);
    for (int t = 0; t < 40; ++t) {
      Vec8 v;
      for (int i = 0; i < kRank; ++i) v[i] = Rat(num(rng), den(rng));
      const Weight x(v, Basis::Zeta);
      const DomResult rk = dominantize_k(d, x);
      CHECK(dominantize_k(d, rk.dom).dom == rk.dom);
      const DomResult rg = dominantize_g(d, x);
      CHECK(dominantize_g(d, rg.dom).dom == rg.dom);
      CHECK(vec_eq(d.euclid(apply(d, rg.w, x)), d.euclid(rg.dom)));
    }
  }
  SUBCASE("rho is g-dominant") {
    const DomResult r = dominantize_g(d, Weight(d.rho, Basis::Euclidean));
    CHECK(r.w.is_identity());
  }
}

TEST_CASE("chamber location of a contributed weight") {
  // gamma + rho_c for gamma = [0,0,0,0,0,0,5,5] is W(g)-conjugate to the
  // dominant character [1,1,1,0,1,0,1,1].
  const RootDatum& d = ctx().datum;
  const Weight gamma(vec_from_i64(iv({0, 0, 0, 0, 0, 0, 5, 5})), Basis::Omega);
  const Weight gpc(vec_add(d.euclid(gamma), d.rho_c), Basis::Euclidean);
  const Weight lam(rv({1, 1, 1, 0, 1, 0, 1, 1}), Basis::Zeta);
  const DomResult r = dominantize_g(d, gpc);
  CHECK(vec_eq(d.euclid(r.dom), d.euclid(lam)));
}

TEST_CASE("conjugacy under the full Weyl group") {
  const RootDatum& d = ctx().datum;
  const Weight rho(d.rho, Basis::Euclidean);
  CHECK(conjugate_under_Wg(d, rho, rho));
  CHECK_FALSE(conjugate_under_Wg(d, rho, Weight(vec_scale(2, d.rho), Basis::Euclidean)));

  // half-integral contributed weight from the eight-spin-LKT example
  Vec8 gamma;
  for (int i = 0; i < 7; ++i) gamma[i] = Rat(1, 2);
  gamma[7] = Rat(5, 2);
  const Weight gpc(vec_add(d.euclid(Weight(gamma, Basis::Omega)), d.rho_c), Basis::Euclidean);
  CHECK(conjugate_under_Wg(d, gpc, Weight(rv({1, 1, 1, 0, 1, 0, 1, 1}), Basis::Zeta)));
}

TEST_CASE("coset representatives") {
  const Context& c = ctx();
  const RootDatum& d = c.datum;
  REQUIRE_EQ(c.w1.size(), 120);
  CHECK(c.w1[0].w.is_identity());

  SUBCASE("rho_n^(0) = rho - rho_c") {
    CHECK(vec_eq(c.w1[0].rho_n.coords, vec_sub(d.rho, d.rho_c)));
  }
  SUBCASE("stored rho^(j) is the action on rho^(0)") {
    for (const CosetRep& r : c.w1)
      CHECK(vec_eq(d.euclid(apply(d, r.w, Weight(d.rho, Basis::Euclidean))), r.rho.coords));
  }
  SUBCASE("symbolic coordinate rows on the probe vector") {
    const IVec8 probe = iv({1, 2, 3, 4, 5, 6, 7, 8});
    CHECK_EQ(imat_vec(c.omega_rows[0], probe), iv({1, 2, 3, 4, 5, 6, 7, 130}));
    bool found_last = false, found_second = false;
    for (size_t j = 0; j < c.w1.size(); ++j) {
      const IVec8 row = imat_vec(c.omega_rows[j], probe);
      if (row == iv({6, 2, 5, 4, 3, 1, 57, 8})) found_last = true;
      if (row == iv({1, 2, 3, 4, 5, 6, 15, 122})) found_second = true;
    }
    CHECK(found_last);
    CHECK(found_second);
  }
  SUBCASE("Kostant factorization is unique on random elements") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> simple(0, 7), len(0, 30);
    const Weight rho0(d.rho, Basis::Euclidean);
    for (int t = 0; t < 1000; ++t) {
      Vec8 x = d.rho;
      const int L = len(rng);
      for (int s = 0; s < L; ++s) {
        const Vec8& a = d.simple_g[simple(rng)];
        x = vec_sub(x, vec_scale(dot(x, a), a));
      }
      // w rho^(0) dominantizes onto exactly one rho^(j)
      const Weight dom = dominantize_k(d, Weight(x, Basis::Euclidean)).dom;
      int hits = 0;
      for (const CosetRep& r : c.w1)
        if (vec_eq(d.euclid(dom), r.rho.coords)) ++hits;
      CHECK_EQ(hits, 1);
    }
  }
}
