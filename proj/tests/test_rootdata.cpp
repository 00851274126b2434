#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "test_util.hpp"

using namespace eix;
using eixtest::ctx;
using eixtest::iv;
using eixtest::rv;

TEST_CASE("root counts and dimensions") {
  const RootDatum& d = ctx().datum;
  CHECK_EQ(d.positive_g.size(), 120);
  CHECK_EQ(d.positive_k.size(), 64);
  CHECK_EQ(d.noncompact_pos.size(), 56);
  CHECK_EQ(2 * d.positive_k.size() + kRank, 136);  // dim k
  CHECK_EQ(2 * d.noncompact_pos.size(), 112);      // dim p

  // the full compact subsystem has 128 roots
  int k_roots = 0;
  for (const Vec8& r : d.positive_g) {
    if (d.is_root_k(r)) ++k_roots;
    Vec8 neg;
    for (int i = 0; i < kRank; ++i) neg[i] = -r[i];
    if (d.is_root_k(neg)) ++k_roots;
  }
  CHECK_EQ(k_roots, 128);
}

TEST_CASE("distinguished weights in omega coordinates") {
  const RootDatum& d = ctx().datum;
  const Vec8 beta_om = d.convert(Weight(d.beta, Basis::Euclidean), Basis::Omega).coords;
  CHECK(vec_eq(beta_om, vec_from_i64(iv({0, 0, 0, 0, 0, 0, 1, 1}))));
  const Vec8 rc_om = d.convert(Weight(d.rho_c, Basis::Euclidean), Basis::Omega).coords;
  CHECK(vec_eq(rc_om, vec_from_i64(iv({1, 1, 1, 1, 1, 1, 1, 1}))));

  // gamma_8 is the highest root; alpha_8 is the unique noncompact simple root
  for (const Vec8& r : d.positive_g) CHECK(dot(d.simple_k[7], r) >= 0);
  for (int i = 0; i < 7; ++i) CHECK(d.is_root_k(d.simple_g[i]));
  CHECK_FALSE(d.is_root_k(d.simple_g[7]));
}

TEST_CASE("invariant form normalization") {
  const RootDatum& d = ctx().datum;
  for (const Vec8& r : d.positive_g) CHECK_EQ(dot(r, r), Rat(2));
  CHECK_EQ(d.norm_sq(Weight(d.rho, Basis::Euclidean)), Rat(620));
  CHECK_EQ(d.inner(Weight(d.simple_g[0], Basis::Euclidean),
                   Weight(d.simple_g[0], Basis::Euclidean)),
           Rat(2));
}

TEST_CASE("|rho_c|^2 = 200 against the strange-formula oracle") {
  const RootDatum& d = ctx().datum;
  const Rat direct = d.norm_sq(Weight(d.rho_c, Basis::Euclidean));

  // dual Coxeter number times dimension over 12, per simple factor of k
  const Rat oracle = Rat(18 * 133, 12) + Rat(2 * 3, 12);
  CHECK_EQ(oracle, Rat(200));
  CHECK_EQ(direct, oracle);

  // and the Gram-matrix summation route
  Rat gram_sum(0);
  for (int i = 0; i < kRank; ++i)
    for (int j = 0; j < kRank; ++j) gram_sum += d.gram_omega[i][j];
  CHECK_EQ(direct, gram_sum);
}

TEST_CASE("Gram matrices equal inverse Cartan matrices") {
  const RootDatum& d = ctx().datum;
  Mat8 cg, ck;
  for (int i = 0; i < kRank; ++i)
    for (int j = 0; j < kRank; ++j) {
      cg[i][j] = Rat(static_cast<long>(d.cartan_g[i][j]));
      ck[i][j] = Rat(static_cast<long>(d.cartan_k[i][j]));
    }
  CHECK(mat_eq(mat_inverse(cg), d.gram_zeta));
  CHECK(mat_eq(mat_inverse(ck), d.gram_omega));
}

TEST_CASE("coordinate conversions") {
  const RootDatum& d = ctx().datum;

  SUBCASE("zeta unit vector") {
    const Weight z(vec_from_i64(iv({1, 0, 0, 0, 0, 0, 0, 0})), Basis::Zeta);
    const Vec8 om = d.convert(z, Basis::Omega).coords;
    CHECK(vec_eq(om, vec_from_i64(iv({1, 0, 0, 0, 0, 0, 0, 2}))));
  }
  SUBCASE("doubled last coordinate") {
    const Weight z(vec_from_i64(iv({0, 0, 0, 0, 0, 0, 0, 4})), Basis::Zeta);
    const Vec8 om = d.convert(z, Basis::Omega).coords;
    CHECK(vec_eq(om, vec_from_i64(iv({0, 0, 0, 0, 0, 0, 0, 8}))));
  }
  SUBCASE("round trips are exact") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> num(-30, 30), den(1, 4);
    const Basis bases[4] = {Basis::Euclidean, Basis::SimpleG, Basis::Zeta, Basis::Omega};
    for (int t = 0; t < 50; ++t) {
      Vec8 v;
      for (int i = 0; i < kRank; ++i) v[i] = Rat(num(rng), den(rng));
      const Basis b0 = bases[t % 4];
      Weight w(v, b0);
      Weight x = w;
      for (const Basis b : bases) x = d.convert(x, b);
      x = d.convert(x, b0);
      CHECK(vec_eq(x.coords, v));
    }
  }
  SUBCASE("pairings agree across bases") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 3);
    for (int t = 0; t < 30; ++t) {
      Vec8 a, b;
      for (int i = 0; i < kRank; ++i) {
        a[i] = Rat(num(rng), den(rng));
        b[i] = Rat(num(rng), den(rng));
      }
      const Weight wa(a, Basis::Zeta), wb(b, Basis::Zeta);
      // Gram-matrix pairing in zeta coordinates
      Rat gram(0);
      for (int i = 0; i < kRank; ++i)
        for (int j = 0; j < kRank; ++j) gram += a[i] * b[j] * d.gram_zeta[i][j];
      CHECK_EQ(d.inner(wa, wb), gram);
    }
  }
}

TEST_CASE("K-type parity condition") {
  CHECK(RootDatum::ktype_parity(iv({0, 0, 0, 0, 0, 0, 0, 8})));
  CHECK(RootDatum::ktype_parity(iv({0, 0, 0, 0, 0, 0, 1, 9})));
  CHECK_FALSE(RootDatum::ktype_parity(iv({0, 1, 0, 0, 0, 0, 0, 0})));
  CHECK(RootDatum::ktype_parity(iv({1, 0, 0, 0, 0, 0, 0, 0})));
}

TEST_CASE("pairing against twice rho-check") {
  const RootDatum& d = ctx().datum;
  CHECK_EQ(d.twice_rho_check_pairing(Weight(rv({1, 1, 1, 0, 1, 1, 1, 1}), Basis::Zeta)),
           Rat(970));
  CHECK_EQ(d.twice_rho_check_pairing(Weight(rv({1, 1, 1, 0, 1, 0, 1, 1}), Basis::Zeta)),
           Rat(802));

  // 2<rho, rho-check> = 2|rho|^2 under the simply-laced identification;
  // independent route: twice the entry sum of the inverse g Cartan matrix.
  Rat inv_sum(0);
  for (int i = 0; i < kRank; ++i)
    for (int j = 0; j < kRank; ++j) inv_sum += d.gram_zeta[i][j];
  CHECK_EQ(2 * inv_sum, Rat(1240));
  CHECK_EQ(d.twice_rho_check_pairing(Weight(d.rho, Basis::Euclidean)), Rat(1240));
}
