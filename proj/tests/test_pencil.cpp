#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "test_util.hpp"

using namespace eix;
using eixtest::ctx;
using eixtest::hull;
using eixtest::iv;

namespace {

IVec8 nbeta(std::int64_t n) {
  IVec8 v{};
  v[6] = n;
  v[7] = n;
  return v;
}

}  // namespace

TEST_CASE("hull structure") {
  const USmallHull& h = hull();
  REQUIRE_EQ(h.vertices.size(), 120);

  SUBCASE("origin and all vertices are members") {
    CHECK(usmall(ctx(), h, IVec8{}));
    for (const Weight& v : h.vertices) {
      IVec8 vi{};
      for (int i = 0; i < kRank; ++i) vi[i] = to_i64(mpz_class(v.coords[i].get_num()));
      CHECK(usmall(ctx(), h, vi));
    }
  }
  SUBCASE("coordinate bounds dominate the vertices") {
    for (const Weight& v : h.vertices)
      for (int i = 0; i < kRank; ++i)
        CHECK(v.coords[i] <= Rat(static_cast<long>(h.coord_bounds[i])));
  }
}

TEST_CASE("membership boundary on the trivial pencil") {
  CHECK(usmall(ctx(), hull(), nbeta(15)));
  CHECK_FALSE(usmall(ctx(), hull(), nbeta(16)));
}

TEST_CASE("pencil report for the trivial K-type") {
  const PencilReport r = mp(ctx(), hull(), KType(IVec8{}), 2);
  const long want[18] = {620, 564, 512, 464, 420, 380, 348, 320, 296,
                         276, 260, 300, 344, 392, 444, 500, 560, 624};
  REQUIRE_EQ(r.entries.size(), 18);
  for (int n = 0; n < 18; ++n) {
    CHECK_EQ(r.entries[n].spin_sq, Rat(want[n]));
    CHECK_EQ(r.entries[n].n, n);
    CHECK_EQ(r.entries[n].u_small, n <= 15);
  }
  CHECK_EQ(r.mp_sq, Rat(260));
  CHECK_EQ(r.argmin_n, std::vector<std::int64_t>{10});
  CHECK(r.unimodal);
}

TEST_CASE("u-large pencils take the base spin norm") {
  const KType mu(nbeta(16));
  const PencilReport r = mp(ctx(), hull(), mu, 2);
  CHECK_EQ(r.mp_sq, spin_norm(ctx(), mu).spin_norm_sq);
  CHECK_EQ(r.argmin_n, std::vector<std::int64_t>{0});
  CHECK_FALSE(r.entries[0].u_small);
}

TEST_CASE("minimal representation pencil") {
  const PencilReport r = mp(ctx(), hull(), KType(iv({0, 0, 0, 0, 0, 0, 0, 8})), 2);
  CHECK_EQ(r.mp_sq, Rat(380));
  CHECK(r.unimodal);
}

TEST_CASE("kernel enumeration matches the reference on sub-boxes") {
  const Context& c = ctx();
  const USmallHull& h = hull();

  SUBCASE("origin box") {
    IVec8 lo{}, hi;
    for (int i = 0; i < kRank; ++i) hi[i] = 2;
    hi[7] = 20;
    std::vector<IVec8> ref, fast;
    const std::uint64_t nr =
        enumerate_usmall_reference(c, h, lo, hi, [&](const IVec8& v) { ref.push_back(v); });
    const std::uint64_t nf =
        enumerate_usmall_box(c, h, lo, hi, [&](const IVec8& v) { fast.push_back(v); }, 1);
    CHECK_EQ(nr, nf);
    CHECK(ref == fast);
    CHECK(nr > 0);
  }
  SUBCASE("interior box away from the origin") {
    IVec8 lo = iv({0, 0, 0, 1, 0, 0, 2, 0});
    IVec8 hi = iv({2, 1, 1, 2, 1, 1, 5, 26});
    std::vector<IVec8> ref, fast;
    enumerate_usmall_reference(c, h, lo, hi, [&](const IVec8& v) { ref.push_back(v); });
    enumerate_usmall_box(c, h, lo, hi, [&](const IVec8& v) { fast.push_back(v); }, 1);
    CHECK(ref == fast);
  }
  SUBCASE("lexicographic emission") {
    IVec8 lo{}, hi;
    for (int i = 0; i < kRank; ++i) hi[i] = 2;
    std::vector<IVec8> got;
    enumerate_usmall_box(c, h, lo, hi, [&](const IVec8& v) { got.push_back(v); }, 1);
    CHECK(std::is_sorted(got.begin(), got.end()));
  }
}

TEST_CASE("prefilter rejections are LP-infeasible") {
  const Context& c = ctx();
  const USmallHull& h = hull();
  std::mt19937_64 rng(41);
  int rejected = 0;
  for (int t = 0; t < 400 && rejected < 50; ++t) {
    IVec8 v{};
    for (int i = 0; i < kRank; ++i) {
      std::uniform_int_distribution<std::int64_t> dist(0, h.coord_bounds[i] + 10);
      v[i] = dist(rng);
    }
    bool hit = false;
    for (const HullFunctional& f : h.base_functionals)
      if (idot(f.omega_row, v) > f.bound) hit = true;
    if (!hit) continue;
    ++rejected;
    CHECK_FALSE(usmall(c, h, v));
  }
  CHECK(rejected >= 50);
}

TEST_CASE("membership certificates verify exactly") {
  const Context& c = ctx();
  const USmallHull& h = hull();
  std::mt19937_64 rng(43);
  int inside = 0, outside = 0;
  for (int t = 0; t < 400 && (inside < 50 || outside < 50); ++t) {
    IVec8 v{};
    const bool small = inside < 50;
    for (int i = 0; i < kRank; ++i) {
      std::uniform_int_distribution<std::int64_t> dist(
          0, small ? std::max<std::int64_t>(h.coord_bounds[i] / 4, 1)
                   : h.coord_bounds[i] + h.coord_bounds[i] / 2);
      v[i] = dist(rng);
    }
    const UsmallCertificate cert = usmall_certified(c, h, v);
    const IVec8 g2 = imat_vec(h.gamma2_from_omega, v);
    if (cert.inside) {
      if (inside >= 50) continue;
      ++inside;
      Rat sum(0);
      Vec8 comb = vec_zero();
      for (size_t j = 0; j < h.vert_gamma2.size(); ++j) {
        CHECK(cert.lambda[j] >= 0);
        sum += cert.lambda[j];
        for (int i = 0; i < kRank; ++i)
          comb[i] += cert.lambda[j] * Rat(static_cast<long>(h.vert_gamma2[j][i]));
      }
      CHECK_EQ(sum, Rat(1));
      for (int i = 0; i < kRank; ++i) {
        CHECK(cert.correction[i] >= 0);
        CHECK_EQ(comb[i] - Rat(static_cast<long>(g2[i])), cert.correction[i]);
      }
    } else {
      if (outside >= 50) continue;
      ++outside;
      Rat val(0);
      for (int i = 0; i < kRank; ++i) {
        CHECK(cert.functional[i] >= 0);
        val += cert.functional[i] * Rat(static_cast<long>(g2[i]));
      }
      CHECK(val > cert.bound);
      for (const IVec8& vert : h.vert_gamma2) {
        Rat vv(0);
        for (int i = 0; i < kRank; ++i)
          vv += cert.functional[i] * Rat(static_cast<long>(vert[i]));
        CHECK(vv <= cert.bound);
      }
    }
  }
  CHECK_EQ(inside, 50);
  CHECK_EQ(outside, 50);
}

TEST_CASE("ray intervals agree with pointwise membership") {
  const Context& c = ctx();
  const USmallHull& h = hull();
  const auto iv0 = hull_ray_interval(c, h, IVec8{}, c.beta_omega);
  REQUIRE(iv0.has_value());
  CHECK_EQ(to_i64(rat_floor(iv0->second)), 15);

  // a ray that misses: start far outside along gamma_8
  IVec8 far{};
  far[7] = h.coord_bounds[7] + 40;
  IVec8 dir{};
  dir[7] = 1;
  CHECK_FALSE(hull_ray_interval(c, h, far, dir).has_value());
}

TEST_CASE("unimodality scan is deterministic") {
  const UnimodalityReport a = unimodality_scan(ctx(), hull(), 3, 1);
  const UnimodalityReport b = unimodality_scan(ctx(), hull(), 3, 1);
  CHECK_EQ(a.scanned, b.scanned);
  CHECK(a.scanned > 0);
  REQUIRE_EQ(a.violations.size(), b.violations.size());
  for (size_t i = 0; i < a.violations.size(); ++i)
    CHECK(a.violations[i].coords == b.violations[i].coords);
}
