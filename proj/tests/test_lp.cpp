#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "eix/lp.hpp"

using namespace eix;

namespace {

LpProblem make(int rows, int cols, std::initializer_list<long> a, std::initializer_list<long> b) {
  LpProblem p;
  p.rows = rows;
  p.cols = cols;
  p.a.assign(rows, std::vector<Rat>(cols, Rat(0)));
  auto it = a.begin();
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) p.a[i][j] = Rat(*it++);
  p.b.clear();
  for (long v : b) p.b.push_back(Rat(v));
  return p;
}

}  // namespace

TEST_CASE("feasibility basics") {
  SUBCASE("single equation") {
    const LpFeasibility r = lp_feasible(make(1, 1, {1}, {1}));
    REQUIRE(r.feasible);
    CHECK_EQ(r.x[0], Rat(1));
  }
  SUBCASE("infeasible sign") {
    // x1 + x2 = -1 has no nonnegative solution
    const LpFeasibility r = lp_feasible(make(1, 2, {1, 1}, {-1}));
    REQUIRE_FALSE(r.feasible);
    // certificate: y^T A <= 0 and y^T b > 0
    CHECK(r.farkas[0] <= 0);
    CHECK(r.farkas[0] * Rat(-1) > 0);
  }
  SUBCASE("one-dimensional domination") {
    // lambda1*0 + lambda2*4 - c = mu, lambda simplex: feasible iff mu <= 4
    auto prob = [&](long mu) {
      LpProblem p = make(2, 3, {0, 4, -1, 1, 1, 0}, {mu, 1});
      return p;
    };
    CHECK(lp_feasible(prob(3)).feasible);
    CHECK(lp_feasible(prob(4)).feasible);
    CHECK(lp_feasible(prob(0)).feasible);
    const LpFeasibility out = lp_feasible(prob(5));
    REQUIRE_FALSE(out.feasible);
    // functional must separate: u*5 + t > 0 while u*v + t <= 0 on vertices
    const Rat u = out.farkas[0], t = out.farkas[1];
    CHECK(u * 0 + t <= 0);
    CHECK(u * 4 + t <= 0);
    CHECK(u * 5 + t > 0);
  }
}

TEST_CASE("optimization") {
  SUBCASE("minimum and maximum of a coordinate") {
    // x1 + x2 = 2
    const LpProblem p = make(1, 2, {1, 1}, {2});
    const LpOptimum lo = lp_minimize(p, {Rat(1), Rat(0)});
    REQUIRE(lo.feasible);
    CHECK_EQ(lo.value, Rat(0));
    const LpOptimum hi = lp_minimize(p, {Rat(-1), Rat(0)});
    REQUIRE(hi.feasible);
    CHECK_EQ(hi.value, Rat(-2));
  }
  SUBCASE("unbounded direction is reported") {
    // x2 = 1, minimize -x1
    const LpProblem p = make(1, 2, {0, 1}, {1});
    const LpOptimum r = lp_minimize(p, {Rat(-1), Rat(0)});
    REQUIRE(r.feasible);
    CHECK(r.unbounded);
  }
  SUBCASE("degenerate ties terminate") {
    // several identical columns force repeated ties in the ratio test
    LpProblem p = make(2, 4, {1, 1, 1, 0, 1, 1, 1, 1}, {1, 1});
    const LpOptimum r = lp_minimize(p, {Rat(0), Rat(0), Rat(0), Rat(1)});
    REQUIRE(r.feasible);
    CHECK_EQ(r.value, Rat(0));
  }
}

TEST_CASE("certificates hold on random systems") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> entry(-4, 4), rhs(-6, 6);
  int feas = 0, infeas = 0;
  for (int t = 0; t < 300; ++t) {
    LpProblem p;
    p.rows = 3;
    p.cols = 5;
    p.a.assign(p.rows, std::vector<Rat>(p.cols));
    p.b.resize(p.rows);
    for (int i = 0; i < p.rows; ++i) {
      for (int j = 0; j < p.cols; ++j) p.a[i][j] = Rat(entry(rng));
      p.b[i] = Rat(rhs(rng));
    }
    const LpFeasibility r = lp_feasible(p);
    if (r.feasible) {
      ++feas;
      for (int j = 0; j < p.cols; ++j) CHECK(r.x[j] >= 0);
      for (int i = 0; i < p.rows; ++i) {
        Rat s(0);
        for (int j = 0; j < p.cols; ++j) s += p.a[i][j] * r.x[j];
        CHECK_EQ(s, p.b[i]);
      }
    } else {
      ++infeas;
      Rat yb(0);
      for (int i = 0; i < p.rows; ++i) yb += r.farkas[i] * p.b[i];
      CHECK(yb > 0);
      for (int j = 0; j < p.cols; ++j) {
        Rat ya(0);
        for (int i = 0; i < p.rows; ++i) ya += r.farkas[i] * p.a[i][j];
        CHECK(ya <= 0);
      }
    }
  }
  // both branches must actually be exercised
  CHECK(feas > 20);
  CHECK(infeas > 20);
}
