#ifndef EIX_TEST_PROJECTION_ORACLE_HPP
#define EIX_TEST_PROJECTION_ORACLE_HPP

// Test-only oracle for the dominant-cone projection: equality-constrained
// least squares on every one of the 256 wall subsets, keep the feasible
// candidates, return the closest. Independent of the library's active-set
// path and of its precomputed submatrix inverses.

#include "eix/context.hpp"

namespace eixtest {

inline eix::Vec8 projection_oracle_256(const eix::Context& c, const eix::Vec8& y) {
  using namespace eix;
  const RootDatum& d = c.datum;
  bool have = false;
  Vec8 best = vec_zero();
  Rat best_dist;
  for (int mask = 0; mask < 256; ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < kRank; ++i)
      if (mask & (1 << i)) idx.push_back(i);
    const int n = static_cast<int>(idx.size());
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n + 1, Rat(0)));
    for (int r = 0; r < n; ++r) {
      for (int q = 0; q < n; ++q) a[r][q] = Rat(static_cast<long>(d.cartan_g[idx[r]][idx[q]]));
      a[r][n] = -y[idx[r]];
    }
    bool singular = false;
    for (int col = 0; col < n && !singular; ++col) {
      int piv = -1;
      for (int r = col; r < n; ++r)
        if (a[r][col] != 0) {
          piv = r;
          break;
        }
      if (piv < 0) {
        singular = true;
        break;
      }
      std::swap(a[piv], a[col]);
      for (int r = 0; r < n; ++r) {
        if (r == col || a[r][col] == 0) continue;
        const Rat f = a[r][col] / a[col][col];
        for (int q = col; q <= n; ++q) a[r][q] -= f * a[col][q];
      }
    }
    if (singular) continue;
    Vec8 z = y;
    for (int r = 0; r < n; ++r) {
      const Rat nu = a[r][n] / a[r][r];
      for (int m = 0; m < kRank; ++m)
        z[m] += nu * Rat(static_cast<long>(d.cartan_g[m][idx[r]]));
    }
    bool feasible = true;
    for (int m = 0; m < kRank && feasible; ++m) feasible = z[m] >= 0;
    if (!feasible) continue;
    const Vec8 diff = vec_sub(z, y);
    Rat dist(0);
    for (int i = 0; i < kRank; ++i)
      for (int j = 0; j < kRank; ++j) dist += diff[i] * diff[j] * d.gram_zeta[i][j];
    if (!have || dist < best_dist) {
      have = true;
      best = z;
      best_dist = dist;
    }
  }
  if (!have) throw std::logic_error("oracle: no feasible face");
  return best;
}

}  // namespace eixtest

#endif
