#include "eix/rootdata.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "eix/check.hpp"

namespace eix {
namespace {

// Solve E a = r for the simple-root coordinates of a root given in
// Euclidean coordinates (E has the alpha_i as columns).
Vec8 simple_coords(const Mat8& alpha_cols_inv, const Vec8& r) {
  return mat_vec(alpha_cols_inv, r);
}

}  // namespace

RootDatum RootDatum::build() {
  RootDatum d;

  // Simple roots: alpha_1 = (1,-1,-1,-1,-1,-1,-1,1)/2, alpha_2 = e1+e2,
  // alpha_i = e_{i-1} - e_{i-2} for 3 <= i <= 8.
  for (auto& a : d.simple_g) a = vec_zero();
  for (int i = 0; i < kRank; ++i) d.simple_g[0][i] = Rat(i == 0 || i == 7 ? 1 : -1, 2);
  d.simple_g[1][0] = 1;
  d.simple_g[1][1] = 1;
  for (int i = 2; i < kRank; ++i) {
    d.simple_g[i][i - 1] = 1;
    d.simple_g[i][i - 2] = -1;
  }

  // All 240 roots of E8: +-e_i +- e_j and half-integer vectors with all
  // entries +-1/2 and an even number of minus signs.
  std::vector<Vec8> all_roots;
  for (int i = 0; i < kRank; ++i)
    for (int j = i + 1; j < kRank; ++j)
      for (int si = -1; si <= 1; si += 2)
        for (int sj = -1; sj <= 1; sj += 2) {
          Vec8 r = vec_zero();
          r[i] = si;
          r[j] = sj;
          all_roots.push_back(r);
        }
  for (int mask = 0; mask < 256; ++mask) {
    if (__builtin_popcount(mask) % 2 != 0) continue;
    Vec8 r;
    for (int i = 0; i < kRank; ++i) r[i] = Rat((mask >> i) & 1 ? -1 : 1, 2);
    all_roots.push_back(r);
  }
  CHECK(all_roots.size() == 240, "E8 root count");

  // Matrix with columns alpha_i, and its inverse for coordinate extraction.
  Mat8 alpha_cols;
  for (int i = 0; i < kRank; ++i)
    for (int j = 0; j < kRank; ++j) alpha_cols[i][j] = d.simple_g[j][i];
  const Mat8 alpha_cols_inv = mat_inverse(alpha_cols);

  // Positivity and compactness are read off the simple-root coordinates:
  // the alpha_8 coefficient is even exactly on the compact roots.
  for (const Vec8& r : all_roots) {
    const Vec8 c = simple_coords(alpha_cols_inv, r);
    bool nonneg = true, nonpos = true;
    for (int i = 0; i < kRank; ++i) {
      CHECK(rat_is_integer(c[i]), "root has integer simple coordinates");
      if (c[i] > 0) nonpos = false;
      if (c[i] < 0) nonneg = false;
    }
    CHECK(nonneg != nonpos, "root sign split");
    if (!nonneg) continue;
    d.positive_g.push_back(r);
    const long c8 = c[7].get_num().get_si();
    if (c8 % 2 == 0) {
      d.positive_k.push_back(r);
    } else {
      d.noncompact_pos.push_back(r);
    }
  }
  CHECK(d.positive_g.size() == 120, "|positive g-roots| = 120");
  CHECK(d.positive_k.size() == 64, "|positive k-roots| = 64");
  CHECK(d.noncompact_pos.size() == 56, "|noncompact positive roots| = 56");

  // beta = 2a1+3a2+4a3+6a4+5a5+4a6+3a7+a8, the highest noncompact root.
  {
    const int m[kRank] = {2, 3, 4, 6, 5, 4, 3, 1};
    Vec8 b = vec_zero();
    for (int i = 0; i < kRank; ++i) b = vec_add(b, vec_scale(m[i], d.simple_g[i]));
    d.beta = b;
    CHECK(std::any_of(d.noncompact_pos.begin(), d.noncompact_pos.end(),
                      [&](const Vec8& r) { return vec_eq(r, b); }),
          "beta is a noncompact positive root");
  }

  // k-simple roots: gamma_i = alpha_i for i <= 7, gamma_8 = beta + alpha_8.
  for (int i = 0; i < 7; ++i) d.simple_k[i] = d.simple_g[i];
  d.simple_k[7] = vec_add(d.beta, d.simple_g[7]);

  // gamma_8 is the highest root of g: pairing with every positive root is
  // nonnegative and it is itself positive.
  CHECK(d.is_positive_root_g(d.simple_k[7]), "gamma_8 is a positive root");
  for (const Vec8& r : d.positive_g)
    CHECK(dot(d.simple_k[7], r) >= 0, "gamma_8 is the highest root");

  d.rho = vec_zero();
  for (const Vec8& r : d.positive_g) d.rho = vec_add(d.rho, r);
  d.rho = vec_scale(Rat(1, 2), d.rho);
  d.rho_c = vec_zero();
  for (const Vec8& r : d.positive_k) d.rho_c = vec_add(d.rho_c, r);
  d.rho_c = vec_scale(Rat(1, 2), d.rho_c);

  for (int i = 0; i < kRank; ++i)
    for (int j = 0; j < kRank; ++j) {
      const Rat g = dot(d.simple_g[i], d.simple_g[j]);
      const Rat k = dot(d.simple_k[i], d.simple_k[j]);
      CHECK(rat_is_integer(g) && rat_is_integer(k), "integral Cartan pairings");
      d.cartan_g[i][j] = g.get_num().get_si();
      d.cartan_k[i][j] = k.get_num().get_si();
      CHECK(i != j || d.cartan_g[i][j] == 2, "<alpha,alpha> = 2");
      CHECK(i != j || d.cartan_k[i][j] == 2, "<gamma,gamma> = 2");
    }

  // The k Cartan matrix splits as E7 + A1 in the gamma ordering: gamma_8 is
  // orthogonal to the rest.
  for (int i = 0; i < 7; ++i) CHECK(d.cartan_k[i][7] == 0, "gamma_8 orthogonal to E7 part");

  // Basis matrices. Columns of to_euclid are the basis vectors.
  d.to_euclid[static_cast<int>(Basis::Euclidean)] = mat_identity();
  d.to_euclid[static_cast<int>(Basis::SimpleG)] = alpha_cols;
  // zeta_i / omega_i are dual (under the form) to the simple (co)roots:
  // the matrix of columns is the inverse transpose of the alpha/gamma
  // column matrix.
  d.to_euclid[static_cast<int>(Basis::Zeta)] = mat_transpose(alpha_cols_inv);
  {
    Mat8 gamma_cols;
    for (int i = 0; i < kRank; ++i)
      for (int j = 0; j < kRank; ++j) gamma_cols[i][j] = d.simple_k[j][i];
    d.to_euclid[static_cast<int>(Basis::Omega)] = mat_transpose(mat_inverse(gamma_cols));
  }
  for (int b = 0; b < 4; ++b) d.from_euclid[b] = mat_inverse(d.to_euclid[b]);

  // Gram matrices of the fundamental-weight bases coincide with the
  // inverse Cartan matrices.
  {
    Mat8 cg, ck;
    for (int i = 0; i < kRank; ++i)
      for (int j = 0; j < kRank; ++j) {
        cg[i][j] = Rat(static_cast<long>(d.cartan_g[i][j]));
        ck[i][j] = Rat(static_cast<long>(d.cartan_k[i][j]));
      }
    d.gram_zeta = mat_inverse(cg);
    d.gram_omega = mat_inverse(ck);
    const Mat8& Z = d.to_euclid[static_cast<int>(Basis::Zeta)];
    const Mat8& O = d.to_euclid[static_cast<int>(Basis::Omega)];
    for (int i = 0; i < kRank; ++i)
      for (int j = 0; j < kRank; ++j) {
        Vec8 zi, zj, oi, oj;
        for (int m = 0; m < kRank; ++m) {
          zi[m] = Z[m][i];
          zj[m] = Z[m][j];
          oi[m] = O[m][i];
          oj[m] = O[m][j];
        }
        CHECK(dot(zi, zj) == d.gram_zeta[i][j], "zeta Gram = inverse g-Cartan");
        CHECK(dot(oi, oj) == d.gram_omega[i][j], "omega Gram = inverse k-Cartan");
      }
  }

  // Headline structural invariants.
  CHECK(d.norm_sq(Weight(d.rho, Basis::Euclidean)) == 620, "|rho|^2 = 620");
  {
    const Vec8 beta_om = mat_vec(d.from_euclid[static_cast<int>(Basis::Omega)], d.beta);
    const Rat expect[kRank] = {0, 0, 0, 0, 0, 0, 1, 1};
    for (int i = 0; i < kRank; ++i) CHECK(beta_om[i] == expect[i], "beta = [0,...,0,1,1] in omega");
    const Vec8 rc_om = mat_vec(d.from_euclid[static_cast<int>(Basis::Omega)], d.rho_c);
    for (int i = 0; i < kRank; ++i) CHECK(rc_om[i] == 1, "rho_c = [1,...,1] in omega");
  }

  return d;
}

bool RootDatum::is_positive_root_g(const Vec8& e) const {
  return std::any_of(positive_g.begin(), positive_g.end(),
                     [&](const Vec8& r) { return vec_eq(r, e); });
}

bool RootDatum::is_root_k(const Vec8& e) const {
  for (const Vec8& r : positive_k) {
    if (vec_eq(r, e)) return true;
    bool neg = true;
    for (int i = 0; i < kRank; ++i)
      if (e[i] != -r[i]) {
        neg = false;
        break;
      }
    if (neg) return true;
  }
  return false;
}

Weight RootDatum::convert(const Weight& x, Basis target) const {
  if (x.basis == target) return x;
  const Vec8 e = mat_vec(to_euclid[static_cast<int>(x.basis)], x.coords);
  if (target == Basis::Euclidean) return Weight(e, target);
  return Weight(mat_vec(from_euclid[static_cast<int>(target)], e), target);
}

Rat RootDatum::inner(const Weight& x, const Weight& y) const {
  return dot(euclid(x), euclid(y));
}

Rat RootDatum::twice_rho_check_pairing(const Weight& x) const {
  // Simply laced with <r,r> = 2: coroots are identified with roots, so
  // rho_check corresponds to rho itself.
  return 2 * inner(x, Weight(rho, Basis::Euclidean));
}

}  // namespace eix
