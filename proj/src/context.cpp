#include "eix/context.hpp"

#include "eix/check.hpp"

namespace eix {
namespace {

std::int64_t as_i64(const Rat& r, const char* what) {
  CHECK(rat_is_integer(r), what);
  return to_i64(mpz_class(r.get_num()));
}

IVec8 ivec(const Vec8& v, const char* what) {
  IVec8 r{};
  for (int i = 0; i < kRank; ++i) r[i] = as_i64(v[i], what);
  return r;
}

}  // namespace

Context Context::create() {
  Context c;
  c.datum = RootDatum::build();
  c.w1 = enumerate_w1(c.datum);
  const RootDatum& d = c.datum;

  for (int i = 0; i < kRank; ++i) {
    c.rho_c_omega[i] = 1;
    for (int j = 0; j < kRank; ++j) {
      c.cartan_k[i][j] = d.cartan_k[i][j];
      c.cartan_g[i][j] = d.cartan_g[i][j];
      c.gram2_omega[i][j] = as_i64(2 * d.gram_omega[i][j], "2*Gram(omega) integral");
      c.gram_zeta_int[i][j] = as_i64(d.gram_zeta[i][j], "Gram(zeta) integral");
    }
  }
  c.beta_omega = ivec(d.convert(Weight(d.beta, Basis::Euclidean), Basis::Omega).coords,
                      "beta omega integral");

  for (int m = 0; m < kRank; ++m)
    for (int i = 0; i < kRank; ++i) {
      // 2 <omega_i, alpha_m> and <zeta_m, gamma_i>
      Vec8 om = vec_zero(), ze = vec_zero();
      for (int r = 0; r < kRank; ++r) {
        om[r] = d.to_euclid[static_cast<int>(Basis::Omega)][r][i];
        ze[r] = d.to_euclid[static_cast<int>(Basis::Zeta)][r][m];
      }
      c.zeta2_from_omega[m][i] = as_i64(2 * dot(om, d.simple_g[m]), "2*zeta-from-omega integral");
      c.omega_from_zeta[i][m] = as_i64(dot(ze, d.simple_k[i]), "omega-from-zeta integral");
    }

  c.chamber_rows.resize(c.w1.size());
  c.omega_rows.resize(c.w1.size());
  for (size_t j = 0; j < c.w1.size(); ++j) {
    const Mat8& m = c.w1[j].w.matrix;
    const Mat8 minv = mat_transpose(m);
    for (int i = 0; i < kRank; ++i) {
      const Vec8 wa = mat_vec(m, d.simple_g[i]);
      const Vec8 wg = mat_vec(minv, d.simple_k[i]);
      for (int t = 0; t < kRank; ++t) {
        Vec8 zt = vec_zero();
        for (int r = 0; r < kRank; ++r) zt[r] = d.to_euclid[static_cast<int>(Basis::Zeta)][r][t];
        c.chamber_rows[j][i][t] = as_i64(dot(zt, wa), "chamber row integral");
        c.omega_rows[j][i][t] = as_i64(dot(zt, wg), "omega row integral");
      }
    }
    c.rho_omega[j] = ivec(d.convert(c.w1[j].rho, Basis::Omega).coords, "rho^(j) omega integral");
    c.rho_n_omega[j] =
        ivec(d.convert(c.w1[j].rho_n, Basis::Omega).coords, "rho_n^(j) omega integral");
  }

  // Inverses of all principal submatrices of the g Cartan matrix. Every
  // principal submatrix of a Cartan matrix is positive definite.
  for (int mask = 0; mask < 256; ++mask) {
    CartanSubInverse& s = c.cartan_sub_inv[mask];
    s.size = 0;
    for (int i = 0; i < kRank; ++i)
      if (mask & (1 << i)) s.idx[s.size++] = i;
    const int n = s.size;
    if (n == 0) continue;
    // Gauss-Jordan on the n x n block.
    std::array<std::array<Rat, kRank>, kRank> a{}, inv{};
    for (int r = 0; r < n; ++r)
      for (int q = 0; q < n; ++q) {
        a[r][q] = Rat(static_cast<long>(d.cartan_g[s.idx[r]][s.idx[q]]));
        inv[r][q] = Rat(r == q ? 1 : 0);
      }
    for (int col = 0; col < n; ++col) {
      int piv = -1;
      for (int r = col; r < n; ++r)
        if (a[r][col] != 0) {
          piv = r;
          break;
        }
      CHECK(piv >= 0, "Cartan submatrix invertible");
      std::swap(a[piv], a[col]);
      std::swap(inv[piv], inv[col]);
      const Rat dd = a[col][col];
      for (int q = 0; q < n; ++q) {
        a[col][q] /= dd;
        inv[col][q] /= dd;
      }
      for (int r = 0; r < n; ++r) {
        if (r == col || a[r][col] == 0) continue;
        const Rat f = a[r][col];
        for (int q = 0; q < n; ++q) {
          a[r][q] -= f * a[col][q];
          inv[r][q] -= f * inv[col][q];
        }
      }
    }
    s.inv = inv;
  }

  return c;
}

Rat Context::norm_sq_zeta(const Vec8& z) const {
  Rat s(0);
  for (int i = 0; i < kRank; ++i)
    for (int j = 0; j < kRank; ++j) s += z[i] * z[j] * datum.gram_zeta[i][j];
  return s;
}

Rat Context::norm_sq_omega(const Vec8& w) const {
  Rat s(0);
  for (int i = 0; i < kRank; ++i)
    for (int j = 0; j < kRank; ++j) s += w[i] * w[j] * datum.gram_omega[i][j];
  return s;
}

}  // namespace eix
