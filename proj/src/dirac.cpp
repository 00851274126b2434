#include "eix/dirac.hpp"

#include <algorithm>
#include <set>

#include "eix/check.hpp"

namespace eix {
namespace {

// In omega coordinates the i-th coordinate is the pairing against
// gamma_i-check, so a simple reflection is an integer column operation.
void dominantize_k_i64(const IMat8& cartan_k, IVec8& x) {
  for (int guard = 0; guard < 256; ++guard) {
    int neg = -1;
    for (int i = 0; i < kRank; ++i)
      if (x[i] < 0) {
        neg = i;
        break;
      }
    if (neg < 0) return;
    const std::int64_t xi = x[neg];
    for (int m = 0; m < kRank; ++m) x[m] -= xi * cartan_k[m][neg];
  }
  throw std::logic_error("dominantize_k_i64 did not terminate");
}

std::int64_t quad2(const IMat8& gram2, const IVec8& v) {
  std::int64_t s = 0;
  for (int i = 0; i < kRank; ++i) {
    std::int64_t row = 0;
    for (int j = 0; j < kRank; ++j) row += gram2[i][j] * v[j];
    s += v[i] * row;
  }
  return s;
}

}  // namespace

KType::KType(const IVec8& c) : coords(c) {
  for (int i = 0; i < kRank; ++i) CHECK(c[i] >= 0, "K-type coordinates dominant");
  group_level = RootDatum::ktype_parity(c);
}

InfChar::InfChar(Vec8 z) : zeta(std::move(z)) {
  for (int i = 0; i < kRank; ++i) CHECK(zeta[i] >= 0, "infinitesimal character dominant");
}

std::int64_t spin_sq2_i64(const Context& c, const IVec8& mu) {
  std::int64_t best = -1;
  for (size_t j = 0; j < c.w1.size(); ++j) {
    IVec8 x;
    for (int i = 0; i < kRank; ++i) x[i] = mu[i] - c.rho_n_omega[j][i];
    dominantize_k_i64(c.cartan_k, x);
    for (int i = 0; i < kRank; ++i) x[i] += 1;  // + rho_c
    const std::int64_t v = quad2(c.gram2_omega, x);
    if (best < 0 || v < best) best = v;
  }
  return best;
}

SpinNormResult spin_norm(const Context& c, const KType& mu) {
  SpinNormResult r;
  std::int64_t best = -1;
  std::vector<std::pair<std::int64_t, IVec8>> per_j(c.w1.size());
  for (size_t j = 0; j < c.w1.size(); ++j) {
    IVec8 x;
    for (int i = 0; i < kRank; ++i) x[i] = mu.coords[i] - c.rho_n_omega[j][i];
    dominantize_k_i64(c.cartan_k, x);
    IVec8 shifted = x;
    for (int i = 0; i < kRank; ++i) shifted[i] += 1;
    const std::int64_t v = quad2(c.gram2_omega, shifted);
    per_j[j] = {v, x};
    if (best < 0 || v < best) best = v;
  }
  r.spin_norm_sq = Rat(static_cast<long>(best), 2);
  std::set<IVec8> gam;
  for (size_t j = 0; j < c.w1.size(); ++j) {
    if (per_j[j].first != best) continue;
    r.minimizers.push_back(static_cast<int>(j));
    gam.insert(per_j[j].second);
  }
  for (const IVec8& g : gam) r.gammas.push_back(weight_i64(g, Basis::Omega));
  return r;
}

Vec8 project_dominant_zeta(const Context& c, const Vec8& y) {
  // KKT for min |z - y|^2 over the cone {zeta coords >= 0}:
  //   z = y + sum_{i in S} l_i alpha_i,  l >= 0,  z_i = 0 on S,  z >= 0.
  const auto solve = [&](int mask, std::array<Rat, kRank>& lambda) {
    const CartanSubInverse& s = c.cartan_sub_inv[mask];
    for (int r = 0; r < s.size; ++r) {
      Rat v(0);
      for (int q = 0; q < s.size; ++q) v += s.inv[r][q] * (-y[s.idx[q]]);
      lambda[r] = v;
    }
  };
  const auto point = [&](int mask, const std::array<Rat, kRank>& lambda) {
    const CartanSubInverse& s = c.cartan_sub_inv[mask];
    Vec8 z = y;
    for (int r = 0; r < s.size; ++r)
      for (int m = 0; m < kRank; ++m)
        z[m] += lambda[r] * Rat(static_cast<long>(c.datum.cartan_g[m][s.idx[r]]));
    return z;
  };

  int mask = 0;
  for (int i = 0; i < kRank; ++i)
    if (y[i] < 0) mask |= 1 << i;
  std::array<Rat, kRank> lambda{};
  for (int guard = 0; guard < 600; ++guard) {
    solve(mask, lambda);
    const CartanSubInverse& s = c.cartan_sub_inv[mask];
    int drop = -1;
    for (int r = 0; r < s.size; ++r)
      if (lambda[r] < 0) {
        drop = s.idx[r];
        break;
      }
    if (drop >= 0) {
      mask &= ~(1 << drop);
      continue;
    }
    const Vec8 z = point(mask, lambda);
    int add = -1;
    for (int m = 0; m < kRank; ++m)
      if (!(mask & (1 << m)) && z[m] < 0) {
        add = m;
        break;
      }
    if (add >= 0) {
      mask |= 1 << add;
      continue;
    }
    return z;
  }

  // Exhaustive wall-subset fallback; the KKT point exists and is unique.
  for (int m2 = 0; m2 < 256; ++m2) {
    solve(m2, lambda);
    const CartanSubInverse& s = c.cartan_sub_inv[m2];
    bool ok = true;
    for (int r = 0; r < s.size && ok; ++r) ok = lambda[r] >= 0;
    if (!ok) continue;
    const Vec8 z = point(m2, lambda);
    for (int m = 0; m < kRank && ok; ++m) ok = z[m] >= 0;
    if (ok) return z;
  }
  throw std::logic_error("cone projection: no KKT subset");
}

Weight project_to_chamber(const Context& c, const Weight& y, int j) {
  CHECK(j >= 0 && j < static_cast<int>(c.w1.size()), "chamber index");
  const Mat8 winv = mat_transpose(c.w1[j].w.matrix);
  const Vec8 ye = mat_vec(winv, c.datum.euclid(y));
  const Vec8 yz = c.datum.convert(Weight(ye, Basis::Euclidean), Basis::Zeta).coords;
  const Vec8 pz = project_dominant_zeta(c, yz);
  const Vec8 pe = mat_vec(c.w1[j].w.matrix,
                          c.datum.euclid(Weight(pz, Basis::Zeta)));
  return c.datum.convert(Weight(pe, Basis::Euclidean), y.basis);
}

LambdaResult lambda_params(const Context& c, const KType& mu) {
  // Doubled zeta coordinates of mu + 2 rho_c stay integral for both K- and
  // k-level weights.
  IVec8 mu2rc;
  for (int i = 0; i < kRank; ++i) mu2rc[i] = mu.coords[i] + 2;
  const IVec8 z2 = imat_vec(c.zeta2_from_omega, mu2rc);

  LambdaResult r;
  std::optional<Vec8> first;  // zeta coords of the accepted projection
  for (size_t j = 0; j < c.w1.size(); ++j) {
    const IVec8 t = imat_vec(c.chamber_rows[j], z2);
    bool inside = true;
    for (int i = 0; i < kRank; ++i)
      if (t[i] < 0) {
        inside = false;
        break;
      }
    if (!inside) continue;
    r.js.push_back(static_cast<int>(j));
    // zeta coords of w_j^{-1}(mu + 2 rho_c) - rho^(0)
    Vec8 y;
    for (int i = 0; i < kRank; ++i) y[i] = Rat(static_cast<long>(t[i]), 2) - 1;
    const Vec8 proj = project_dominant_zeta(c, y);
    // push back into chamber j
    const Vec8 pe = mat_vec(c.w1[j].w.matrix, c.datum.euclid(Weight(proj, Basis::Zeta)));
    const Vec8 pz = c.datum.convert(Weight(pe, Basis::Euclidean), Basis::Zeta).coords;
    if (!first) {
      first = pz;
      r.lambda_a = Weight(pz, Basis::Zeta);
      r.norm_sq = c.norm_sq_zeta(proj);
    } else {
      CHECK(vec_eq(*first, pz), "lambda_a independent of the chamber choice");
    }
  }
  CHECK(!r.js.empty(), "mu + 2 rho_c lies in some chamber");
  return r;
}

Rat norm_sq_infchar(const Context& c, const InfChar& l) { return c.norm_sq_zeta(l.zeta); }

Rat dirac_gap(const Context& c, const KType& mu, const InfChar& l) {
  return spin_norm(c, mu).spin_norm_sq - norm_sq_infchar(c, l);
}

bool hp_integral(const InfChar& l) {
  std::int64_t v[kRank];
  for (int i = 0; i < kRank; ++i) {
    if (!rat_is_integer(l.zeta[i])) return false;
    v[i] = to_i64(mpz_class(l.zeta[i].get_num()));
    if (v[i] < 0) return false;
  }
  const auto a = v[0], b = v[1], cc = v[2], dd = v[3], e = v[4], f = v[5], g = v[6], h = v[7];
  return a + cc > 0 && b + dd > 0 && cc + dd > 0 && dd + e > 0 && e + f > 0 &&
         f + g > 0 && g + h > 0 && dd + f + h > 0 && a + b + e + g > 0 &&
         a + b + e + h > 0 && a + b + f + h > 0 && b + cc + e + g > 0 &&
         b + cc + e + h > 0 && b + cc + f + h > 0;
}

bool hp_zero_witness(const Context& c, const InfChar& l) {
  // Exact on integral characters via the cached integer rows; rational
  // characters go through the same pairings in exact arithmetic.
  bool integral = true;
  IVec8 zi{};
  for (int i = 0; i < kRank; ++i) {
    if (!rat_is_integer(l.zeta[i])) {
      integral = false;
      break;
    }
    zi[i] = to_i64(mpz_class(l.zeta[i].get_num()));
  }
  for (size_t j = 0; j < c.w1.size(); ++j) {
    bool has_zero = false;
    if (integral) {
      const IVec8 om = imat_vec(c.omega_rows[j], zi);
      for (int i = 0; i < kRank; ++i)
        if (om[i] == 0) {
          has_zero = true;
          break;
        }
    } else {
      const Weight img = apply(c.datum, c.w1[j].w, l.weight());
      const Vec8 om = c.datum.convert(img, Basis::Omega).coords;
      for (int i = 0; i < kRank; ++i)
        if (om[i] == 0) {
          has_zero = true;
          break;
        }
    }
    if (!has_zero) return false;
  }
  return true;
}

}  // namespace eix
