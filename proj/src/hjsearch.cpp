#include "eix/hjsearch.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "eix/check.hpp"

namespace eix {

CertsResult compute_certs_from_members(const Context& c, const std::vector<IVec8>& members,
                                       int threads) {
  CertsResult r;
  r.usmall_total = members.size();
  const std::int64_t n = static_cast<std::int64_t>(members.size());
  std::vector<char> keep(n, 0);
  std::vector<Rat> spin(n), lam(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64) num_threads(threads > 0 ? threads : omp_get_max_threads())
#endif
  for (std::int64_t i = 0; i < n; ++i) {
    const KType mu(members[i]);
    const Rat s = Rat(static_cast<long>(spin_sq2_i64(c, mu.coords)), 2);
    const Rat l = lambda_params(c, mu).norm_sq;
    spin[i] = s;
    lam[i] = l;
    keep[i] = (s - l >= kCertsGapMin) ? 1 : 0;
  }
  bool have = false;
  for (std::int64_t i = 0; i < n; ++i) {
    if (!keep[i]) continue;
    CertsEntry e;
    e.mu = KType(members[i]);
    e.spin_sq = spin[i];
    e.lambda_sq = lam[i];
    e.gap = spin[i] - lam[i];
    if (!have || e.lambda_sq < r.lambda_sq_min) r.lambda_sq_min = e.lambda_sq;
    if (!have || e.lambda_sq > r.lambda_sq_max) r.lambda_sq_max = e.lambda_sq;
    have = true;
    r.entries.push_back(std::move(e));
  }
  CHECK(have, "certificate set nonempty");
  return r;
}

CertsResult compute_certs(const Context& c, const USmallHull& h, int threads) {
  std::vector<IVec8> members;
  members.reserve(300000);
  enumerate_usmall(c, h, [&](const IVec8& v) { members.push_back(v); }, threads);
  return compute_certs_from_members(c, members, threads);
}

std::vector<OmegaEntry> compute_omega(const Context& c, int threads) {
  (void)threads;  // the search is sub-second; kept serial for determinism
  // integer norm form: Gram(zeta) is the inverse g Cartan, all entries
  // positive, so partial sums only grow as coordinates are appended.
  const IMat8& g = c.gram_zeta_int;
  for (int i = 0; i < kRank; ++i)
    for (int j = 0; j < kRank; ++j) CHECK(g[i][j] > 0, "inverse g-Cartan positive");

  const std::int64_t hi2 = 539;  // floor(1079/2)
  const std::int64_t lo2 = 227;  // ceil(453/2)

  std::vector<OmegaEntry> out;
  IVec8 v{};
  auto rec = [&](auto&& self, int depth, std::int64_t norm) -> void {
    if (depth == kRank) {
      if (norm < lo2 || norm > hi2) return;
      const InfChar l = InfChar::from_ints(v);
      if (!hp_integral(l)) return;
      OmegaEntry e;
      e.lambda = l;
      e.norm_sq = Rat(static_cast<long>(norm));
      out.push_back(std::move(e));
      return;
    }
    for (std::int64_t a = 0;; ++a) {
      v[depth] = a;
      // exact norm of the prefix with zeros appended
      std::int64_t nn = norm;
      nn += a * a * g[depth][depth];
      std::int64_t cross = 0;
      for (int m = 0; m < depth; ++m) cross += v[m] * g[m][depth];
      nn += 2 * a * cross;
      if (nn > hi2) break;  // larger a only increases the form
      self(self, depth + 1, nn);
    }
    v[depth] = 0;
  };
  rec(rec, 0, 0);
  return out;  // lexicographic by construction
}

Phi1Report validate_phi1(const std::vector<InfChar>& data) {
  Phi1Report r;
  r.count = static_cast<int>(data.size());
  for (size_t i = 0; i < data.size(); ++i) {
    const InfChar& l = data[i];
    if (!hp_integral(l)) {
      r.failures.push_back(std::to_string(i) + ": not HP integral");
      continue;
    }
    Rat mn = l.zeta[0], mx = l.zeta[0];
    for (int m = 1; m < kRank; ++m) {
      mn = std::min(mn, l.zeta[m]);
      mx = std::max(mx, l.zeta[m]);
    }
    if (mn != 0) r.failures.push_back(std::to_string(i) + ": minimum coordinate not 0");
    if (mx != 1) r.failures.push_back(std::to_string(i) + ": maximum coordinate not 1");
  }
  return r;
}

int hp_count_01() {
  int count = 0;
  for (int mask = 0; mask < 256; ++mask) {
    IVec8 v{};
    bool has_zero = false;
    for (int i = 0; i < kRank; ++i) {
      v[i] = (mask >> i) & 1;
      if (v[i] == 0) has_zero = true;
    }
    if (has_zero && hp_integral(InfChar::from_ints(v))) ++count;
  }
  return count;
}

}  // namespace eix
