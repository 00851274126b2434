#include "eix/pencil.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "eix/check.hpp"

namespace eix {
namespace {

IVec8 gamma2_of(const USmallHull& h, const IVec8& mu_omega) {
  return imat_vec(h.gamma2_from_omega, mu_omega);
}

// Feasibility system for "mu is dominated by a convex combination of the
// vertices": columns are the vertex weights followed by the root-cone
// correction, rows the 8 coordinate equations plus convexity.
LpProblem hull_lp(const USmallHull& h, const IVec8& mu_gamma2) {
  const int nv = static_cast<int>(h.vert_gamma2.size());
  LpProblem p;
  p.rows = kRank + 1;
  p.cols = nv + kRank;
  p.a.assign(p.rows, std::vector<Rat>(p.cols, Rat(0)));
  p.b.assign(p.rows, Rat(0));
  for (int i = 0; i < kRank; ++i) {
    for (int j = 0; j < nv; ++j) p.a[i][j] = Rat(static_cast<long>(h.vert_gamma2[j][i]));
    p.a[i][nv + i] = -1;
    p.b[i] = Rat(static_cast<long>(mu_gamma2[i]));
  }
  for (int j = 0; j < nv; ++j) p.a[kRank][j] = 1;
  p.b[kRank] = 1;
  return p;
}

// Same system with a ray parameter: mu = base + t * dir, t >= 0 a variable.
LpProblem hull_ray_lp(const USmallHull& h, const IVec8& base_g2, const IVec8& dir_g2) {
  LpProblem p = hull_lp(h, base_g2);
  p.cols += 1;
  for (int i = 0; i < kRank; ++i) p.a[i].push_back(Rat(-static_cast<long>(dir_g2[i])));
  p.a[kRank].push_back(Rat(0));
  return p;
}

struct FunctionalSet {
  std::vector<IVec8> rows;
  std::vector<std::int64_t> bounds;

  void add(const IVec8& r, std::int64_t b) {
    rows.push_back(r);
    bounds.push_back(b);
  }
};

// Turn an LP Farkas certificate (on doubled gamma coordinates) into an
// integer functional on omega coordinates with its hull bound.
HullFunctional functional_from_farkas(const USmallHull& h, const std::vector<Rat>& y) {
  CHECK(y.size() >= kRank + 1, "farkas size");
  mpz_class scale(1);
  for (int i = 0; i <= kRank; ++i) scale = lcm(scale, y[i].get_den());
  std::array<mpz_class, kRank> u;
  for (int i = 0; i < kRank; ++i) {
    u[i] = mpz_class(y[i] * Rat(scale));
    CHECK(u[i] >= 0, "farkas functional dominant");
  }
  const mpz_class bound = mpz_class(Rat(-y[kRank]) * Rat(scale));
  HullFunctional f;
  // omega row: <x,u> on gamma2 coords equals (G2^T u) . x on omega coords
  for (int m = 0; m < kRank; ++m) {
    mpz_class s(0);
    for (int i = 0; i < kRank; ++i) s += u[i] * h.gamma2_from_omega[i][m];
    f.omega_row[m] = to_i64(s);
    CHECK(f.omega_row[m] >= 0, "omega functional nonnegative");
  }
  f.bound = to_i64(bound);
  return f;
}

struct RayDecision {
  bool hit = false;
  Rat lo, hi;
  std::vector<Rat> farkas;  // set when !hit
};

RayDecision decide_ray(const Context&, const USmallHull& h, const IVec8& base_omega,
                       const IVec8& dir_omega) {
  const IVec8 b2 = gamma2_of(h, base_omega);
  const IVec8 d2 = gamma2_of(h, dir_omega);
  const LpProblem p = hull_ray_lp(h, b2, d2);
  std::vector<Rat> cost(p.cols, Rat(0));
  cost[p.cols - 1] = 1;
  RayDecision r;
  const LpOptimum lo = lp_minimize(p, cost);
  if (!lo.feasible) {
    r.farkas = lo.farkas;
    return r;
  }
  cost[p.cols - 1] = -1;
  const LpOptimum hi = lp_minimize(p, cost);
  CHECK(hi.feasible && !hi.unbounded, "hull ray is bounded above");
  r.hit = true;
  r.lo = lo.value;
  r.hi = -hi.value;
  return r;
}

struct ScanParams {
  IVec8 lo{}, hi{};
};

// Depth-first scan over omega boxes; at the innermost coordinate whole rays
// are decided by two optimizing LPs, and failed rays contribute separating
// functionals that prune later subtrees by partial sums.
class Scanner {
 public:
  Scanner(const Context& c, const USmallHull& h, const ScanParams& sp, FunctionalSet cache)
      : c_(c), h_(h), sp_(sp), cache_(std::move(cache)) {}

  template <typename Sink>
  std::uint64_t run(Sink&& sink) {
    IVec8 coords{};
    std::vector<std::int64_t> partial(cache_.rows.size(), 0);
    return rec(0, coords, partial, sink);
  }

 private:
  template <typename Sink>
  std::uint64_t rec(int depth, IVec8& coords, std::vector<std::int64_t>& partial, Sink&& sink) {
    if (depth == kRank - 1) return ray(coords, partial, sink);
    std::uint64_t total = 0;
    for (std::int64_t v = sp_.lo[depth]; v <= sp_.hi[depth]; ++v) {
      coords[depth] = v;
      bool pruned = false;
      std::vector<std::int64_t> next = partial;
      for (size_t f = 0; f < cache_.rows.size(); ++f) {
        next[f] = partial[f] + v * cache_.rows[f][depth];
        if (next[f] > cache_.bounds[f]) {
          // remaining coordinates only increase the value
          pruned = true;
          break;
        }
      }
      if (pruned) continue;
      total += rec(depth + 1, coords, next, sink);
    }
    coords[depth] = 0;
    return total;
  }

  template <typename Sink>
  std::uint64_t ray(IVec8& coords, const std::vector<std::int64_t>& partial, Sink&& sink) {
    const int last = kRank - 1;
    // cached rejection of the entire ray at its minimum
    for (size_t f = 0; f < cache_.rows.size(); ++f) {
      if (partial[f] + sp_.lo[last] * cache_.rows[f][last] > cache_.bounds[f]) return 0;
    }
    coords[last] = 0;
    IVec8 dir{};
    dir[last] = 1;
    const RayDecision d = decide_ray(c_, h_, coords, dir);
    if (!d.hit) {
      const HullFunctional hf = functional_from_farkas(h_, d.farkas);
      cache_.add(hf.omega_row, hf.bound);
      return 0;
    }
    std::int64_t n_lo = std::max<std::int64_t>(to_i64(rat_ceil(d.lo)), sp_.lo[last]);
    std::int64_t n_hi = std::min<std::int64_t>(to_i64(rat_floor(d.hi)), sp_.hi[last]);
    const std::int64_t par = (coords[1] + coords[4] + coords[6]) & 1;
    std::uint64_t count = 0;
    for (std::int64_t n = n_lo; n <= n_hi; ++n) {
      if (((n & 1) ^ par) != 0) continue;  // K-type parity
      coords[last] = n;
      sink(coords);
      ++count;
    }
    coords[last] = 0;
    return count;
  }

  const Context& c_;
  const USmallHull& h_;
  ScanParams sp_;
  FunctionalSet cache_;
};

FunctionalSet base_cache(const USmallHull& h) {
  FunctionalSet fs;
  for (const HullFunctional& f : h.base_functionals) fs.add(f.omega_row, f.bound);
  return fs;
}

}  // namespace

USmallHull build_usmall_hull(const Context& c) {
  USmallHull h;
  const RootDatum& d = c.datum;

  // doubled inverse k-Cartan: integer, nonnegative
  {
    Mat8 ck;
    for (int i = 0; i < kRank; ++i)
      for (int j = 0; j < kRank; ++j) ck[i][j] = Rat(static_cast<long>(d.cartan_k[i][j]));
    const Mat8 inv = mat_inverse(ck);
    for (int i = 0; i < kRank; ++i)
      for (int j = 0; j < kRank; ++j) {
        const Rat v = 2 * inv[i][j];
        CHECK(rat_is_integer(v), "doubled inverse k-Cartan integral");
        h.gamma2_from_omega[i][j] = to_i64(mpz_class(v.get_num()));
        CHECK(h.gamma2_from_omega[i][j] >= 0, "inverse k-Cartan nonnegative");
      }
  }

  std::vector<IVec8> verts_omega;
  for (const CosetRep& r : c.w1) {
    const Weight vo = d.convert(r.vertex, Basis::Omega);
    h.vertices.push_back(vo);
    IVec8 vi{};
    for (int i = 0; i < kRank; ++i) {
      CHECK(rat_is_integer(vo.coords[i]), "hull vertex integral");
      vi[i] = to_i64(mpz_class(vo.coords[i].get_num()));
      CHECK(vi[i] >= 0, "hull vertex dominant");
    }
    verts_omega.push_back(vi);
  }
  {
    std::vector<IVec8> g2v;
    for (const IVec8& v : verts_omega) g2v.push_back(imat_vec(h.gamma2_from_omega, v));
    std::sort(g2v.begin(), g2v.end());
    g2v.erase(std::unique(g2v.begin(), g2v.end()), g2v.end());
    h.vert_gamma2 = std::move(g2v);
  }

  // box bounds: sup of each omega coordinate over the full orbit hull
  for (int i = 0; i < kRank; ++i) {
    const Weight dom_coroot =
        dominantize_k(d, Weight(d.simple_k[i], Basis::Euclidean)).dom;
    Rat best(0);
    for (const Weight& v : h.vertices) {
      const Rat p = d.inner(v, dom_coroot);
      if (p > best) best = p;
    }
    CHECK(rat_is_integer(best), "coordinate bound integral");
    h.coord_bounds[i] = to_i64(mpz_class(best.get_num()));
  }

  // coweight prefilters: row i of the doubled gamma-coordinate map with the
  // max over vertices as bound
  for (int i = 0; i < kRank; ++i) {
    HullFunctional f;
    for (int m = 0; m < kRank; ++m) f.omega_row[m] = h.gamma2_from_omega[i][m];
    std::int64_t best = 0;
    for (const IVec8& v : h.vert_gamma2) best = std::max(best, v[i]);
    f.bound = best;
    h.base_functionals.push_back(f);
  }
  return h;
}

bool usmall(const Context& c, const USmallHull& h, const IVec8& mu) {
  for (int i = 0; i < kRank; ++i) CHECK(mu[i] >= 0, "usmall argument dominant");
  (void)c;
  return lp_feasible(hull_lp(h, gamma2_of(h, mu))).feasible;
}

UsmallCertificate usmall_certified(const Context& c, const USmallHull& h, const IVec8& mu) {
  for (int i = 0; i < kRank; ++i) CHECK(mu[i] >= 0, "usmall argument dominant");
  (void)c;
  const int nv = static_cast<int>(h.vert_gamma2.size());
  const LpFeasibility r = lp_feasible(hull_lp(h, gamma2_of(h, mu)));
  UsmallCertificate cert;
  cert.inside = r.feasible;
  if (r.feasible) {
    cert.lambda.assign(r.x.begin(), r.x.begin() + nv);
    cert.correction.assign(r.x.begin() + nv, r.x.begin() + nv + kRank);
  } else {
    cert.functional.assign(r.farkas.begin(), r.farkas.begin() + kRank);
    cert.bound = -r.farkas[kRank];
  }
  return cert;
}

std::optional<std::pair<Rat, Rat>> hull_ray_interval(const Context& c, const USmallHull& h,
                                                     const IVec8& base_omega,
                                                     const IVec8& dir_omega) {
  const RayDecision d = decide_ray(c, h, base_omega, dir_omega);
  if (!d.hit) return std::nullopt;
  return std::make_pair(d.lo, d.hi);
}

std::uint64_t enumerate_usmall_box(const Context& c, const USmallHull& h, const IVec8& lo,
                                   const IVec8& hi,
                                   const std::function<void(const IVec8&)>& sink, int threads) {
  ScanParams sp{lo, hi};
  for (int i = 0; i < kRank; ++i) {
    sp.lo[i] = std::max<std::int64_t>(lo[i], 0);
    sp.hi[i] = std::min(hi[i], h.coord_bounds[i]);
    if (sp.lo[i] > sp.hi[i]) return 0;
  }

#ifdef _OPENMP
  const int nthreads = threads > 0 ? threads : omp_get_max_threads();
#else
  const int nthreads = 1;
  (void)threads;
#endif

  const std::int64_t a_lo = sp.lo[0], a_hi = sp.hi[0];
  const int ntasks = static_cast<int>(a_hi - a_lo + 1);
  if (nthreads <= 1 || ntasks <= 1) {
    Scanner s(c, h, sp, base_cache(h));
    if (sink) return s.run([&](const IVec8& v) { sink(v); });
    return s.run([](const IVec8&) {});
  }

  std::vector<std::uint64_t> counts(ntasks, 0);
  std::vector<std::vector<IVec8>> members(sink ? ntasks : 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(nthreads)
#endif
  for (int t = 0; t < ntasks; ++t) {
    ScanParams tp = sp;
    tp.lo[0] = tp.hi[0] = a_lo + t;
    Scanner s(c, h, tp, base_cache(h));
    if (sink) {
      counts[t] = s.run([&](const IVec8& v) { members[t].push_back(v); });
    } else {
      counts[t] = s.run([](const IVec8&) {});
    }
  }
  std::uint64_t total = 0;
  for (int t = 0; t < ntasks; ++t) {
    total += counts[t];
    if (sink)
      for (const IVec8& v : members[t]) sink(v);
  }
  return total;
}

std::uint64_t enumerate_usmall(const Context& c, const USmallHull& h,
                               const std::function<void(const IVec8&)>& sink, int threads) {
  IVec8 lo{};
  return enumerate_usmall_box(c, h, lo, h.coord_bounds, sink, threads);
}

std::uint64_t enumerate_usmall_reference(const Context& c, const USmallHull& h, const IVec8& lo,
                                         const IVec8& hi,
                                         const std::function<void(const IVec8&)>& sink) {
  IVec8 clo, chi;
  for (int i = 0; i < kRank; ++i) {
    clo[i] = std::max<std::int64_t>(lo[i], 0);
    chi[i] = std::min(hi[i], h.coord_bounds[i]);
    if (clo[i] > chi[i]) return 0;
  }
  std::uint64_t count = 0;
  IVec8 coords{};
  const FunctionalSet fs = base_cache(h);
  auto rec = [&](auto&& self, int depth, std::vector<std::int64_t> partial) -> void {
    if (depth == kRank) {
      if (!RootDatum::ktype_parity(coords)) return;
      if (!usmall(c, h, coords)) return;
      ++count;
      if (sink) sink(coords);
      return;
    }
    for (std::int64_t v = clo[depth]; v <= chi[depth]; ++v) {
      coords[depth] = v;
      bool pruned = false;
      std::vector<std::int64_t> next = partial;
      for (size_t f = 0; f < fs.rows.size(); ++f) {
        next[f] = partial[f] + v * fs.rows[f][depth];
        if (next[f] > fs.bounds[f]) {
          pruned = true;
          break;
        }
      }
      if (!pruned) self(self, depth + 1, next);
    }
    coords[depth] = 0;
  };
  rec(rec, 0, std::vector<std::int64_t>(fs.rows.size(), 0));
  return count;
}

PencilReport mp(const Context& c, const USmallHull& h, const KType& mu, std::int64_t guard_n) {
  CHECK(guard_n >= 0, "guard_n nonnegative");
  PencilReport r;
  r.mu = mu;

  const auto spin_at = [&](std::int64_t n) {
    IVec8 m = mu.coords;
    m[6] += n;
    m[7] += n;  // + n*beta
    return Rat(static_cast<long>(spin_sq2_i64(c, m)), 2);
  };

  std::int64_t last_usmall = -1;
  if (usmall(c, h, mu.coords)) {
    const auto iv = hull_ray_interval(c, h, mu.coords, c.beta_omega);
    CHECK(iv.has_value(), "pencil base is in the hull");
    last_usmall = to_i64(rat_floor(iv->second));
    CHECK(last_usmall >= 0, "pencil interval contains n = 0");
  }

  const std::int64_t n_max = (last_usmall < 0 ? 0 : last_usmall) + guard_n;
  for (std::int64_t n = 0; n <= n_max; ++n) {
    PencilEntry e;
    e.n = n;
    e.spin_sq = spin_at(n);
    e.u_small = last_usmall >= 0 ? (n <= last_usmall) : false;
    r.entries.push_back(std::move(e));
  }

  if (last_usmall < 0) {
    r.mp_sq = r.entries[0].spin_sq;
    r.argmin_n = {0};
  } else {
    Rat best = r.entries[0].spin_sq;
    for (std::int64_t n = 1; n <= last_usmall; ++n)
      if (r.entries[n].spin_sq < best) best = r.entries[n].spin_sq;
    r.mp_sq = best;
    for (std::int64_t n = 0; n <= last_usmall; ++n)
      if (r.entries[n].spin_sq == best) r.argmin_n.push_back(n);
  }

  // non-increasing, then non-decreasing
  r.unimodal = true;
  bool rising = false;
  for (size_t i = 1; i < r.entries.size(); ++i) {
    if (r.entries[i].spin_sq > r.entries[i - 1].spin_sq) {
      rising = true;
    } else if (r.entries[i].spin_sq < r.entries[i - 1].spin_sq && rising) {
      r.unimodal = false;
      break;
    }
  }
  return r;
}

UnimodalityReport unimodality_scan(const Context& c, const USmallHull& h,
                                   std::int64_t max_height, int threads) {
  UnimodalityReport rep;
  rep.max_height = max_height;
  std::vector<IVec8> members;
  {
    // height functional as one more prefilter
    IVec8 hi;
    for (int i = 0; i < kRank; ++i) hi[i] = std::min(h.coord_bounds[i], max_height);
    IVec8 lo{};
    enumerate_usmall_box(
        c, h, lo, hi,
        [&](const IVec8& v) {
          std::int64_t s = 0;
          for (int i = 0; i < kRank; ++i) s += v[i];
          if (s <= max_height) members.push_back(v);
        },
        threads);
  }
  rep.scanned = members.size();
  std::vector<char> bad(members.size(), 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads > 0 ? threads : omp_get_max_threads())
#endif
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(members.size()); ++i) {
    const PencilReport pr = mp(c, h, KType(members[i]), 0);
    bad[i] = pr.unimodal ? 0 : 1;
  }
  for (size_t i = 0; i < members.size(); ++i)
    if (bad[i]) rep.violations.push_back(KType(members[i]));
  return rep;
}

}  // namespace eix
