// Compares the serial reference implementations against the OpenMP kernels
// on identical inputs and reports timings. Results must match exactly; a
// mismatch aborts with a nonzero exit.

#include <chrono>
#include <iostream>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "eix/hjsearch.hpp"

using namespace eix;
using Clock = std::chrono::steady_clock;

namespace {

double secs(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Reference spin norm through the rational Weight pipeline.
Rat spin_sq_reference(const Context& c, const IVec8& mu) {
  const Weight muw = weight_i64(mu, Basis::Omega);
  Rat best(-1);
  for (const CosetRep& r : c.w1) {
    const Weight x(vec_sub(c.datum.euclid(muw), c.datum.euclid(r.rho_n)), Basis::Euclidean);
    const Weight dom = dominantize_k(c.datum, x).dom;
    const Weight shifted(vec_add(c.datum.euclid(dom), c.datum.rho_c), Basis::Euclidean);
    const Rat v = c.datum.norm_sq(shifted);
    if (best < 0 || v < best) best = v;
  }
  return best;
}

std::vector<IVec8> sample_ktypes(std::int64_t count) {
  // deterministic small dominant K-types
  std::vector<IVec8> out;
  IVec8 v{};
  for (std::int64_t n = 0; static_cast<std::int64_t>(out.size()) < count; ++n) {
    std::int64_t x = n;
    for (int i = 0; i < kRank; ++i) {
      v[i] = x % 3;
      x /= 3;
    }
    if (RootDatum::ktype_parity(v)) out.push_back(v);
  }
  return out;
}

}  // namespace

int main() {
  const Context ctx = Context::create();
  const USmallHull hull = build_usmall_hull(ctx);
#ifdef _OPENMP
  const int threads = omp_get_max_threads();
#else
  const int threads = 1;
#endif
  std::cout << "threads available: " << threads << "\n\n";
  bool ok = true;

  {
    const auto mus = sample_ktypes(400);
    auto t0 = Clock::now();
    std::vector<Rat> ref;
    for (const IVec8& m : mus) ref.push_back(spin_sq_reference(ctx, m));
    const double t_ref = secs(t0);

    t0 = Clock::now();
    std::vector<std::int64_t> fast(mus.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(mus.size()); ++i)
      fast[i] = spin_sq2_i64(ctx, mus[i]);
    const double t_fast = secs(t0);

    for (size_t i = 0; i < mus.size(); ++i)
      if (Rat(static_cast<long>(fast[i]), 2) != ref[i]) ok = false;
    std::cout << "spin norm, 400 k-types:   reference " << t_ref << " s,  kernel " << t_fast
              << " s,  speedup " << t_ref / t_fast << (ok ? "" : "  MISMATCH") << "\n";
  }

  {
    // u-small census on a sub-box around the origin
    IVec8 lo{}, hi;
    for (int i = 0; i < kRank; ++i) hi[i] = 3;
    hi[7] = 12;
    auto t0 = Clock::now();
    const std::uint64_t ref = enumerate_usmall_reference(ctx, hull, lo, hi, nullptr);
    const double t_ref = secs(t0);
    t0 = Clock::now();
    const std::uint64_t fast = enumerate_usmall_box(ctx, hull, lo, hi, nullptr, 0);
    const double t_fast = secs(t0);
    if (ref != fast) ok = false;
    std::cout << "u-small census, sub-box:  reference " << t_ref << " s,  kernel " << t_fast
              << " s,  speedup " << t_ref / t_fast << "  (" << ref << " members"
              << (ref == fast ? ")" : ", MISMATCH)") << "\n";
  }

  {
    // table-style spin-norm batch: one row of pencil values
    IVec8 mu{};
    mu[7] = 8;
    auto t0 = Clock::now();
    Rat acc(0);
    for (std::int64_t n = 0; n <= 40; ++n) {
      IVec8 m = mu;
      m[6] += n;
      m[7] += n;
      acc += spin_sq_reference(ctx, m);
    }
    const double t_ref = secs(t0);
    t0 = Clock::now();
    std::int64_t acc2 = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(+ : acc2)
#endif
    for (std::int64_t n = 0; n <= 40; ++n) {
      IVec8 m = mu;
      m[6] += n;
      m[7] += n;
      acc2 += spin_sq2_i64(ctx, m);
    }
    const double t_fast = secs(t0);
    if (acc != Rat(static_cast<long>(acc2), 2)) ok = false;
    std::cout << "pencil batch, 41 values:  reference " << t_ref << " s,  kernel " << t_fast
              << " s,  speedup " << t_ref / t_fast << (ok ? "" : "  MISMATCH") << "\n";
  }

  std::cout << "\n" << (ok ? "all kernel results match the reference" : "MISMATCH DETECTED")
            << "\n";
  return ok ? 0 : 1;
}
