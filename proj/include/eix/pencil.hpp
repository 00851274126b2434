#ifndef EIX_PENCIL_HPP
#define EIX_PENCIL_HPP

#include <functional>
#include <optional>

#include "eix/dirac.hpp"
#include "eix/lp.hpp"

namespace eix {

/// A separating functional for the reduced hull polyhedron: a dominant
/// coweight u (doubled simple-root-coordinate pairings) with
/// max over vertices of <v,u> = bound, so <x,u> > bound proves x outside.
/// omega_row is the same functional as nonnegative integer pairings
/// against omega coordinates, usable for partial-sum pruning.
struct HullFunctional {
  IVec8 omega_row{};
  std::int64_t bound = 0;
};

/// The u-small convex hull, reduced for dominant arguments: a dominant mu
/// is u-small iff some convex combination of the dominantized vertices
/// dominates it in the positive-root order, an exact rational LP.
struct USmallHull {
  std::vector<Weight> vertices;       // the 120 dominantized 2 rho_n^(j)
  IVec8 coord_bounds{};               // per-omega-coordinate upper bounds
  std::vector<IVec8> vert_gamma2;     // deduplicated doubled gamma-coords
  IMat8 gamma2_from_omega{};          // doubled k-simple-root coordinates
  std::vector<HullFunctional> base_functionals;  // the 8 coweight prefilters
};

USmallHull build_usmall_hull(const Context& c);

/// Exact hull membership for a dominant weight in omega coordinates.
bool usmall(const Context& c, const USmallHull& h, const IVec8& mu);
inline bool usmall(const Context& c, const USmallHull& h, const KType& mu) {
  return usmall(c, h, mu.coords);
}

/// Membership decision together with its exact certificate.
struct UsmallCertificate {
  bool inside = false;
  // inside: convex weights on vert_gamma2 plus the nonnegative root
  // correction c with sum lambda_i v_i - c = mu (doubled gamma coords).
  std::vector<Rat> lambda;
  std::vector<Rat> correction;
  // outside: u >= 0 with <v,u> <= bound for all vertices and <mu,u> > bound.
  std::vector<Rat> functional;
  Rat bound;
};
UsmallCertificate usmall_certified(const Context& c, const USmallHull& h, const IVec8& mu);

/// Exact [lo, hi] such that base + t*dir lies in the reduced hull, or
/// nothing if the ray misses it entirely (t ranges over t >= 0).
std::optional<std::pair<Rat, Rat>> hull_ray_interval(const Context& c, const USmallHull& h,
                                                     const IVec8& base_omega,
                                                     const IVec8& dir_omega);

/// Streaming enumeration of all u-small K-types (dominant, parity-even,
/// in the hull), in lexicographic order.
///
/// The kernel version prunes with cached separating functionals and decides
/// whole rays by two optimizing LPs; the reference version tests one
/// candidate at a time and exists to validate the kernel on sub-boxes.
std::uint64_t enumerate_usmall(const Context& c, const USmallHull& h,
                               const std::function<void(const IVec8&)>& sink,
                               int threads = 0);
std::uint64_t enumerate_usmall_box(const Context& c, const USmallHull& h, const IVec8& lo,
                                   const IVec8& hi,
                                   const std::function<void(const IVec8&)>& sink,
                                   int threads = 0);
std::uint64_t enumerate_usmall_reference(const Context& c, const USmallHull& h, const IVec8& lo,
                                         const IVec8& hi,
                                         const std::function<void(const IVec8&)>& sink);

struct PencilEntry {
  std::int64_t n = 0;
  Rat spin_sq;
  bool u_small = false;
};

struct PencilReport {
  KType mu;
  std::vector<PencilEntry> entries;  // n ascending
  Rat mp_sq;
  std::vector<std::int64_t> argmin_n;
  bool unimodal = false;
};

/// Spin norms along the Vogan pencil mu + n*beta. For u-small mu the
/// minimum is taken over the u-small members; entries run guard_n past the
/// u-small boundary. For u-large mu the minimum is the spin norm of mu
/// itself.
PencilReport mp(const Context& c, const USmallHull& h, const KType& mu,
                std::int64_t guard_n = 2);

struct UnimodalityReport {
  std::int64_t max_height = 0;
  std::uint64_t scanned = 0;
  std::vector<KType> violations;  // pencils whose u-small segment is not unimodal
};

/// Scan every u-small K-type with coordinate sum <= max_height and report
/// any pencil whose u-small spin-norm segment fails to decrease then
/// increase. Reports only; never asserts the pattern.
UnimodalityReport unimodality_scan(const Context& c, const USmallHull& h,
                                   std::int64_t max_height, int threads = 0);

}  // namespace eix

#endif
