#ifndef EIX_ROOTDATA_HPP
#define EIX_ROOTDATA_HPP

#include <vector>

#include "eix/weight.hpp"

namespace eix {

/// The fixed root datum of E8(-24): the E8 root system with the marked
/// compact subsystem of type E7+A1, the invariant form normalized so every
/// root has squared length 2, and exact conversion matrices between the
/// four coordinate systems.
///
/// Immutable after construction; every method is const and thread-safe.
struct RootDatum {
  // Simple roots, Euclidean coordinates.
  std::array<Vec8, kRank> simple_g;  // alpha_1..alpha_8
  std::array<Vec8, kRank> simple_k;  // gamma_1..gamma_8 (gamma_8 = highest root)

  std::vector<Vec8> positive_g;       // 120 positive roots of g
  std::vector<Vec8> positive_k;       // 64 positive roots of k
  std::vector<Vec8> noncompact_pos;   // 56 noncompact positive roots

  Vec8 beta;   // highest noncompact root
  Vec8 rho;    // half sum of positive g-roots
  Vec8 rho_c;  // half sum of positive k-roots

  IMat8 cartan_g;  // <alpha_j, alpha_i~> pairings (symmetric, simply laced)
  IMat8 cartan_k;

  Mat8 gram_zeta;   // Gram matrix of the zeta basis (= inverse g-Cartan)
  Mat8 gram_omega;  // Gram matrix of the omega basis (= inverse k-Cartan)

  // to_euclid[b] maps coordinates in basis b to Euclidean coordinates;
  // from_euclid[b] is its inverse.
  std::array<Mat8, 4> to_euclid;
  std::array<Mat8, 4> from_euclid;

  /// Construct the fixed datum. Internal consistency failures abort via
  /// std::logic_error; there are no recoverable error states.
  static RootDatum build();

  /// Same point, coordinates rewritten in the target basis.
  Weight convert(const Weight& x, Basis target) const;

  Vec8 euclid(const Weight& x) const { return convert(x, Basis::Euclidean).coords; }

  /// Invariant symmetric bilinear form, normalized to <r,r> = 2 on roots.
  Rat inner(const Weight& x, const Weight& y) const;
  Rat norm_sq(const Weight& x) const { return inner(x, x); }

  /// 2<x, rho_check> where rho_check is the sum of the fundamental
  /// coweights of g (coroots are identified with roots here).
  Rat twice_rho_check_pairing(const Weight& x) const;

  /// True for points equal as elements of t_f* regardless of basis tags.
  bool same_point(const Weight& x, const Weight& y) const {
    return vec_eq(euclid(x), euclid(y));
  }

  bool is_positive_root_g(const Vec8& e) const;

  /// True iff e is a root of the compact subsystem (either sign).
  bool is_root_k(const Vec8& e) const;

  /// Parity condition selecting K-types among dominant integral k-weights:
  /// coordinates b+e+g+h must be even in the omega basis.
  static bool ktype_parity(const IVec8& omega_coords) {
    return ((omega_coords[1] + omega_coords[4] + omega_coords[6] +
             omega_coords[7]) & 1) == 0;
  }
};

}  // namespace eix

#endif
